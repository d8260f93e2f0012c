/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_BITSET_HH
#define HOMCOMPAT_GUARD_BITSET_HH 1

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace homcompat
{
    /**
     * A fixed-width set of small non-negative integers, stored as 64-bit
     * words. Width is chosen at construction; binary operations require
     * equal widths.
     */
    class Bitset
    {
        private:
            using Word = std::uint64_t;
            static constexpr int bits_per_word = 64;

            int _width = 0;
            std::vector<Word> _words;

            auto _trim() -> void
            {
                if (_width % bits_per_word != 0 && ! _words.empty())
                    _words.back() &= (Word{1} << (_width % bits_per_word)) - 1;
            }

        public:
            Bitset() = default;

            explicit Bitset(int width) :
                _width(width),
                _words((width + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            static auto full(int width) -> Bitset
            {
                Bitset result(width);
                for (auto & w : result._words)
                    w = ~Word{0};
                result._trim();
                return result;
            }

            auto width() const -> int
            {
                return _width;
            }

            auto set(int i) -> void
            {
                _words[i / bits_per_word] |= Word{1} << (i % bits_per_word);
            }

            auto reset(int i) -> void
            {
                _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word));
            }

            auto test(int i) const -> bool
            {
                return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1;
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto any() const -> bool
            {
                return ! empty();
            }

            /// Lowest set index, or -1.
            auto first() const -> int
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i])
                        return int(i) * bits_per_word + std::countr_zero(_words[i]);
                return -1;
            }

            /// Lowest set index strictly greater than i, or -1.
            auto next(int i) const -> int
            {
                ++i;
                if (i >= _width)
                    return -1;
                std::size_t wi = i / bits_per_word;
                Word w = _words[wi] & (~Word{0} << (i % bits_per_word));
                while (true) {
                    if (w)
                        return int(wi) * bits_per_word + std::countr_zero(w);
                    if (++wi == _words.size())
                        return -1;
                    w = _words[wi];
                }
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            /// Remove every element of other.
            auto subtract(const Bitset & other) -> Bitset &
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            friend auto operator& (Bitset a, const Bitset & b) -> Bitset
            {
                a &= b;
                return a;
            }

            friend auto operator| (Bitset a, const Bitset & b) -> Bitset
            {
                a |= b;
                return a;
            }

            auto to_indices() const -> std::vector<int>
            {
                std::vector<int> result;
                result.reserve(count());
                for (int i = first() ; i != -1 ; i = next(i))
                    result.push_back(i);
                return result;
            }

            static auto from_indices(int width, const std::vector<int> & indices) -> Bitset
            {
                Bitset result(width);
                for (auto i : indices)
                    result.set(i);
                return result;
            }

            /// Lexicographic comparison of the sorted member lists.
            friend auto lex_less(const Bitset & a, const Bitset & b) -> bool
            {
                int i = a.first(), j = b.first();
                while (i != -1 && j != -1) {
                    if (i != j)
                        return i < j;
                    i = a.next(i);
                    j = b.next(j);
                }
                return i == -1 && j != -1;
            }

            auto hash() const -> std::size_t
            {
                std::size_t h = std::size_t(_width);
                for (auto w : _words)
                    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                return h;
            }

            friend auto operator== (const Bitset &, const Bitset &) -> bool = default;
    };
}

#endif
