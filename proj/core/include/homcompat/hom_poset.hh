/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_HOM_POSET_HH
#define HOMCOMPAT_GUARD_HOM_POSET_HH 1

#include <homcompat/bitset.hh>
#include <homcompat/graph.hh>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace homcompat
{
    /**
     * An r-tuple (A_1, ..., A_r) of non-empty vertex sets of a host graph H
     * with A_i x A_j inside E(H) for every i != j, i.e. one multi-homomorphism
     * from K_r to H. Parts are bitsets over V(H), stored at positions 0..r-1.
     */
    struct MultiHom
    {
        std::vector<Bitset> parts;

        auto r() const -> int
        {
            return int(parts.size());
        }

        /// |A_1 u ... u A_r|
        auto support_size() const -> int;

        /// "[[0],[1,2]]", 0-based host vertex indices.
        auto to_string() const -> std::string;

        static auto from_indices(int host_size, const std::vector<std::vector<int>> & parts) -> MultiHom;

        friend auto operator== (const MultiHom &, const MultiHom &) -> bool = default;
    };

    /// Canonical order: compare parts left to right, each part as its sorted
    /// list of vertex indices, lexicographically.
    auto canonical_less(const MultiHom & a, const MultiHom & b) -> bool;

    struct MultiHomHash
    {
        auto operator() (const MultiHom & m) const -> std::size_t
        {
            std::size_t h = 0;
            for (auto & p : m.parts)
                h = h * 1000003 ^ p.hash();
            return h;
        }
    };

    /// Non-empty parts, pairwise disjoint, pairwise completely joined in h.
    auto is_valid_multihom(const Graph & h, const MultiHom & m) -> bool;

    /// Coordinatewise inclusion. Throws InvalidInput when the tuple lengths differ.
    auto leq(const MultiHom & a, const MultiHom & b) -> bool;

    auto comparable(const MultiHom & a, const MultiHom & b) -> bool;

    /// Cyclic shift by j (reduced mod r): position i of the result holds part
    /// (i + j) mod r of a, so shift((A_1, A_2), 1) = (A_2, A_1).
    auto shift(const MultiHom & a, int j) -> MultiHom;

    /// shift(a, 0), ..., shift(a, r - 1).
    auto orbit(const MultiHom & a) -> std::vector<MultiHom>;

    struct HomEnumerationOptions
    {
        std::uint64_t cap = 1'000'000;
    };

    /**
     * The poset Hom_p(K_r, H), with its elements in canonical order and an
     * index from element to position. Immutable once enumerated.
     */
    class HomPoset
    {
        private:
            Graph _host;
            int _r = 0;
            std::vector<MultiHom> _elements;
            std::unordered_map<MultiHom, int, MultiHomHash> _index;

        public:
            HomPoset(Graph host, int r, std::vector<MultiHom> elements);

            auto host() const -> const Graph &
            {
                return _host;
            }

            auto r() const -> int
            {
                return _r;
            }

            auto size() const -> int
            {
                return int(_elements.size());
            }

            auto elements() const -> const std::vector<MultiHom> &
            {
                return _elements;
            }

            auto operator[] (int i) const -> const MultiHom &
            {
                return _elements[i];
            }

            auto find(const MultiHom & m) const -> std::optional<int>;

            /// shift_permutation(j)[i] is the position of shift(element i, j).
            auto shift_permutation(int j) const -> std::vector<int>;

            /// Number of elements by support size |A_1 u ... u A_r|.
            auto support_histogram() const -> std::map<int, long>;
    };

    /**
     * Enumerate Hom_p(K_r, h) by growing A_1, then A_2 inside the common
     * neighbourhood of A_1, and so on. Throws InvalidInput for r < 2 and
     * CapExceeded when the element count would pass options.cap.
     */
    auto enumerate_hom(const Graph & h, int r, const HomEnumerationOptions & options = {}) -> std::shared_ptr<const HomPoset>;

    /// Cheap upper bound on |Hom_p(K_r, h)|, saturating once it passes stop_above.
    auto projected_hom_count(const Graph & h, int r, std::uint64_t stop_above) -> std::uint64_t;
}

#endif
