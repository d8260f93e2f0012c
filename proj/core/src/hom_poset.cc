/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/hom_poset.hh>
#include <homcompat/errors.hh>

#include <algorithm>
#include <functional>

using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

using namespace homcompat;

auto MultiHom::support_size() const -> int
{
    if (parts.empty())
        return 0;
    Bitset all = parts[0];
    for (auto & p : parts)
        all |= p;
    return all.count();
}

auto MultiHom::to_string() const -> string
{
    string result = "[";
    for (std::size_t i = 0 ; i < parts.size() ; ++i) {
        if (i > 0)
            result += ",";
        result += "[";
        bool first = true;
        for (auto v : parts[i].to_indices()) {
            if (! first)
                result += ",";
            result += std::to_string(v);
            first = false;
        }
        result += "]";
    }
    return result + "]";
}

auto MultiHom::from_indices(int host_size, const vector<vector<int>> & parts) -> MultiHom
{
    MultiHom result;
    for (auto & p : parts) {
        for (auto v : p)
            if (v < 0 || v >= host_size)
                throw InvalidInput("vertex " + std::to_string(v) + " out of range for host of size " + std::to_string(host_size));
        result.parts.push_back(Bitset::from_indices(host_size, p));
    }
    return result;
}

auto homcompat::canonical_less(const MultiHom & a, const MultiHom & b) -> bool
{
    for (std::size_t i = 0 ; i < a.parts.size() && i < b.parts.size() ; ++i) {
        if (lex_less(a.parts[i], b.parts[i]))
            return true;
        if (lex_less(b.parts[i], a.parts[i]))
            return false;
    }
    return a.parts.size() < b.parts.size();
}

auto homcompat::is_valid_multihom(const Graph & h, const MultiHom & m) -> bool
{
    for (auto & p : m.parts)
        if (p.width() != h.size() || p.empty())
            return false;

    for (int i = 0 ; i < m.r() ; ++i)
        for (int j = i + 1 ; j < m.r() ; ++j) {
            if (m.parts[i].intersects(m.parts[j]))
                return false;
            for (int v = m.parts[i].first() ; v != -1 ; v = m.parts[i].next(v))
                if (! m.parts[j].is_subset_of(h.neighbourhood(v)))
                    return false;
        }
    return true;
}

auto homcompat::leq(const MultiHom & a, const MultiHom & b) -> bool
{
    if (a.r() != b.r())
        throw InvalidInput("comparing multi-homomorphisms with r=" + to_string(a.r()) + " and r=" + to_string(b.r()));
    for (int i = 0 ; i < a.r() ; ++i)
        if (! a.parts[i].is_subset_of(b.parts[i]))
            return false;
    return true;
}

auto homcompat::comparable(const MultiHom & a, const MultiHom & b) -> bool
{
    return leq(a, b) || leq(b, a);
}

auto homcompat::shift(const MultiHom & a, int j) -> MultiHom
{
    int r = a.r();
    int s = ((j % r) + r) % r;
    MultiHom result;
    result.parts.reserve(r);
    for (int i = 0 ; i < r ; ++i)
        result.parts.push_back(a.parts[(i + s) % r]);
    return result;
}

auto homcompat::orbit(const MultiHom & a) -> vector<MultiHom>
{
    vector<MultiHom> result;
    for (int j = 0 ; j < a.r() ; ++j)
        result.push_back(shift(a, j));
    return result;
}

HomPoset::HomPoset(Graph host, int r, vector<MultiHom> elements) :
    _host(std::move(host)),
    _r(r),
    _elements(std::move(elements))
{
    std::sort(_elements.begin(), _elements.end(), canonical_less);
    _index.reserve(_elements.size());
    for (int i = 0 ; i < int(_elements.size()) ; ++i) {
        if (_elements[i].r() != _r)
            throw InvalidInput("element " + _elements[i].to_string() + " does not have " + to_string(_r) + " parts");
        if (! is_valid_multihom(_host, _elements[i]))
            throw InvalidInput("element " + _elements[i].to_string() + " is not a Hom poset element of the host");
        if (! _index.emplace(_elements[i], i).second)
            throw InvalidInput("duplicate element " + _elements[i].to_string());
    }
}

auto HomPoset::find(const MultiHom & m) const -> optional<int>
{
    auto it = _index.find(m);
    if (it == _index.end())
        return std::nullopt;
    return it->second;
}

auto HomPoset::shift_permutation(int j) const -> vector<int>
{
    vector<int> result(_elements.size());
    for (int i = 0 ; i < size() ; ++i) {
        auto target = find(shift(_elements[i], j));
        if (! target)
            throw InternalError("shift of " + _elements[i].to_string() + " is not in the poset");
        result[i] = *target;
    }
    return result;
}

auto HomPoset::support_histogram() const -> std::map<int, long>
{
    std::map<int, long> result;
    for (auto & e : _elements)
        ++result[e.support_size()];
    return result;
}

namespace
{
    auto saturating_add(uint64_t a, uint64_t b) -> uint64_t
    {
        return a + b < a ? UINT64_MAX : a + b;
    }

    auto saturating_pow(uint64_t base, int exponent) -> uint64_t
    {
        uint64_t result = 1;
        for (int i = 0 ; i < exponent ; ++i) {
            if (result > UINT64_MAX / base)
                return UINT64_MAX;
            result *= base;
        }
        return result;
    }

    /**
     * Visit every non-empty subset S of candidates, growing in increasing
     * vertex order. common is the intersection of neighbourhoods of
     * already-fixed vertices; visit receives (S, common n N(S)). When
     * need_common is set, branches whose common neighbourhood is empty are
     * pruned, since no superset can recover. visit returns false to stop.
     */
    auto grow_subsets(const Graph & h, const Bitset & candidates, const Bitset & common, bool need_common,
            const std::function<bool (const Bitset &, const Bitset &)> & visit) -> bool
    {
        Bitset current(h.size());
        std::function<bool (int, const Bitset &)> recurse = [&] (int after, const Bitset & current_common) -> bool {
            for (int v = candidates.next(after) ; v != -1 ; v = candidates.next(v)) {
                Bitset next_common = current_common & h.neighbourhood(v);
                if (need_common && next_common.empty())
                    continue;
                current.set(v);
                if (! visit(current, next_common))
                    return false;
                if (! recurse(v, next_common))
                    return false;
                current.reset(v);
            }
            return true;
        };
        return recurse(-1, common);
    }
}

auto homcompat::projected_hom_count(const Graph & h, int r, uint64_t stop_above) -> uint64_t
{
    if (r < 2)
        throw InvalidInput("r must be at least 2, got " + to_string(r));

    uint64_t total = 0;
    auto all = Bitset::full(h.size());
    grow_subsets(h, all, all, true, [&] (const Bitset &, const Bitset & common) {
        int c = common.count();
        // r = 2 is exact: any non-empty subset of the common neighbourhood.
        // Otherwise each common neighbour joins one of r - 1 parts or none.
        uint64_t branch = r == 2 ? saturating_pow(2, c) - 1 : saturating_pow(uint64_t(r), c);
        total = saturating_add(total, branch);
        return total <= stop_above;
    });
    return total;
}

auto homcompat::enumerate_hom(const Graph & h, int r, const HomEnumerationOptions & options) -> std::shared_ptr<const HomPoset>
{
    if (r < 2)
        throw InvalidInput("r must be at least 2, got " + to_string(r));

    uint64_t projected = projected_hom_count(h, r, options.cap);
    bool must_count = projected > options.cap;

    vector<MultiHom> elements;
    vector<Bitset> parts(r);
    bool over_cap = false;

    std::function<bool (int, const Bitset &)> fill_part = [&] (int i, const Bitset & candidates) -> bool {
        bool last = (i == r - 1);
        return grow_subsets(h, candidates, candidates, ! last, [&] (const Bitset & part, const Bitset & common) {
            parts[i] = part;
            if (last) {
                elements.push_back(MultiHom{ parts });
                if (must_count && elements.size() > options.cap) {
                    over_cap = true;
                    return false;
                }
                return true;
            }
            return fill_part(i + 1, common);
        });
    };

    fill_part(0, Bitset::full(h.size()));
    if (over_cap)
        throw CapExceeded("Hom poset enumeration", projected, options.cap);

    return std::make_shared<const HomPoset>(h, r, std::move(elements));
}
