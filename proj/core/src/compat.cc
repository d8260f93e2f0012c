/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/compat.hh>
#include <homcompat/errors.hh>

#include <functional>

using std::string;
using std::to_string;
using std::vector;

using namespace homcompat;

auto homcompat::cyclic_shift_action(const HomPoset & p) -> PosetAction
{
    PosetAction result;
    for (int j = 1 ; j < p.r() ; ++j)
        result.non_identity.push_back(p.shift_permutation(j));
    return result;
}

auto homcompat::build_compat_graph(int size, const PosetAction & action,
        const std::function<bool (int, int)> & comparable_positions) -> Graph
{
    if (size > compat_vertex_cap)
        throw CapExceeded("compatibility graph", std::uint64_t(size), std::uint64_t(compat_vertex_cap));

    vector<Bitset> rows(size, Bitset(size));
    for (int x = 0 ; x < size ; ++x)
        for (int y = 0 ; y < size ; ++y) {
            if (x == y)
                continue;
            for (auto & g : action.non_identity)
                if (comparable_positions(x, g[y])) {
                    rows[x].set(y);
                    break;
                }
        }

    // The rule is evaluated once per ordered pair; it must come out symmetric.
    for (int x = 0 ; x < size ; ++x)
        for (int y = rows[x].first() ; y != -1 ; y = rows[x].next(y))
            if (! rows[y].test(x))
                throw InternalError("compatibility rule is not symmetric on (" + to_string(x) + "," + to_string(y) + ")");

    // The shift action on Hom posets is free, so no element is comparable with
    // a non-trivial shift of itself; such a loop candidate means a bug upstream.
    for (int x = 0 ; x < size ; ++x)
        for (auto & g : action.non_identity)
            if (comparable_positions(x, g[x]))
                throw InternalError("element " + to_string(x) + " is comparable with its own shift");

    return Graph::from_rows(std::move(rows));
}

auto homcompat::build_compat(std::shared_ptr<const HomPoset> p) -> CompatGraph
{
    auto & elements = p->elements();
    auto graph = build_compat_graph(p->size(), cyclic_shift_action(*p), [&] (int a, int b) {
            return comparable(elements[a], elements[b]);
            });

    vector<string> labels;
    labels.reserve(elements.size());
    for (auto & e : elements)
        labels.push_back(e.to_string());

    return CompatGraph{ std::move(graph).with_labels(std::move(labels)), std::move(p) };
}

auto homcompat::induced_map(const vector<int> & psi, const HomPoset & from, const HomPoset & to) -> vector<int>
{
    if (from.r() != to.r())
        throw InvalidInput("induced map between posets with r=" + to_string(from.r()) + " and r=" + to_string(to.r()));
    if (auto bad = first_non_homomorphic_edge(from.host(), to.host(), psi))
        throw InvalidInput("not a homomorphism: edge (" + to_string(bad->first) + "," + to_string(bad->second)
                + ") maps to non-edge (" + to_string(psi[bad->first]) + "," + to_string(psi[bad->second]) + ")");

    vector<int> result;
    result.reserve(from.size());
    for (auto & m : from.elements()) {
        MultiHom image;
        for (auto & part : m.parts) {
            Bitset mapped(to.host().size());
            for (int v = part.first() ; v != -1 ; v = part.next(v))
                mapped.set(psi[v]);
            image.parts.push_back(std::move(mapped));
        }
        auto target = to.find(image);
        if (! target)
            throw InternalError("image " + image.to_string() + " of " + m.to_string() + " is missing from the target poset");
        result.push_back(*target);
    }
    return result;
}
