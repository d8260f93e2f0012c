/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_COMPAT_HH
#define HOMCOMPAT_GUARD_COMPAT_HH 1

#include <homcompat/graph.hh>
#include <homcompat/hom_poset.hh>

#include <functional>
#include <memory>
#include <vector>

namespace homcompat
{
    /**
     * A group acting on poset positions, given as one permutation per non-identity
     * group element. Only the cyclic shift action is built here, but the
     * compatibility graph construction only needs this shape.
     */
    struct PosetAction
    {
        std::vector<std::vector<int>> non_identity;
    };

    auto cyclic_shift_action(const HomPoset & p) -> PosetAction;

    /// The compatibility graph of a Hom poset: vertex i is element i of source,
    /// labelled with its MultiHom description.
    struct CompatGraph
    {
        Graph graph;
        std::shared_ptr<const HomPoset> source;
    };

    /// x ~ y iff x != y and some non-identity shift of y is comparable with x.
    auto build_compat(std::shared_ptr<const HomPoset> p) -> CompatGraph;

    /// Largest compatibility graph built; adjacency is stored densely.
    constexpr int compat_vertex_cap = 40'000;

    /// Same rule, with comparability and the action supplied separately.
    /// Throws CapExceeded beyond compat_vertex_cap vertices.
    auto build_compat_graph(int size, const PosetAction & action,
            const std::function<bool (int, int)> & comparable_positions) -> Graph;

    /**
     * The map C(Hom(K_r, H)) -> C(Hom(K_r, K)) induced by a homomorphism
     * psi : H -> K, sending (A_1, ..., A_r) to (psi(A_1), ..., psi(A_r)).
     * Throws InvalidInput naming an edge when psi is not a homomorphism.
     */
    auto induced_map(const std::vector<int> & psi, const HomPoset & from, const HomPoset & to) -> std::vector<int>;
}

#endif
