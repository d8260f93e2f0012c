/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_SOLVERS_HH
#define HOMCOMPAT_GUARD_SOLVERS_HH 1

#include <homcompat/compat.hh>
#include <homcompat/graph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace homcompat
{
    /// colours[v] in 1..colour_count for every vertex v.
    struct Coloring
    {
        std::vector<int> colours;
        int colour_count = 0;

        /// Number of distinct colours actually used.
        auto used_colour_count() const -> int;

        friend auto operator== (const Coloring &, const Coloring &) -> bool = default;
    };

    /// Throws InvalidInput unless c assigns a colour in 1..colour_count to
    /// every vertex of g.
    auto check_covers(const Graph & g, const Coloring & c) -> void;

    /// Lexicographically first monochromatic edge, or nothing if c is proper.
    /// Throws InvalidInput if c does not cover g.
    auto first_violated_edge(const Graph & g, const Coloring & c) -> std::optional<Edge>;

    auto is_proper(const Graph & g, const Coloring & c) -> bool;

    /// First-fit in the given order, which must be a permutation of the vertices.
    auto greedy_coloring(const Graph & g, const std::vector<int> & order) -> Coloring;

    /// Smallest-last order: repeatedly strip a minimum-degree vertex (lowest
    /// index on ties), then reverse.
    auto degeneracy_order(const Graph & g) -> std::vector<int>;

    /// Greedy DSATUR: always colour the uncoloured vertex with the most
    /// distinct neighbouring colours.
    auto dsatur_coloring(const Graph & g) -> Coloring;

    struct CliqueResult
    {
        int size = 0;
        /// Set when the search stopped because size reached the requested cap.
        bool reached_cap = false;
        std::vector<int> witness;
        std::uint64_t nodes = 0;
    };

    /// Exact maximum clique by bitset branch and bound with greedy colouring
    /// bounds. With a cap, stops as soon as a clique of that size is found.
    auto clique_number(const Graph & g, std::optional<int> cap = std::nullopt) -> CliqueResult;

    struct SolverProgress
    {
        int colours_tried;
        std::uint64_t nodes;
    };

    struct ChromaticOptions
    {
        /// Trusted bounds. The clique number is used when lb_hint is absent or smaller.
        std::optional<int> lb_hint, ub_hint;
        std::uint64_t node_budget = 100'000'000;
        std::uint64_t progress_interval = 10'000'000;
        std::function<void (const SolverProgress &)> progress;
    };

    enum class ChromaticStatus
    {
        Exact,
        Inconclusive
    };

    struct ChromaticResult
    {
        ChromaticStatus status = ChromaticStatus::Exact;
        /// On Exact, lower == upper == chromatic number.
        int lower = 0, upper = 0;
        /// A proper colouring with upper colours.
        Coloring witness;
        std::uint64_t nodes = 0;
        int clique_lower_bound = 0;
    };

    /**
     * Exact chromatic number. Tries C = lower bound, lower bound + 1, ... and
     * for each C runs a DSATUR-ordered backtracking search for a proper
     * C-colouring. The search runs on a reduced graph: vertices with fewer
     * than C neighbours, and vertices whose neighbourhood is contained in that
     * of a non-neighbour, are removed first and coloured last, which does not
     * change C-colourability. The first feasible C is returned with
     * its witness. If the node budget runs out the result is Inconclusive,
     * carrying the bracket reached.
     */
    auto exact_chromatic_number(const Graph & g, const ChromaticOptions & options = {}) -> ChromaticResult;

    /// Outcome of a C-colourability search: decided is false when the node
    /// budget ran out, otherwise colouring is set iff a C-colouring exists.
    struct ColourabilityResult
    {
        bool decided = true;
        std::optional<Coloring> colouring;
        std::uint64_t nodes = 0;
    };

    auto find_colouring(const Graph & g, int colours, std::uint64_t node_budget) -> ColourabilityResult;

    /// colour({s_1 < ... < s_k}) = min(s_1, n - 2k + 2) on kneser_graph(n, k).
    /// Needs n >= 2k - 1.
    auto kneser_canonical_coloring(int n, int k) -> Coloring;

    /// Vertex x = (A_1, ..., A_r) of the compatibility graph goes to min A_1.
    auto representative_map(const CompatGraph & cg) -> std::vector<int>;

    /// host_colouring composed with representative_map. Throws InvalidInput
    /// naming the violated host edge if host_colouring is not proper.
    auto pullback_coloring(const CompatGraph & cg, const Coloring & host_colouring) -> Coloring;

    /// Each vertex gets a uniform colour in 1..colours from mt19937_64(seed).
    /// Not proper in general; used to exercise the refuter.
    auto random_coloring(int vertices, int colours, std::uint64_t seed) -> Coloring;
}

#endif
