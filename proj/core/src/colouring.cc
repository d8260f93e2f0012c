/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/solvers.hh>
#include <homcompat/errors.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::to_string;
using std::uint64_t;
using std::vector;

using namespace homcompat;

auto Coloring::used_colour_count() const -> int
{
    return int(std::set<int>(colours.begin(), colours.end()).size());
}

auto homcompat::check_covers(const Graph & g, const Coloring & c) -> void
{
    if (int(c.colours.size()) != g.size())
        throw InvalidInput("colouring covers " + to_string(c.colours.size()) + " vertices, graph has " + to_string(g.size()));
    for (int v = 0 ; v < g.size() ; ++v)
        if (c.colours[v] < 1 || c.colours[v] > c.colour_count)
            throw InvalidInput("vertex " + to_string(v) + " has colour " + to_string(c.colours[v])
                    + " outside 1.." + to_string(c.colour_count));
}

auto homcompat::first_violated_edge(const Graph & g, const Coloring & c) -> optional<Edge>
{
    check_covers(g, c);
    for (int u = 0 ; u < g.size() ; ++u) {
        auto & row = g.neighbourhood(u);
        for (int v = row.next(u) ; v != -1 ; v = row.next(v))
            if (c.colours[u] == c.colours[v])
                return Edge{ u, v };
    }
    return std::nullopt;
}

auto homcompat::is_proper(const Graph & g, const Coloring & c) -> bool
{
    return ! first_violated_edge(g, c);
}

auto homcompat::greedy_coloring(const Graph & g, const vector<int> & order) -> Coloring
{
    int n = g.size();
    vector<bool> seen(n, false);
    if (int(order.size()) != n)
        throw InvalidInput("order is not a permutation of the vertices");
    for (auto v : order) {
        if (v < 0 || v >= n || seen[v])
            throw InvalidInput("order is not a permutation of the vertices");
        seen[v] = true;
    }

    Coloring result{ vector<int>(n, 0), 0 };
    vector<int> last_seen_at(n + 2, -1);
    for (auto v : order) {
        auto & row = g.neighbourhood(v);
        for (int w = row.first() ; w != -1 ; w = row.next(w))
            if (result.colours[w] != 0)
                last_seen_at[result.colours[w]] = v;
        int c = 1;
        while (last_seen_at[c] == v)
            ++c;
        result.colours[v] = c;
        result.colour_count = std::max(result.colour_count, c);
    }
    return result;
}

auto homcompat::degeneracy_order(const Graph & g) -> vector<int>
{
    int n = g.size();
    vector<int> degree(n);
    for (int v = 0 ; v < n ; ++v)
        degree[v] = g.degree(v);

    std::set<std::pair<int, int>> queue;
    for (int v = 0 ; v < n ; ++v)
        queue.emplace(degree[v], v);

    vector<bool> removed(n, false);
    vector<int> order;
    while (! queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        order.push_back(v);
        auto & row = g.neighbourhood(v);
        for (int w = row.first() ; w != -1 ; w = row.next(w))
            if (! removed[w]) {
                queue.erase({ degree[w], w });
                queue.emplace(--degree[w], w);
            }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

auto homcompat::dsatur_coloring(const Graph & g) -> Coloring
{
    int n = g.size();
    Coloring result{ vector<int>(n, 0), 0 };
    vector<Bitset> neighbour_colours(n, Bitset(n + 2));
    vector<int> saturation(n, 0);

    for (int step = 0 ; step < n ; ++step) {
        int best = -1;
        for (int v = 0 ; v < n ; ++v) {
            if (result.colours[v] != 0)
                continue;
            if (best == -1 || saturation[v] > saturation[best]
                    || (saturation[v] == saturation[best] && g.degree(v) > g.degree(best)))
                best = v;
        }

        int c = 1;
        while (neighbour_colours[best].test(c))
            ++c;
        result.colours[best] = c;
        result.colour_count = std::max(result.colour_count, c);

        auto & row = g.neighbourhood(best);
        for (int w = row.first() ; w != -1 ; w = row.next(w))
            if (! neighbour_colours[w].test(c)) {
                neighbour_colours[w].set(c);
                ++saturation[w];
            }
    }
    return result;
}

namespace
{
    /**
     * Vertices that can be removed without changing whether the graph is
     * C-colourable, in removal order. A vertex with fewer than C remaining
     * neighbours is peeled and later takes any free colour. A vertex u whose
     * remaining neighbourhood lies inside that of a non-adjacent remaining v
     * is dominated, and later copies v's colour. Colouring the survivors and
     * then the removed vertices in reverse order always succeeds.
     */
    struct ColouringReduction
    {
        Bitset active;
        vector<std::pair<int, int>> removed;
    };

    auto reduce_for_colouring(const Graph & g, int colours) -> ColouringReduction
    {
        int n = g.size();
        ColouringReduction result{ Bitset::full(n), {} };
        auto & active = result.active;

        bool changed = true;
        while (changed) {
            changed = false;

            for (int u = active.first() ; u != -1 ; u = active.next(u)) {
                Bitset neighbours = g.neighbourhood(u) & active;
                if (neighbours.count() < colours) {
                    active.reset(u);
                    result.removed.emplace_back(u, -1);
                    changed = true;
                    continue;
                }

                // Any dominating v shares u's first neighbour, so look there only.
                Bitset candidates = g.neighbourhood(neighbours.first()) & active;
                candidates.subtract(neighbours);
                candidates.reset(u);
                for (int v = candidates.first() ; v != -1 ; v = candidates.next(v))
                    if (neighbours.is_subset_of(g.neighbourhood(v))) {
                        active.reset(u);
                        result.removed.emplace_back(u, v);
                        changed = true;
                        break;
                    }
            }
        }
        return result;
    }

    /**
     * Backtracking search for a proper colouring with a fixed number of
     * colours, over the active (core) vertices only. Branches on the
     * uncoloured vertex of highest saturation, then highest core degree, then
     * lowest index. A vertex may only open the next unused colour, which
     * removes colour-permutation symmetry.
     */
    struct ColouringSearch
    {
        const Graph & g;
        int colours;
        uint64_t budget;
        uint64_t progress_interval = 0;
        const std::function<void (const SolverProgress &)> * progress = nullptr;

        vector<int> colour;
        vector<int> forbidden;
        vector<int> saturation;
        vector<int> core_degree;
        Bitset uncoloured;
        int remaining = 0;

        uint64_t nodes = 0;
        bool out_of_budget = false;

        ColouringSearch(const Graph & graph, int c, uint64_t b, const Bitset & active) :
            g(graph),
            colours(c),
            budget(b),
            colour(graph.size(), 0),
            forbidden(std::size_t(graph.size()) * c, 0),
            saturation(graph.size(), 0),
            core_degree(graph.size(), 0),
            uncoloured(active),
            remaining(active.count())
        {
            for (int v = active.first() ; v != -1 ; v = active.next(v))
                core_degree[v] = (g.neighbourhood(v) & active).count();
        }

        // Returns false if some neighbour is left with no colour at all.
        auto assign(int v, int c) -> bool
        {
            colour[v] = c + 1;
            uncoloured.reset(v);
            --remaining;
            bool ok = true;
            Bitset affected = g.neighbourhood(v) & uncoloured;
            for (int w = affected.first() ; w != -1 ; w = affected.next(w))
                if (0 == forbidden[std::size_t(w) * colours + c]++)
                    if (++saturation[w] == colours)
                        ok = false;
            return ok;
        }

        auto unassign(int v, int c) -> void
        {
            Bitset affected = g.neighbourhood(v) & uncoloured;
            for (int w = affected.first() ; w != -1 ; w = affected.next(w))
                if (0 == --forbidden[std::size_t(w) * colours + c])
                    --saturation[w];
            colour[v] = 0;
            uncoloured.set(v);
            ++remaining;
        }

        auto select() const -> int
        {
            int best = -1;
            for (int v = uncoloured.first() ; v != -1 ; v = uncoloured.next(v))
                if (best == -1 || saturation[v] > saturation[best]
                        || (saturation[v] == saturation[best] && core_degree[v] > core_degree[best]))
                    best = v;
            return best;
        }

        auto solve(int used) -> bool
        {
            if (0 == remaining)
                return true;

            int v = select();
            if (saturation[v] >= colours)
                return false;

            int limit = std::min(used + 1, colours);
            for (int c = 0 ; c < limit ; ++c) {
                if (forbidden[std::size_t(v) * colours + c] != 0)
                    continue;

                if (nodes == budget) {
                    out_of_budget = true;
                    return false;
                }
                ++nodes;
                if (progress && *progress && progress_interval && nodes % progress_interval == 0)
                    (*progress)(SolverProgress{ colours, nodes });

                if (assign(v, c) && solve(std::max(used, c + 1)))
                    return true;
                unassign(v, c);
                if (out_of_budget)
                    return false;
            }
            return false;
        }
    };

    auto colourability(const Graph & g, int colours, uint64_t budget,
            uint64_t progress_interval, const std::function<void (const SolverProgress &)> * progress) -> ColourabilityResult
    {
        int n = g.size();
        ColourabilityResult result;
        if (n == 0) {
            result.colouring = Coloring{ {}, std::max(colours, 0) };
            return result;
        }
        if (colours <= 0)
            return result;

        auto reduction = reduce_for_colouring(g, colours);
        auto & active = reduction.active;

        ColouringSearch search(g, colours, budget, active);
        search.progress_interval = progress_interval;
        search.progress = progress;
        bool found = search.solve(0);
        result.nodes = search.nodes;
        if (search.out_of_budget) {
            result.decided = false;
            return result;
        }
        if (! found)
            return result;

        vector<int> colour = search.colour;
        for (auto it = reduction.removed.rbegin() ; it != reduction.removed.rend() ; ++it) {
            auto [v, dominator] = *it;
            if (dominator != -1) {
                colour[v] = colour[dominator];
                continue;
            }
            vector<bool> taken(colours + 1, false);
            auto & row = g.neighbourhood(v);
            for (int w = row.first() ; w != -1 ; w = row.next(w))
                taken[colour[w]] = true;
            int c = 1;
            while (c <= colours && taken[c])
                ++c;
            if (c > colours)
                throw InternalError("peeled vertex " + to_string(v) + " has no free colour");
            colour[v] = c;
        }
        result.colouring = Coloring{ std::move(colour), colours };
        return result;
    }
}

auto homcompat::find_colouring(const Graph & g, int colours, uint64_t node_budget) -> ColourabilityResult
{
    return colourability(g, colours, node_budget, 0, nullptr);
}

auto homcompat::exact_chromatic_number(const Graph & g, const ChromaticOptions & options) -> ChromaticResult
{
    ChromaticResult result;
    if (g.size() == 0)
        return result;

    auto clique = clique_number(g);
    result.clique_lower_bound = clique.size;
    int lower = std::max(clique.size, options.lb_hint.value_or(0));

    auto greedy = dsatur_coloring(g);
    int upper = greedy.colour_count;
    result.witness = greedy;

    for (int c = lower ; c < upper ; ++c) {
        if (options.ub_hint && c > *options.ub_hint)
            throw InvalidInput("upper bound hint " + to_string(*options.ub_hint) + " is below the chromatic number");

        uint64_t left = options.node_budget > result.nodes ? options.node_budget - result.nodes : 0;
        auto attempt = colourability(g, c, left, options.progress_interval, &options.progress);
        result.nodes += attempt.nodes;
        if (! attempt.decided) {
            result.status = ChromaticStatus::Inconclusive;
            result.lower = c;
            result.upper = upper;
            return result;
        }
        if (attempt.colouring) {
            result.lower = result.upper = c;
            result.witness = std::move(*attempt.colouring);
            return result;
        }
    }

    if (options.ub_hint && upper > *options.ub_hint)
        throw InvalidInput("upper bound hint " + to_string(*options.ub_hint) + " is below the chromatic number");
    result.lower = result.upper = upper;
    return result;
}
