/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/solvers.hh>

#include <algorithm>
#include <numeric>

using std::optional;
using std::vector;

using namespace homcompat;

namespace
{
    /**
     * Bitset max-clique search over a graph renumbered so that bit position
     * follows the initial (non-increasing degree) order. Branching vertices
     * come from a greedy colouring of the candidate set; a branch is cut when
     * the colour bound cannot beat the incumbent.
     */
    struct CliqueSearch
    {
        const vector<Bitset> & rows;
        optional<int> cap;

        vector<int> current, best;
        std::uint64_t nodes = 0;
        bool stop = false;

        auto colour_order(const Bitset & p, vector<int> & order, vector<int> & bounds) -> void
        {
            Bitset uncoloured = p;
            int colour = 0;
            while (uncoloured.any()) {
                ++colour;
                Bitset q = uncoloured;
                while (q.any()) {
                    int v = q.first();
                    uncoloured.reset(v);
                    q.reset(v);
                    q.subtract(rows[v]);
                    order.push_back(v);
                    bounds.push_back(colour);
                }
            }
        }

        auto expand(Bitset p) -> void
        {
            ++nodes;
            vector<int> order, bounds;
            order.reserve(p.count());
            bounds.reserve(p.count());
            colour_order(p, order, bounds);

            for (int i = int(order.size()) - 1 ; i >= 0 ; --i) {
                if (int(current.size()) + bounds[i] <= int(best.size()))
                    return;

                int v = order[i];
                current.push_back(v);
                Bitset next = p & rows[v];
                if (next.empty()) {
                    if (current.size() > best.size()) {
                        best = current;
                        if (cap && int(best.size()) >= *cap)
                            stop = true;
                    }
                }
                else
                    expand(next);
                current.pop_back();
                if (stop)
                    return;
                p.reset(v);
            }
        }
    };
}

auto homcompat::clique_number(const Graph & g, optional<int> cap) -> CliqueResult
{
    int n = g.size();
    CliqueResult result;
    if (n == 0)
        return result;

    vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

    vector<int> position(n);
    for (int i = 0 ; i < n ; ++i)
        position[order[i]] = i;

    vector<Bitset> rows(n, Bitset(n));
    for (int i = 0 ; i < n ; ++i) {
        auto & row = g.neighbourhood(order[i]);
        for (int w = row.first() ; w != -1 ; w = row.next(w))
            rows[i].set(position[w]);
    }

    CliqueSearch search{ rows, cap, {}, {} };
    if (cap && *cap <= 1)
        search.best = { 0 };
    else
        search.expand(Bitset::full(n));

    result.size = int(search.best.size());
    result.reached_cap = cap && result.size >= *cap;
    for (auto v : search.best)
        result.witness.push_back(order[v]);
    std::sort(result.witness.begin(), result.witness.end());
    result.nodes = search.nodes;
    return result;
}
