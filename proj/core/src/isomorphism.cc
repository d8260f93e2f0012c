/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/isomorphism.hh>
#include <homcompat/errors.hh>

#include <algorithm>

using std::vector;

using namespace homcompat;

namespace
{
    auto extend(const Graph & g1, const Graph & g2, vector<int> & mapping, vector<bool> & used, int next) -> bool
    {
        if (next == g1.size())
            return true;

        for (int candidate = 0 ; candidate < g2.size() ; ++candidate) {
            if (used[candidate] || g1.degree(next) != g2.degree(candidate))
                continue;

            bool consistent = true;
            for (int earlier = 0 ; earlier < next && consistent ; ++earlier)
                if (g1.adjacent(next, earlier) != g2.adjacent(candidate, mapping[earlier]))
                    consistent = false;
            if (! consistent)
                continue;

            mapping[next] = candidate;
            used[candidate] = true;
            if (extend(g1, g2, mapping, used, next + 1))
                return true;
            used[candidate] = false;
        }
        return false;
    }

    auto degree_sequence(const Graph & g) -> vector<int>
    {
        vector<int> result;
        for (int v = 0 ; v < g.size() ; ++v)
            result.push_back(g.degree(v));
        std::sort(result.begin(), result.end());
        return result;
    }
}

auto homcompat::is_isomorphic_small(const Graph & g1, const Graph & g2) -> bool
{
    if (g1.size() > small_isomorphism_limit || g2.size() > small_isomorphism_limit)
        throw InvalidInput("is_isomorphic_small is limited to " + std::to_string(small_isomorphism_limit) + " vertices");

    if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count())
        return false;
    if (degree_sequence(g1) != degree_sequence(g2))
        return false;

    vector<int> mapping(g1.size(), -1);
    vector<bool> used(g2.size(), false);
    return extend(g1, g2, mapping, used, 0);
}
