/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "corpus.hh"

#include <homcompat/generators.hh>

#include <random>

using std::vector;

namespace homcompat::corpus
{
    auto random_graph(int n, double p, unsigned seed) -> Graph
    {
        std::mt19937 rng(seed);
        std::bernoulli_distribution coin(p);
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return make_graph(n, edges);
    }

    auto small_graphs() -> vector<NamedGraph>
    {
        vector<NamedGraph> result;
        result.push_back({ "K1", complete_graph(1) });
        result.push_back({ "edgeless5", edgeless_graph(5) });
        result.push_back({ "K2", complete_graph(2) });
        result.push_back({ "K4", complete_graph(4) });
        result.push_back({ "K5", complete_graph(5) });
        result.push_back({ "P4", path_graph(4) });
        result.push_back({ "C4", cycle_graph(4) });
        result.push_back({ "C5", cycle_graph(5) });
        result.push_back({ "C7", cycle_graph(7) });
        result.push_back({ "star6", make_graph(6, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 0, 4 }, { 0, 5 } }) });

        vector<Edge> k33;
        for (int u = 0 ; u < 3 ; ++u)
            for (int v = 3 ; v < 6 ; ++v)
                k33.emplace_back(u, v);
        result.push_back({ "K33", make_graph(6, k33) });

        vector<Edge> wheel{ { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 } };
        for (int v = 0 ; v < 5 ; ++v)
            wheel.emplace_back(5, v);
        result.push_back({ "wheel6", make_graph(6, wheel) });

        result.push_back({ "petersen", kneser_graph(5, 2) });
        result.push_back({ "grotzsch", mycielskian(mycielskian(complete_graph(2))) });

        vector<Edge> cube;
        for (int u = 0 ; u < 8 ; ++u)
            for (int b = 0 ; b < 3 ; ++b)
                if (u < (u ^ (1 << b)))
                    cube.emplace_back(u, u ^ (1 << b));
        result.push_back({ "cube", make_graph(8, cube) });

        result.push_back({ "moser_spindle", make_graph(7, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 1, 3 }, { 2, 3 },
                    { 0, 4 }, { 0, 5 }, { 4, 5 }, { 4, 6 }, { 5, 6 }, { 3, 6 } }) });

        vector<Edge> c7_complement;
        for (int u = 0 ; u < 7 ; ++u)
            for (int v = u + 1 ; v < 7 ; ++v)
                if (v - u != 1 && v - u != 6)
                    c7_complement.emplace_back(u, v);
        result.push_back({ "C7_complement", make_graph(7, c7_complement) });

        result.push_back({ "two_triangles", make_graph(6, { { 0, 1 }, { 1, 2 }, { 0, 2 }, { 3, 4 }, { 4, 5 }, { 3, 5 } }) });
        result.push_back({ "diamond_pendant", make_graph(5, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 1, 3 }, { 2, 3 }, { 3, 4 } }) });

        result.push_back({ "random_8", random_graph(8, 0.3, 1) });
        result.push_back({ "random_9", random_graph(9, 0.5, 2) });
        result.push_back({ "random_10", random_graph(10, 0.4, 3) });
        result.push_back({ "random_11", random_graph(11, 0.6, 4) });
        result.push_back({ "random_12a", random_graph(12, 0.5, 5) });
        result.push_back({ "random_12b", random_graph(12, 0.75, 6) });
        return result;
    }

    auto io_graphs() -> vector<NamedGraph>
    {
        vector<NamedGraph> result;
        result.push_back({ "empty", Graph(0) });
        result.push_back({ "K1", complete_graph(1) });
        result.push_back({ "K2", complete_graph(2) });
        result.push_back({ "K3", complete_graph(3) });
        result.push_back({ "K6", complete_graph(6) });
        result.push_back({ "C5", cycle_graph(5) });
        result.push_back({ "C9", cycle_graph(9) });
        result.push_back({ "P7", path_graph(7) });
        result.push_back({ "edgeless8", edgeless_graph(8) });
        result.push_back({ "petersen", kneser_graph(5, 2) });
        result.push_back({ "KG62", kneser_graph(6, 2) });
        result.push_back({ "KG73", kneser_graph(7, 3) });
        result.push_back({ "grotzsch", mycielskian(mycielskian(complete_graph(2))) });
        result.push_back({ "mycielski4", mycielskian(mycielskian(mycielskian(complete_graph(2)))) });
        result.push_back({ "random_13", random_graph(13, 0.5, 7) });
        result.push_back({ "random_40", random_graph(40, 0.2, 8) });
        result.push_back({ "random_62", random_graph(62, 0.1, 9) });
        result.push_back({ "random_63", random_graph(63, 0.1, 10) });
        result.push_back({ "random_64", random_graph(64, 0.1, 11) });
        result.push_back({ "random_300", random_graph(300, 0.02, 12) });
        return result;
    }
}
