/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/bitset.hh>
#include <homcompat/errors.hh>
#include <homcompat/generators.hh>
#include <homcompat/graph.hh>
#include <homcompat/isomorphism.hh>
#include <homcompat/solvers.hh>

#include "support/corpus.hh"
#include "support/oracles.hh"

#include <gtest/gtest.h>

using namespace homcompat;
using std::vector;

TEST(Bitset, SetTestCountAndIteration)
{
    Bitset b(130);
    EXPECT_TRUE(b.empty());
    b.set(0);
    b.set(64);
    b.set(129);
    EXPECT_EQ(b.count(), 3);
    EXPECT_EQ(b.first(), 0);
    EXPECT_EQ(b.next(0), 64);
    EXPECT_EQ(b.next(64), 129);
    EXPECT_EQ(b.next(129), -1);
    EXPECT_EQ(b.to_indices(), (vector<int>{ 0, 64, 129 }));
    b.reset(64);
    EXPECT_FALSE(b.test(64));
    EXPECT_EQ(Bitset::full(130).count(), 130);
}

TEST(Bitset, SubsetAndIntersection)
{
    auto a = Bitset::from_indices(70, { 1, 65 });
    auto b = Bitset::from_indices(70, { 1, 2, 65 });
    EXPECT_TRUE(a.is_subset_of(b));
    EXPECT_FALSE(b.is_subset_of(a));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_EQ((a & b), a);
    EXPECT_EQ((a | b), b);
    auto c = b;
    c.subtract(a);
    EXPECT_EQ(c.to_indices(), vector<int>{ 2 });
}

TEST(MakeGraph, SingleEdge)
{
    auto g = make_graph(3, { { 0, 1 } });
    EXPECT_EQ(g.size(), 3);
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(MakeGraph, RejectsSelfLoop)
{
    try {
        make_graph(2, { { 0, 0 } });
        FAIL() << "self-loop accepted";
    }
    catch (const InvalidInput & e) {
        EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
    }
}

TEST(MakeGraph, RejectsOutOfRange)
{
    EXPECT_THROW(make_graph(2, { { 0, 2 } }), InvalidInput);
    EXPECT_THROW(make_graph(2, { { -1, 1 } }), InvalidInput);
}

TEST(MakeGraph, Deduplicates)
{
    EXPECT_EQ(make_graph(4, { { 0, 1 }, { 1, 0 } }).edge_count(), 1);
}

TEST(FromRows, RejectsAsymmetryAndLoops)
{
    vector<Bitset> rows(2, Bitset(2));
    rows[0].set(1);
    EXPECT_THROW(Graph::from_rows(rows), InvalidInput);
    rows[1].set(1);
    rows[1].set(0);
    EXPECT_THROW(Graph::from_rows(rows), InvalidInput);
}

TEST(Labels, MustBeUnique)
{
    auto g = complete_graph(2);
    EXPECT_THROW(g.with_labels({ "a", "a" }), InvalidInput);
    EXPECT_THROW(g.with_labels({ "a" }), InvalidInput);
    EXPECT_EQ(g.with_labels({ "a", "b" }).labels()[1], "b");
}

TEST(CompleteGraph, Examples)
{
    EXPECT_EQ(complete_graph(1).edge_count(), 0);
    EXPECT_EQ(complete_graph(4).edge_count(), 6);
    EXPECT_TRUE(is_isomorphic_small(complete_graph(3), cycle_graph(3)));
    EXPECT_THROW(complete_graph(0), InvalidInput);
}

TEST(CycleGraph, Examples)
{
    EXPECT_TRUE(cycle_graph(3).same_structure(complete_graph(3)));
    auto c5 = cycle_graph(5);
    EXPECT_EQ(c5.edge_count(), 5);
    for (int v = 0 ; v < 5 ; ++v)
        EXPECT_EQ(c5.degree(v), 2);
    EXPECT_EQ(girth(c5).length(), 5);
    EXPECT_EQ(oracle::chromatic_number(c5), 3);
    EXPECT_EQ(oracle::chromatic_number(cycle_graph(4)), 2);
    EXPECT_THROW(cycle_graph(2), InvalidInput);
}

TEST(KneserGraph, Petersen)
{
    auto g = kneser_graph(5, 2);
    EXPECT_EQ(g.size(), 10);
    EXPECT_EQ(g.edge_count(), 15);
    for (int v = 0 ; v < 10 ; ++v)
        EXPECT_EQ(g.degree(v), 3);
    ASSERT_TRUE(g.has_labels());
    EXPECT_EQ(g.labels()[0], "{1,2}");
    EXPECT_EQ(g.labels()[1], "{1,3}");
    EXPECT_EQ(g.labels()[9], "{4,5}");
}

TEST(KneserGraph, EdgelessAndComplete)
{
    for (int k = 1 ; k <= 4 ; ++k)
        EXPECT_EQ(kneser_graph(2 * k - 1, k).edge_count(), 0);
    for (int n = 1 ; n <= 7 ; ++n)
        EXPECT_TRUE(kneser_graph(n, 1).same_structure(complete_graph(n)));
    EXPECT_THROW(kneser_graph(2, 3), InvalidInput);
    EXPECT_THROW(kneser_graph(3, 0), InvalidInput);
}

TEST(KneserGraph, AdjacencyIsDisjointnessAndDegreeIsBinomial)
{
    for (auto [n, k] : vector<std::pair<int, int>>{ { 5, 2 }, { 6, 2 }, { 7, 3 }, { 7, 2 }, { 8, 3 } }) {
        auto g = kneser_graph(n, k);
        auto vertices = kneser_vertices(n, k);
        ASSERT_EQ(long(g.size()), binomial(n, k));
        for (int u = 0 ; u < g.size() ; ++u) {
            EXPECT_EQ(g.degree(u), binomial(n - k, k));
            EXPECT_EQ(kneser_rank(n, k, vertices[u].elements()), u);
            for (int v = 0 ; v < g.size() ; ++v) {
                auto & a = vertices[u].elements();
                auto & b = vertices[v].elements();
                bool disjoint = true;
                for (auto x : a)
                    disjoint = disjoint && std::find(b.begin(), b.end(), x) == b.end();
                EXPECT_EQ(g.adjacent(u, v), disjoint && u != v);
            }
        }
    }
}

TEST(KneserVertex, Validation)
{
    EXPECT_THROW(KneserVertex(5, { 2, 1 }), InvalidInput);
    EXPECT_THROW(KneserVertex(5, { 1, 6 }), InvalidInput);
    EXPECT_THROW(KneserVertex(5, { 0, 1 }), InvalidInput);
    EXPECT_EQ(KneserVertex(5, { 2, 4 }).to_string(), "{2,4}");
}

TEST(Mycielskian, OfK2IsC5)
{
    auto g = mycielskian(complete_graph(2));
    EXPECT_EQ(g.size(), 5);
    EXPECT_EQ(g.edge_count(), 5);
    EXPECT_TRUE(is_isomorphic_small(g, cycle_graph(5)));
}

TEST(Mycielskian, Grotzsch)
{
    auto g = mycielskian(mycielskian(complete_graph(2)));
    EXPECT_EQ(g.size(), 11);
    EXPECT_EQ(g.edge_count(), 20);
    EXPECT_TRUE(is_triangle_free(g));
    EXPECT_EQ(oracle::chromatic_number(g), 4);
}

TEST(Mycielskian, OfK1)
{
    auto g = mycielskian(edgeless_graph(1));
    EXPECT_EQ(g.size(), 3);
    EXPECT_EQ(g.edges(), (vector<Edge>{ { 1, 2 } }));
}

TEST(Mycielskian, PreservesTriangleFreeness)
{
    for (auto & [name, g] : corpus::small_graphs()) {
        if (! is_triangle_free(g))
            continue;
        auto m = mycielskian(g);
        EXPECT_TRUE(is_triangle_free(m)) << name;
        EXPECT_LE(clique_number(m).size, 2) << name;
    }
}

TEST(Girth, Examples)
{
    EXPECT_EQ(girth(complete_graph(3)).length(), 3);
    EXPECT_EQ(girth(kneser_graph(5, 2)).length(), 5);
    EXPECT_TRUE(girth(path_graph(6)).is_acyclic());
    EXPECT_EQ(girth(path_graph(6)).to_string(), "acyclic");
    EXPECT_TRUE(girth(Graph(0)).is_acyclic());
}

TEST(Girth, MatchesOracle)
{
    for (auto & [name, g] : corpus::small_graphs()) {
        int expected = oracle::girth(g);
        auto got = girth(g);
        if (expected == 0)
            EXPECT_TRUE(got.is_acyclic()) << name;
        else
            EXPECT_EQ(got.length(), expected) << name;
    }
}

TEST(Isomorphism, Examples)
{
    EXPECT_FALSE(is_isomorphic_small(complete_graph(3), cycle_graph(4)));
    for (auto & [name, g] : corpus::small_graphs())
        EXPECT_TRUE(is_isomorphic_small(g, g)) << name;
    EXPECT_FALSE(is_isomorphic_small(path_graph(4), make_graph(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } })));
    EXPECT_THROW(is_isomorphic_small(complete_graph(13), complete_graph(13)), InvalidInput);
}

TEST(Isomorphism, RelabelledCopies)
{
    auto g = kneser_graph(5, 2);
    vector<int> perm{ 3, 7, 1, 9, 0, 2, 8, 4, 6, 5 };
    vector<Edge> edges;
    for (auto & [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    EXPECT_TRUE(is_isomorphic_small(g, make_graph(10, edges)));
}

TEST(InducedSubgraph, Basic)
{
    auto g = cycle_graph(5);
    auto h = induced_subgraph(g, { 0, 1, 2 });
    EXPECT_EQ(h.edges(), (vector<Edge>{ { 0, 1 }, { 1, 2 } }));
}

TEST(Homomorphism, FirstViolatedEdge)
{
    auto c5 = cycle_graph(5);
    auto k3 = complete_graph(3);
    EXPECT_FALSE(first_non_homomorphic_edge(c5, k3, { 0, 1, 0, 1, 2 }));
    auto bad = first_non_homomorphic_edge(c5, k3, { 0, 1, 0, 1, 1 });
    ASSERT_TRUE(bad);
    EXPECT_EQ(*bad, (Edge{ 3, 4 }));
    EXPECT_THROW(first_non_homomorphic_edge(c5, k3, { 0, 1 }), InvalidInput);
}
