/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/errors.hh>
#include <homcompat/generators.hh>
#include <homcompat/hom_poset.hh>

#include "support/corpus.hh"
#include "support/oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace homcompat;
using std::vector;

namespace
{
    auto to_tuple(const MultiHom & m) -> oracle::Tuple
    {
        oracle::Tuple t;
        for (auto & p : m.parts)
            t.push_back(p.to_indices());
        return t;
    }

    auto hom(int width, const vector<vector<int>> & parts) -> MultiHom
    {
        MultiHom m;
        for (auto & p : parts)
            m.parts.push_back(Bitset::from_indices(width, p));
        return m;
    }
}

TEST(EnumerateHom, K2)
{
    auto p = enumerate_hom(complete_graph(2), 2);
    ASSERT_EQ(p->size(), 2);
    EXPECT_EQ((*p)[0].to_string(), "[[0],[1]]");
    EXPECT_EQ((*p)[1].to_string(), "[[1],[0]]");
}

TEST(EnumerateHom, ElementCounts)
{
    // Independent brute-force counts over all subset tuples.
    struct Case { const char * name; Graph host; int r; int count; };
    vector<Case> cases{
        { "K2", complete_graph(2), 2, 2 },
        { "K3", complete_graph(3), 2, 12 },
        { "K3", complete_graph(3), 3, 6 },
        { "K4", complete_graph(4), 2, 50 },
        { "K4", complete_graph(4), 3, 60 },
        { "K5", complete_graph(5), 2, 180 },
        { "K5", complete_graph(5), 3, 390 },
        { "C5", cycle_graph(5), 2, 20 },
        { "C5", cycle_graph(5), 3, 0 },
        { "petersen", kneser_graph(5, 2), 2, 110 },
        { "petersen", kneser_graph(5, 2), 3, 0 },
        { "KG42", kneser_graph(4, 2), 2, 6 },
        { "KG62", kneser_graph(6, 2), 2, 2120 },
        { "KG62", kneser_graph(6, 2), 3, 90 },
        { "edgeless", edgeless_graph(4), 2, 0 }
    };
    for (auto & c : cases)
        EXPECT_EQ(enumerate_hom(c.host, c.r)->size(), c.count) << c.name << " r=" << c.r;
}

TEST(EnumerateHom, MatchesBruteForceOnSmallHosts)
{
    for (auto & [name, g] : corpus::small_graphs()) {
        if (g.size() > 6)
            continue;
        for (int r : { 2, 3 }) {
            auto p = enumerate_hom(g, r);
            auto expected = oracle::hom_elements(g, r);
            std::set<oracle::Tuple> got;
            for (auto & m : p->elements())
                got.insert(to_tuple(m));
            EXPECT_EQ(int(got.size()), p->size()) << name << " has duplicates";
            EXPECT_EQ(got, expected) << name << " r=" << r;
        }
    }
}

TEST(EnumerateHom, ElementsAreValidAndCanonicallyOrdered)
{
    auto host = kneser_graph(6, 2);
    auto p = enumerate_hom(host, 2);
    for (int i = 0 ; i < p->size() ; ++i) {
        EXPECT_TRUE(is_valid_multihom(host, (*p)[i]));
        EXPECT_EQ(p->find((*p)[i]), i);
        if (i > 0)
            EXPECT_TRUE(canonical_less((*p)[i - 1], (*p)[i]));
    }
}

TEST(EnumerateHom, CapAndArguments)
{
    EXPECT_THROW(enumerate_hom(complete_graph(3), 1), InvalidInput);
    try {
        enumerate_hom(kneser_graph(6, 2), 2, HomEnumerationOptions{ 100 });
        FAIL() << "cap not enforced";
    }
    catch (const CapExceeded & e) {
        EXPECT_EQ(e.cap(), 100u);
        EXPECT_GT(e.projected(), 100u);
    }
    EXPECT_EQ(enumerate_hom(kneser_graph(6, 2), 2, HomEnumerationOptions{ 2120 })->size(), 2120);
}

TEST(EnumerateHom, SupportHistogram)
{
    auto p = enumerate_hom(kneser_graph(5, 2), 2);
    auto h = p->support_histogram();
    EXPECT_EQ(h[2], 30);
    EXPECT_EQ(h[3], 60);
    EXPECT_EQ(h[4], 20);
}

TEST(MultiHomValidity, Conditions)
{
    auto k3 = complete_graph(3);
    EXPECT_TRUE(is_valid_multihom(k3, hom(3, { { 0 }, { 1, 2 } })));
    EXPECT_FALSE(is_valid_multihom(k3, hom(3, { { 0 }, {} })));
    EXPECT_FALSE(is_valid_multihom(k3, hom(3, { { 0, 1 }, { 1, 2 } })));
    EXPECT_FALSE(is_valid_multihom(cycle_graph(4), hom(4, { { 0 }, { 2 } })));
}

TEST(Leq, Examples)
{
    auto a = hom(2, { { 0 }, { 1 } });
    auto b = hom(2, { { 1 }, { 0 } });
    EXPECT_TRUE(leq(a, a));
    EXPECT_FALSE(leq(a, b));
    EXPECT_FALSE(leq(b, a));
    EXPECT_TRUE(leq(hom(5, { { 0 }, { 2 } }), hom(5, { { 0 }, { 2, 3 } })));
    EXPECT_THROW(leq(a, hom(2, { { 0 }, { 1 }, { 1 } })), InvalidInput);
}

TEST(Leq, IsAPartialOrder)
{
    auto p = enumerate_hom(complete_graph(4), 3);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, p->size() - 1);
    for (int i = 0 ; i < p->size() ; ++i)
        EXPECT_TRUE(leq((*p)[i], (*p)[i]));
    for (int t = 0 ; t < 20000 ; ++t) {
        auto & a = (*p)[pick(rng)];
        auto & b = (*p)[pick(rng)];
        auto & c = (*p)[pick(rng)];
        if (leq(a, b) && leq(b, a))
            EXPECT_EQ(a, b);
        if (leq(a, b) && leq(b, c))
            EXPECT_TRUE(leq(a, c));
    }
}

TEST(Shift, Examples)
{
    auto a = hom(2, { { 0 }, { 1 } });
    EXPECT_EQ(shift(a, 0), a);
    EXPECT_EQ(shift(a, 1), hom(2, { { 1 }, { 0 } }));
    EXPECT_EQ(shift(shift(a, 1), 1), a);
    auto b = hom(3, { { 0 }, { 1 }, { 2 } });
    EXPECT_EQ(shift(b, 1), hom(3, { { 1 }, { 2 }, { 0 } }));
    EXPECT_EQ(shift(b, -1), shift(b, 2));
    EXPECT_EQ(shift(b, 4), shift(b, 1));
}

TEST(Orbit, SizesAndWellDefinedness)
{
    for (int r : { 2, 3 }) {
        auto p = enumerate_hom(complete_graph(r), r);
        for (auto & a : p->elements()) {
            auto o = orbit(a);
            EXPECT_EQ(int(o.size()), r);
            std::set<std::string> as_set, shifted_set;
            for (auto & m : o)
                as_set.insert(m.to_string());
            for (auto & m : orbit(shift(a, 1)))
                shifted_set.insert(m.to_string());
            EXPECT_EQ(int(as_set.size()), r);
            EXPECT_EQ(as_set, shifted_set);
        }
    }
}

TEST(Shift, ActionIsFreeAndPreservesOrder)
{
    vector<std::pair<Graph, int>> hosts{
        { complete_graph(4), 2 }, { complete_graph(4), 3 }, { complete_graph(5), 2 },
        { kneser_graph(5, 2), 2 }, { cycle_graph(5), 2 }, { kneser_graph(6, 2), 3 }
    };
    for (auto & [host, r] : hosts) {
        auto p = enumerate_hom(host, r);
        ASSERT_LE(p->size(), 500);
        for (auto & a : p->elements()) {
            for (int j = 1 ; j < r ; ++j) {
                EXPECT_NE(shift(a, j), a);
                EXPECT_EQ(shift(shift(a, j), r - j), a);
                EXPECT_TRUE(p->find(shift(a, j)));
            }
            for (auto & b : p->elements())
                if (leq(a, b))
                    for (int j = 0 ; j < r ; ++j)
                        EXPECT_TRUE(leq(shift(a, j), shift(b, j)));
        }
    }
}

TEST(HomPoset, ShiftPermutation)
{
    auto p = enumerate_hom(complete_graph(3), 3);
    auto perm = p->shift_permutation(1);
    for (int i = 0 ; i < p->size() ; ++i)
        EXPECT_EQ((*p)[perm[i]], shift((*p)[i], 1));
}

TEST(HomPoset, RejectsInvalidElements)
{
    EXPECT_THROW(HomPoset(complete_graph(2), 2, { hom(2, { { 0 }, { 0 } }) }), InvalidInput);
    EXPECT_THROW(HomPoset(complete_graph(2), 2, { hom(2, { { 0 }, { 1 } }), hom(2, { { 0 }, { 1 } }) }), InvalidInput);
}
