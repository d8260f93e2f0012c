/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/solvers.hh>
#include <homcompat/generators.hh>
#include <homcompat/errors.hh>

#include <algorithm>
#include <random>

using std::to_string;
using std::vector;

using namespace homcompat;

auto homcompat::kneser_canonical_coloring(int n, int k) -> Coloring
{
    if (k < 1 || n < 2 * k - 1)
        throw InvalidInput("canonical Kneser colouring needs k >= 1 and n >= 2k - 1, got n=" + to_string(n) + " k=" + to_string(k));

    int colour_count = n - 2 * k + 2;
    Coloring result{ {}, colour_count };
    for (auto & s : kneser_vertices(n, k))
        result.colours.push_back(std::min(s.min(), colour_count));
    return result;
}

auto homcompat::representative_map(const CompatGraph & cg) -> vector<int>
{
    vector<int> result;
    result.reserve(cg.source->size());
    for (auto & m : cg.source->elements())
        result.push_back(m.parts.front().first());
    return result;
}

auto homcompat::pullback_coloring(const CompatGraph & cg, const Coloring & host_colouring) -> Coloring
{
    auto & host = cg.source->host();
    if (auto bad = first_violated_edge(host, host_colouring))
        throw InvalidInput("host colouring is not proper: edge (" + to_string(bad->first) + "," + to_string(bad->second)
                + ") has both ends coloured " + to_string(host_colouring.colours[bad->first]));

    Coloring result{ {}, host_colouring.colour_count };
    for (auto v : representative_map(cg))
        result.colours.push_back(host_colouring.colours[v]);
    return result;
}

auto homcompat::random_coloring(int vertices, int colours, std::uint64_t seed) -> Coloring
{
    if (vertices < 0 || colours < 1)
        throw InvalidInput("random colouring needs at least one colour, got " + to_string(colours));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(1, colours);
    Coloring result{ vector<int>(vertices), colours };
    for (auto & c : result.colours)
        c = dist(rng);
    return result;
}
