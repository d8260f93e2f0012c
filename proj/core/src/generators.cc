/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/generators.hh>
#include <homcompat/errors.hh>

#include <algorithm>

using std::string;
using std::to_string;
using std::vector;

using namespace homcompat;

auto homcompat::complete_graph(int m) -> Graph
{
    if (m < 1)
        throw InvalidInput("complete graph needs at least one vertex, got " + to_string(m));
    vector<Edge> edges;
    for (int u = 0 ; u < m ; ++u)
        for (int v = u + 1 ; v < m ; ++v)
            edges.emplace_back(u, v);
    return make_graph(m, edges);
}

auto homcompat::cycle_graph(int m) -> Graph
{
    if (m < 3)
        throw InvalidInput("cycle needs at least three vertices, got " + to_string(m));
    vector<Edge> edges;
    for (int u = 0 ; u < m ; ++u)
        edges.emplace_back(u, (u + 1) % m);
    return make_graph(m, edges);
}

auto homcompat::path_graph(int m) -> Graph
{
    if (m < 1)
        throw InvalidInput("path needs at least one vertex, got " + to_string(m));
    vector<Edge> edges;
    for (int u = 0 ; u + 1 < m ; ++u)
        edges.emplace_back(u, u + 1);
    return make_graph(m, edges);
}

auto homcompat::edgeless_graph(int m) -> Graph
{
    return Graph(m);
}

KneserVertex::KneserVertex(int n, vector<int> elements) :
    _elements(std::move(elements))
{
    if (_elements.empty())
        throw InvalidInput("Kneser vertex must be non-empty");
    for (std::size_t i = 0 ; i < _elements.size() ; ++i) {
        if (_elements[i] < 1 || _elements[i] > n)
            throw InvalidInput("Kneser vertex element " + std::to_string(_elements[i]) + " outside 1.." + std::to_string(n));
        if (i > 0 && _elements[i - 1] >= _elements[i])
            throw InvalidInput("Kneser vertex elements must be strictly increasing");
    }
}

auto KneserVertex::to_string() const -> string
{
    string result = "{";
    for (std::size_t i = 0 ; i < _elements.size() ; ++i) {
        if (i > 0)
            result += ",";
        result += std::to_string(_elements[i]);
    }
    return result + "}";
}

auto homcompat::binomial(int n, int k) -> long
{
    if (k < 0 || k > n)
        return 0;
    long result = 1;
    for (int i = 1 ; i <= k ; ++i)
        result = result * (n - k + i) / i;
    return result;
}

auto homcompat::kneser_vertices(int n, int k) -> vector<KneserVertex>
{
    if (k < 1 || n < k)
        throw InvalidInput("Kneser parameters need n >= k >= 1, got n=" + to_string(n) + " k=" + to_string(k));

    vector<KneserVertex> result;
    vector<int> current(k);
    for (int i = 0 ; i < k ; ++i)
        current[i] = i + 1;
    while (true) {
        result.emplace_back(n, current);
        int i = k - 1;
        while (i >= 0 && current[i] == n - k + 1 + i)
            --i;
        if (i < 0)
            break;
        ++current[i];
        for (int j = i + 1 ; j < k ; ++j)
            current[j] = current[j - 1] + 1;
    }
    return result;
}

auto homcompat::kneser_rank(int n, int k, const vector<int> & s) -> int
{
    // Count the subsets that precede s: for each position, all choices of a
    // smaller element there (with the prefix fixed) come first.
    long rank = 0;
    int previous = 0;
    for (int i = 0 ; i < k ; ++i) {
        for (int x = previous + 1 ; x < s[i] ; ++x)
            rank += binomial(n - x, k - i - 1);
        previous = s[i];
    }
    return int(rank);
}

auto homcompat::kneser_graph(int n, int k) -> Graph
{
    auto vertices = kneser_vertices(n, k);
    int size = int(vertices.size());

    vector<Bitset> masks;
    for (auto & v : vertices)
        masks.push_back(Bitset::from_indices(n + 1, v.elements()));

    vector<Bitset> rows(size, Bitset(size));
    for (int u = 0 ; u < size ; ++u)
        for (int v = u + 1 ; v < size ; ++v)
            if (! masks[u].intersects(masks[v])) {
                rows[u].set(v);
                rows[v].set(u);
            }

    vector<string> labels;
    for (auto & v : vertices)
        labels.push_back(v.to_string());
    return Graph::from_rows(std::move(rows)).with_labels(std::move(labels));
}

auto homcompat::mycielskian(const Graph & g) -> Graph
{
    int n = g.size();
    vector<Edge> edges;
    for (auto & [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    for (int u = 0 ; u < n ; ++u)
        edges.emplace_back(n + u, 2 * n);
    return make_graph(2 * n + 1, edges);
}
