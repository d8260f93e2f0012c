/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <homcompat/graph.hh>
#include <homcompat/errors.hh>

#include <deque>
#include <set>
#include <string>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

using namespace homcompat;

Graph::Graph(int n) :
    _size(n),
    _rows(n, Bitset(n))
{
    if (n < 0)
        throw InvalidInput("negative vertex count " + to_string(n));
}

auto Graph::from_rows(vector<Bitset> rows) -> Graph
{
    Graph result;
    result._size = int(rows.size());
    for (int v = 0 ; v < result._size ; ++v) {
        if (rows[v].width() != result._size)
            throw InvalidInput("adjacency row " + to_string(v) + " has the wrong width");
        if (rows[v].test(v))
            throw InvalidInput("self-loop at vertex " + to_string(v));
    }
    for (int u = 0 ; u < result._size ; ++u)
        for (int v = rows[u].first() ; v != -1 ; v = rows[u].next(v))
            if (! rows[v].test(u))
                throw InvalidInput("asymmetric adjacency between " + to_string(u) + " and " + to_string(v));
    result._rows = std::move(rows);
    return result;
}

auto Graph::edge_count() const -> long
{
    long twice = 0;
    for (auto & row : _rows)
        twice += row.count();
    return twice / 2;
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    for (int u = 0 ; u < _size ; ++u)
        for (int v = _rows[u].next(u) ; v != -1 ; v = _rows[u].next(v))
            result.emplace_back(u, v);
    return result;
}

auto Graph::with_labels(vector<string> labels) const & -> Graph
{
    Graph copy = *this;
    return std::move(copy).with_labels(std::move(labels));
}

auto Graph::with_labels(vector<string> labels) && -> Graph
{
    if (int(labels.size()) != _size)
        throw InvalidInput("label count " + to_string(labels.size()) + " does not match vertex count " + to_string(_size));
    std::set<string> seen;
    for (std::size_t v = 0 ; v < labels.size() ; ++v)
        if (! seen.insert(labels[v]).second)
            throw InvalidInput("duplicate label '" + labels[v] + "' at vertex " + to_string(v));
    _labels = std::move(labels);
    return std::move(*this);
}

auto homcompat::make_graph(int n, const vector<Edge> & edges) -> Graph
{
    if (n < 0)
        throw InvalidInput("negative vertex count " + to_string(n));

    vector<Bitset> rows(n, Bitset(n));
    for (auto & [u, v] : edges) {
        if (u < 0 || u >= n)
            throw InvalidInput("edge endpoint " + to_string(u) + " out of range for " + to_string(n) + " vertices");
        if (v < 0 || v >= n)
            throw InvalidInput("edge endpoint " + to_string(v) + " out of range for " + to_string(n) + " vertices");
        if (u == v)
            throw InvalidInput("self-loop at vertex " + to_string(u));
        rows[u].set(v);
        rows[v].set(u);
    }
    return Graph::from_rows(std::move(rows));
}

auto homcompat::girth(const Graph & g) -> Girth
{
    // BFS from each vertex; a non-tree edge (u, w) seen from root s closes a
    // closed walk of length dist[u] + dist[w] + 1 through s, and the minimum
    // over all roots is the girth.
    int best = -1;
    vector<int> dist(g.size()), parent(g.size());
    for (int s = 0 ; s < g.size() ; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{ s };
        dist[s] = 0;
        parent[s] = -1;
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (best != -1 && 2 * dist[u] + 1 >= best)
                break;
            auto & row = g.neighbourhood(u);
            for (int w = row.first() ; w != -1 ; w = row.next(w)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
                else if (parent[u] != w) {
                    int cycle = dist[u] + dist[w] + 1;
                    if (best == -1 || cycle < best)
                        best = cycle;
                }
            }
        }
    }
    return best == -1 ? Girth::acyclic() : Girth::of_length(best);
}

auto homcompat::is_triangle_free(const Graph & g) -> bool
{
    for (int u = 0 ; u < g.size() ; ++u) {
        auto & row = g.neighbourhood(u);
        for (int v = row.next(u) ; v != -1 ; v = row.next(v))
            if (row.intersects(g.neighbourhood(v)))
                return false;
    }
    return true;
}

auto homcompat::induced_subgraph(const Graph & g, const vector<int> & vertices) -> Graph
{
    int n = int(vertices.size());
    vector<Bitset> rows(n, Bitset(n));
    for (int i = 0 ; i < n ; ++i)
        for (int j = 0 ; j < n ; ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                rows[i].set(j);
    return Graph::from_rows(std::move(rows));
}

auto homcompat::first_non_homomorphic_edge(const Graph & from, const Graph & to,
        const vector<int> & vertex_map) -> optional<Edge>
{
    if (int(vertex_map.size()) != from.size())
        throw InvalidInput("vertex map covers " + to_string(vertex_map.size()) + " of " + to_string(from.size()) + " vertices");
    for (auto image : vertex_map)
        if (image < 0 || image >= to.size())
            throw InvalidInput("vertex map image " + to_string(image) + " out of range");

    for (auto & [u, v] : from.edges())
        if (! to.adjacent(vertex_map[u], vertex_map[v]))
            return Edge{ u, v };
    return std::nullopt;
}
