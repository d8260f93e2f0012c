/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_GRAPH_HH
#define HOMCOMPAT_GUARD_GRAPH_HH 1

#include <homcompat/bitset.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homcompat
{
    using Edge = std::pair<int, int>;

    /**
     * A finite simple undirected graph on vertices 0 .. size() - 1, with
     * bitset adjacency rows and an optional per-vertex label sidecar.
     *
     * Graphs are built once, through make_graph() or from_rows(), and not
     * modified afterwards, so sharing one between threads is fine.
     */
    class Graph
    {
        private:
            int _size = 0;
            std::vector<Bitset> _rows;
            std::vector<std::string> _labels;

        public:
            Graph() = default;

            /// Edgeless graph on n vertices.
            explicit Graph(int n);

            /// Adjacency rows must be symmetric and irreflexive.
            static auto from_rows(std::vector<Bitset> rows) -> Graph;

            auto size() const -> int
            {
                return _size;
            }

            auto adjacent(int u, int v) const -> bool
            {
                return _rows[u].test(v);
            }

            auto neighbourhood(int v) const -> const Bitset &
            {
                return _rows[v];
            }

            auto degree(int v) const -> int
            {
                return _rows[v].count();
            }

            auto edge_count() const -> long;

            /// All edges (u, v) with u < v, in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            auto has_labels() const -> bool
            {
                return ! _labels.empty();
            }

            auto labels() const -> const std::vector<std::string> &
            {
                return _labels;
            }

            /// Attach one distinct label per vertex. Returns the labelled graph.
            auto with_labels(std::vector<std::string> labels) const & -> Graph;
            auto with_labels(std::vector<std::string> labels) && -> Graph;

            /// Same vertex count and edge set; labels are ignored.
            auto same_structure(const Graph & other) const -> bool
            {
                return _size == other._size && _rows == other._rows;
            }

            friend auto operator== (const Graph &, const Graph &) -> bool = default;
    };

    /// Build a graph from an edge list. Duplicate pairs, in either orientation,
    /// collapse to one edge. Throws InvalidInput naming the offending index for
    /// out-of-range endpoints or self-loops.
    auto make_graph(int n, const std::vector<Edge> & edges) -> Graph;

    /// Shortest-cycle length, or acyclic for a forest.
    class Girth
    {
        private:
            std::optional<int> _length;

        public:
            static auto acyclic() -> Girth
            {
                return Girth{};
            }

            static auto of_length(int l) -> Girth
            {
                Girth g;
                g._length = l;
                return g;
            }

            auto is_acyclic() const -> bool
            {
                return ! _length.has_value();
            }

            auto length() const -> int
            {
                return _length.value();
            }

            auto to_string() const -> std::string
            {
                return _length ? std::to_string(*_length) : std::string{"acyclic"};
            }

            friend auto operator== (const Girth &, const Girth &) -> bool = default;
    };

    auto girth(const Graph & g) -> Girth;

    /// True iff no three mutually adjacent vertices exist.
    auto is_triangle_free(const Graph & g) -> bool;

    /// Induced subgraph on the given vertices, renumbered in the order given.
    auto induced_subgraph(const Graph & g, const std::vector<int> & vertices) -> Graph;

    /// True iff vertex_map is a graph homomorphism from -> to. Otherwise the
    /// first (lexicographic) edge of from whose image is not an edge.
    auto first_non_homomorphic_edge(const Graph & from, const Graph & to,
            const std::vector<int> & vertex_map) -> std::optional<Edge>;
}

#endif
