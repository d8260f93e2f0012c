/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HOMCOMPAT_GUARD_GENERATORS_HH
#define HOMCOMPAT_GUARD_GENERATORS_HH 1

#include <homcompat/graph.hh>

#include <string>
#include <vector>

namespace homcompat
{
    auto complete_graph(int m) -> Graph;

    auto cycle_graph(int m) -> Graph;

    auto path_graph(int m) -> Graph;

    auto edgeless_graph(int m) -> Graph;

    /**
     * A k-subset of {1, ..., n}, kept sorted. Used as the label of a
     * Kneser graph vertex.
     */
    class KneserVertex
    {
        private:
            std::vector<int> _elements;

        public:
            KneserVertex(int n, std::vector<int> elements);

            auto elements() const -> const std::vector<int> &
            {
                return _elements;
            }

            auto min() const -> int
            {
                return _elements.front();
            }

            /// "{1,3}"
            auto to_string() const -> std::string;

            friend auto operator<=> (const KneserVertex &, const KneserVertex &) = default;
    };

    /// All k-subsets of {1..n} in lexicographic order; index i here is vertex i
    /// of kneser_graph(n, k).
    auto kneser_vertices(int n, int k) -> std::vector<KneserVertex>;

    /// Position of a sorted k-subset of {1..n} in the lexicographic order.
    auto kneser_rank(int n, int k, const std::vector<int> & sorted_subset) -> int;

    auto binomial(int n, int k) -> long;

    /// KG(n, k): vertices are the k-subsets of {1..n} in lexicographic order,
    /// adjacent when disjoint. Labelled with the subsets.
    auto kneser_graph(int n, int k) -> Graph;

    /// Mycielski construction: vertices 0..n-1 copy g, n..2n-1 are shadows
    /// (shadow of u adjacent to the copies of N(u)), and 2n is the apex,
    /// adjacent to every shadow.
    auto mycielskian(const Graph & g) -> Graph;
}

#endif
