/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_GRAPH_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_GRAPH_HH 1

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordrep
{
    /// Hard vertex limit. Every adjacency row fits in one VertexSet word.
    inline constexpr int max_vertices = 24;

    /// A set of vertices, bit v set means vertex v is present.
    using VertexSet = std::uint32_t;

    inline constexpr auto singleton(int v) -> VertexSet
    {
        return VertexSet{1} << v;
    }

    inline constexpr auto first_n(int n) -> VertexSet
    {
        return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
    }

    inline constexpr auto contains(VertexSet s, int v) -> bool
    {
        return (s >> v) & 1;
    }

    inline constexpr auto popcount(VertexSet s) -> int
    {
        return std::popcount(s);
    }

    /// Index of the lowest set bit; s must be non-empty.
    inline constexpr auto lowest(VertexSet s) -> int
    {
        return std::countr_zero(s);
    }

    class GraphError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An unordered vertex pair, stored with u < v.
    struct Edge
    {
        int u = 0;
        int v = 0;

        auto operator<=> (const Edge &) const = default;
    };

    /**
     * A labelled simple undirected graph on vertices 0..n-1.
     *
     * Graphs are values: once constructed the edge set never changes, so they
     * can be shared freely between threads.
     */
    class Graph
    {
        private:
            int _size = 0;
            std::array<VertexSet, max_vertices> _adj{};

        public:
            Graph() = default;

            /// Edgeless graph on n vertices.
            explicit Graph(int n);

            /// Throws GraphError on out-of-range endpoints, self-loops or
            /// duplicate edges. Endpoint order within a pair is irrelevant.
            Graph(int n, std::span<const Edge> edges);

            Graph(int n, std::initializer_list<Edge> edges);

            auto size() const -> int
            {
                return _size;
            }

            auto vertices() const -> VertexSet
            {
                return first_n(_size);
            }

            auto adjacent(int u, int v) const -> bool
            {
                return contains(_adj[u], v);
            }

            auto neighbours(int v) const -> VertexSet
            {
                return _adj[v];
            }

            auto degree(int v) const -> int
            {
                return popcount(_adj[v]);
            }

            auto edge_count() const -> int;

            /// Edges with u < v, sorted lexicographically.
            auto edges() const -> std::vector<Edge>;

            auto operator== (const Graph &) const -> bool = default;
    };

    /// C_m on vertices 0..m-1, edges {i, i+1 mod m}.
    auto cycle_graph(int m) -> Graph;

    /// W_m: C_m on 0..m-1 plus hub vertex m adjacent to every rim vertex.
    auto wheel_graph(int m) -> Graph;

    auto complete_graph(int n) -> Graph;

    /// Short human-readable dump, "n=4 [0-1 1-2 ...]".
    auto to_string(const Graph &) -> std::string;
}

#endif
