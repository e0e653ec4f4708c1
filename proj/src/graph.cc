/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/graph.hh>

#include <sstream>

using std::span;
using std::string;
using std::vector;

namespace wordrep
{
    using std::to_string;

    Graph::Graph(int n) :
        _size(n)
    {
        if (n < 0 || n > max_vertices)
            throw GraphError("vertex count " + to_string(n) + " outside 0.." + to_string(max_vertices));
    }

    Graph::Graph(int n, span<const Edge> edges) :
        Graph(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError("edge {" + to_string(u) + "," + to_string(v) + "} out of range for n=" + to_string(n));
            if (u == v)
                throw GraphError("self-loop at vertex " + to_string(u));
            if (adjacent(u, v))
                throw GraphError("duplicate edge {" + to_string(u) + "," + to_string(v) + "}");
            _adj[u] |= singleton(v);
            _adj[v] |= singleton(u);
        }
    }

    Graph::Graph(int n, std::initializer_list<Edge> edges) :
        Graph(n, span<const Edge>(edges.begin(), edges.size()))
    {
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0 ; v < _size ; ++v)
            twice += degree(v);
        return twice / 2;
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int u = 0 ; u < _size ; ++u)
            for (VertexSet rest = _adj[u] & ~first_n(u + 1) ; rest ; rest &= rest - 1)
                result.push_back(Edge{ u, lowest(rest) });
        return result;
    }

    auto cycle_graph(int m) -> Graph
    {
        if (m < 3)
            throw GraphError("cycle needs at least 3 vertices, got " + to_string(m));
        vector<Edge> edges;
        for (int i = 0 ; i < m ; ++i)
            edges.push_back(Edge{ i, (i + 1) % m });
        return Graph(m, edges);
    }

    auto wheel_graph(int m) -> Graph
    {
        if (m < 3)
            throw GraphError("wheel needs a rim of at least 3 vertices, got " + to_string(m));
        vector<Edge> edges;
        for (int i = 0 ; i < m ; ++i) {
            edges.push_back(Edge{ i, (i + 1) % m });
            edges.push_back(Edge{ i, m });
        }
        return Graph(m + 1, edges);
    }

    auto complete_graph(int n) -> Graph
    {
        vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                edges.push_back(Edge{ u, v });
        return Graph(n, edges);
    }

    auto to_string(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "n=" << g.size() << " [";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            if (! first)
                out << ' ';
            first = false;
            out << u << '-' << v;
        }
        out << ']';
        return out.str();
    }
}
