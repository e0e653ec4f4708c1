/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/induced.hh>

#include <algorithm>
#include <array>
#include <functional>

using std::array;
using std::nullopt;
using std::optional;
using std::span;
using std::vector;

namespace wordrep
{
    using std::to_string;

    namespace
    {
        auto neighbour_degrees(const Graph & g, int v) -> vector<int>
        {
            vector<int> result;
            for (VertexSet n = g.neighbours(v) ; n ; n &= n - 1)
                result.push_back(g.degree(lowest(n)));
            std::sort(result.begin(), result.end(), std::greater<>());
            return result;
        }

        // every neighbour of p needs a distinct neighbour of h of at least
        // its degree
        auto dominated(const vector<int> & p, const vector<int> & h) -> bool
        {
            if (p.size() > h.size())
                return false;
            for (unsigned i = 0 ; i < p.size() ; ++i)
                if (p[i] > h[i])
                    return false;
            return true;
        }

        struct InducedSearch
        {
            const Graph & host;
            const Graph & pattern;
            vector<int> order;
            array<VertexSet, max_vertices> domains{};
            VertexMapping mapping;

            auto search(unsigned depth, VertexSet used) -> bool
            {
                if (depth == order.size())
                    return true;

                int p = order[depth];
                VertexSet candidates = domains[p] & ~used;
                for (unsigned i = 0 ; i < depth && candidates ; ++i) {
                    int q = order[i];
                    if (pattern.adjacent(p, q))
                        candidates &= host.neighbours(mapping[q]);
                    else
                        candidates &= ~host.neighbours(mapping[q]);
                }

                for ( ; candidates ; candidates &= candidates - 1) {
                    int h = lowest(candidates);
                    mapping[p] = h;
                    if (search(depth + 1, used | singleton(h)))
                        return true;
                }
                mapping[p] = -1;
                return false;
            }
        };

        auto search_order(const Graph & pattern) -> vector<int>
        {
            vector<int> order;
            VertexSet placed = 0;
            while (popcount(placed) < pattern.size()) {
                int best = -1, best_links = -1, best_degree = -1;
                for (VertexSet rest = pattern.vertices() & ~placed ; rest ; rest &= rest - 1) {
                    int v = lowest(rest);
                    int links = popcount(pattern.neighbours(v) & placed);
                    if (links > best_links || (links == best_links && pattern.degree(v) > best_degree)) {
                        best = v;
                        best_links = links;
                        best_degree = pattern.degree(v);
                    }
                }
                order.push_back(best);
                placed |= singleton(best);
            }
            return order;
        }
    }

    auto induced(const Graph & g, span<const int> keep) -> Graph
    {
        VertexSet seen = 0;
        for (int v : keep) {
            if (v < 0 || v >= g.size())
                throw GraphError("vertex " + to_string(v) + " out of range for n=" + to_string(g.size()));
            if (contains(seen, v))
                throw GraphError("vertex " + to_string(v) + " listed twice");
            seen |= singleton(v);
        }

        vector<Edge> edges;
        for (unsigned i = 0 ; i < keep.size() ; ++i)
            for (unsigned j = i + 1 ; j < keep.size() ; ++j)
                if (g.adjacent(keep[i], keep[j]))
                    edges.push_back(Edge{ int(i), int(j) });
        return Graph(int(keep.size()), edges);
    }

    auto induced(const Graph & g, VertexSet keep) -> Graph
    {
        if (keep & ~g.vertices())
            throw GraphError("vertex " + to_string(lowest(keep & ~g.vertices())) + " out of range for n=" + to_string(g.size()));
        vector<int> list;
        for ( ; keep ; keep &= keep - 1)
            list.push_back(lowest(keep));
        return induced(g, list);
    }

    auto contains_induced(const Graph & host, const Graph & pattern) -> optional<VertexMapping>
    {
        if (pattern.size() > max_pattern_vertices)
            throw GraphError("pattern has " + to_string(pattern.size()) + " vertices, limit is " + to_string(max_pattern_vertices));
        if (pattern.size() > host.size())
            return nullopt;

        InducedSearch s{ host, pattern, search_order(pattern), {}, VertexMapping(pattern.size(), -1) };

        vector<vector<int> > host_profiles;
        for (int h = 0 ; h < host.size() ; ++h)
            host_profiles.push_back(neighbour_degrees(host, h));

        for (int p = 0 ; p < pattern.size() ; ++p) {
            auto profile = neighbour_degrees(pattern, p);
            for (int h = 0 ; h < host.size() ; ++h)
                if (dominated(profile, host_profiles[h]))
                    s.domains[p] |= singleton(h);
            if (! s.domains[p])
                return nullopt;
        }

        if (! s.search(0, 0))
            return nullopt;
        return s.mapping;
    }

    auto is_induced_embedding(const Graph & host, const Graph & pattern, const VertexMapping & m) -> bool
    {
        if (m.size() != unsigned(pattern.size()))
            return false;
        VertexSet image = 0;
        for (int h : m) {
            if (h < 0 || h >= host.size() || contains(image, h))
                return false;
            image |= singleton(h);
        }
        for (int p = 0 ; p < pattern.size() ; ++p)
            for (int q = p + 1 ; q < pattern.size() ; ++q)
                if (pattern.adjacent(p, q) != host.adjacent(m[p], m[q]))
                    return false;
        return true;
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() > max_pattern_vertices || b.size() > max_pattern_vertices)
            throw GraphError("isomorphism test limited to " + to_string(max_pattern_vertices) + " vertices");
        if (a.size() != b.size() || a.edge_count() != b.edge_count())
            return false;

        auto degrees = [] (const Graph & g) {
            vector<int> d;
            for (int v = 0 ; v < g.size() ; ++v)
                d.push_back(g.degree(v));
            std::sort(d.begin(), d.end());
            return d;
        };
        if (degrees(a) != degrees(b))
            return false;

        return contains_induced(a, b).has_value();
    }
}
