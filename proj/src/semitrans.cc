/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/semitrans.hh>

#include <algorithm>
#include <stdexcept>

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
        using Rows = array<VertexSet, max_vertices>;

        // reach[v] is everything v reaches by a directed path of length >= 1
        auto transitive_closure(int n, const Rows & out) -> Rows
        {
            Rows reach{};
            for (int v = 0 ; v < n ; ++v) {
                VertexSet seen = 0, frontier = out[v];
                while (frontier) {
                    seen |= frontier;
                    VertexSet next = 0;
                    for (VertexSet f = frontier ; f ; f &= f - 1)
                        next |= out[lowest(f)];
                    frontier = next & ~seen;
                }
                reach[v] = seen;
            }
            return reach;
        }

        auto reverse_rows(int n, const Rows & rows) -> Rows
        {
            Rows result{};
            for (int v = 0 ; v < n ; ++v)
                for (VertexSet r = rows[v] ; r ; r &= r - 1)
                    result[lowest(r)] |= singleton(v);
            return result;
        }

        // Vertices on some directed tail -> head path, endpoints included.
        auto between(int tail, int head, const Rows & reach, const Rows & coreach) -> VertexSet
        {
            return (reach[tail] & coreach[head]) | singleton(tail) | singleton(head);
        }

        // First pair x, y inside the tail -> head corridor with x reaching y
        // but not adjacent to it, or (-1, -1).
        auto corridor_violation(const Graph & g, int tail, int head, const Rows & reach, const Rows & coreach) -> Arc
        {
            VertexSet corridor = between(tail, head, reach, coreach);
            for (VertexSet c = corridor ; c ; c &= c - 1) {
                int x = lowest(c);
                VertexSet bad = reach[x] & corridor & ~g.neighbours(x);
                if (bad)
                    return Arc{ x, lowest(bad) };
            }
            return Arc{ -1, -1 };
        }

        // A shortest directed path from -> to, both included; from must
        // reach to.
        auto directed_path(int n, const Rows & out, int from, int to) -> vector<int>
        {
            vector<int> parent(n, -1);
            VertexSet seen = singleton(from), frontier = singleton(from);
            while (frontier && ! contains(seen, to)) {
                VertexSet next = 0;
                for (VertexSet f = frontier ; f ; f &= f - 1) {
                    int v = lowest(f);
                    for (VertexSet o = out[v] & ~seen & ~next ; o ; o &= o - 1) {
                        parent[lowest(o)] = v;
                        next |= singleton(lowest(o));
                    }
                }
                seen |= next;
                frontier = next;
            }
            vector<int> path;
            for (int v = to ; v != -1 ; v = (v == from ? -1 : parent[v]))
                path.push_back(v);
            std::reverse(path.begin(), path.end());
            return path;
        }

        auto orientation_rows(const Orientation & o) -> Rows
        {
            Rows out{};
            for (int v = 0 ; v < o.graph().size() ; ++v)
                out[v] = o.out_neighbours(v);
            return out;
        }
    }

    Orientation::Orientation(Graph g) :
        _graph(std::move(g))
    {
    }

    Orientation::Orientation(Graph g, span<const Arc> arcs) :
        _graph(std::move(g))
    {
        for (auto [t, h] : arcs) {
            if (t < 0 || h < 0 || t >= _graph.size() || h >= _graph.size() || ! _graph.adjacent(t, h))
                throw OrientationError("arc " + to_string(t) + "->" + to_string(h) + " is not on an edge of the graph");
            if (has_arc(t, h) || has_arc(h, t))
                throw OrientationError("edge {" + to_string(t) + "," + to_string(h) + "} oriented twice");
            _out[t] |= singleton(h);
        }
    }

    auto Orientation::direction(Edge e) const -> Direction
    {
        if (has_arc(e.u, e.v))
            return e.u < e.v ? Direction::Forward : Direction::Backward;
        if (has_arc(e.v, e.u))
            return e.u < e.v ? Direction::Backward : Direction::Forward;
        return Direction::Undecided;
    }

    auto Orientation::is_total() const -> bool
    {
        int arcs = 0;
        for (int v = 0 ; v < _graph.size() ; ++v)
            arcs += popcount(_out[v]);
        return arcs == _graph.edge_count();
    }

    auto Orientation::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        for (int v = 0 ; v < _graph.size() ; ++v)
            for (VertexSet o = _out[v] ; o ; o &= o - 1)
                result.push_back(Arc{ v, lowest(o) });
        return result;
    }

    auto Orientation::with_arc(Arc a) const -> Orientation
    {
        auto all = arcs();
        all.push_back(a);
        return Orientation(_graph, all);
    }

    auto Orientation::reversed() const -> Orientation
    {
        vector<Arc> flipped;
        for (auto [t, h] : arcs())
            flipped.push_back(Arc{ h, t });
        return Orientation(_graph, flipped);
    }

    auto ShortcutWitness::holds_in(const Orientation & o) const -> bool
    {
        int n = o.graph().size();
        if (path.size() < 4)
            return false;
        VertexSet seen = 0;
        for (int v : path) {
            if (v < 0 || v >= n || contains(seen, v))
                return false;
            seen |= singleton(v);
        }
        for (unsigned i = 0 ; i + 1 < path.size() ; ++i)
            if (! o.has_arc(path[i], path[i + 1]))
                return false;
        if (! o.has_arc(path.front(), path.back()))
            return false;

        auto first = std::find(path.begin(), path.end(), missing.tail);
        auto second = std::find(path.begin(), path.end(), missing.head);
        if (first == path.end() || second == path.end() || first >= second)
            return false;
        return ! o.has_arc(missing.tail, missing.head);
    }

    auto is_acyclic(const Orientation & o) -> bool
    {
        if (! o.is_total())
            throw OrientationError("acyclicity check needs a total orientation");

        // Kahn: repeatedly strip sources
        int n = o.graph().size();
        Rows in = reverse_rows(n, orientation_rows(o));
        VertexSet remaining = o.graph().vertices();
        bool progress = true;
        while (remaining && progress) {
            progress = false;
            for (VertexSet r = remaining ; r ; r &= r - 1) {
                int v = lowest(r);
                if (! (in[v] & remaining)) {
                    remaining &= ~singleton(v);
                    progress = true;
                }
            }
        }
        return remaining == 0;
    }

    auto find_shortcut(const Orientation & o) -> optional<ShortcutWitness>
    {
        if (! is_acyclic(o))
            throw OrientationError("shortcut search needs an acyclic orientation");

        int n = o.graph().size();
        Rows out = orientation_rows(o);
        Rows reach = transitive_closure(n, out);
        Rows coreach = reverse_rows(n, reach);

        for (auto [tail, head] : o.arcs()) {
            auto [x, y] = corridor_violation(o.graph(), tail, head, reach, coreach);
            if (x == -1)
                continue;

            // tail ~> x ~> y ~> head is a path because the orientation is
            // acyclic, so no vertex can repeat
            ShortcutWitness witness{ directed_path(n, out, tail, x), Arc{ x, y } };
            auto middle = directed_path(n, out, x, y);
            witness.path.insert(witness.path.end(), middle.begin() + 1, middle.end());
            auto last = directed_path(n, out, y, head);
            witness.path.insert(witness.path.end(), last.begin() + 1, last.end());

            if (! witness.holds_in(o))
                throw std::logic_error("internal error: reconstructed shortcut witness does not hold");
            return witness;
        }
        return nullopt;
    }

    auto is_semi_transitive(const Orientation & o) -> bool
    {
        return is_acyclic(o) && ! find_shortcut(o);
    }

    auto orientation_from_colouring(const Graph & g, const Colouring & c) -> Orientation
    {
        if (! is_proper(g, c))
            throw OrientationError("colouring is not proper");
        if (colour_count(c) > 3)
            throw OrientationError("colouring uses more than three colours");

        vector<Arc> arcs;
        for (auto [u, v] : g.edges())
            arcs.push_back(c.colours[u] < c.colours[v] ? Arc{ u, v } : Arc{ v, u });
        return Orientation(g, arcs);
    }

    namespace
    {
        struct OrientationSearch
        {
            const Graph & graph;
            int n;
            vector<Edge> order;
            unsigned long long max_nodes;
            unsigned long long nodes = 0;
            bool aborted = false;
            optional<Rows> solution;

            // Closes out under reachability and checks it. Returns false on
            // a cycle or an unavoidable shortcut.
            auto propagate(Rows & out) const -> bool
            {
                Rows reach = transitive_closure(n, out);
                for (int v = 0 ; v < n ; ++v)
                    if (contains(reach[v], v))
                        return false;

                // undecided edges to reachable vertices must point forward;
                // this leaves reach unchanged
                Rows in = reverse_rows(n, out);
                for (int v = 0 ; v < n ; ++v)
                    out[v] |= reach[v] & graph.neighbours(v) & ~in[v];

                Rows coreach = reverse_rows(n, reach);
                for (int t = 0 ; t < n ; ++t)
                    for (VertexSet h = out[t] ; h ; h &= h - 1)
                        if (corridor_violation(graph, t, lowest(h), reach, coreach).tail != -1)
                            return false;
                return true;
            }

            auto search(const Rows & out, bool first_branch) -> bool
            {
                if (++nodes > max_nodes) {
                    aborted = true;
                    return false;
                }

                auto next = std::find_if(order.begin(), order.end(), [&] (const Edge & e) {
                        return ! contains(out[e.u], e.v) && ! contains(out[e.v], e.u);
                        });
                if (next == order.end()) {
                    solution = out;
                    return true;
                }

                for (int side = 0 ; side < (first_branch ? 1 : 2) ; ++side) {
                    Rows child = out;
                    if (side == 0)
                        child[next->u] |= singleton(next->v);
                    else
                        child[next->v] |= singleton(next->u);
                    if (propagate(child) && search(child, false))
                        return true;
                    if (aborted)
                        return false;
                }
                return false;
            }
        };

        // (smaller endpoint degree descending, then lexicographic)
        auto branching_order(const Graph & g) -> vector<Edge>
        {
            auto order = g.edges();
            std::stable_sort(order.begin(), order.end(), [&] (const Edge & a, const Edge & b) {
                    return std::min(g.degree(a.u), g.degree(a.v)) > std::min(g.degree(b.u), g.degree(b.v));
                    });
            return order;
        }
    }

    auto exists_semi_transitive(const Graph & g, const SearchBudget & budget) -> OrientationSearchResult
    {
        if (g.size() > budget.max_vertices || g.edge_count() > budget.max_edges)
            return OrientationSearchResult{ SearchOutcome::BudgetExceeded, nullopt, 0 };

        OrientationSearch s{ .graph = g, .n = g.size(), .order = branching_order(g), .max_nodes = budget.max_nodes, .nodes = 0, .aborted = false, .solution = std::nullopt };
        s.search(Rows{}, true);

        if (s.aborted)
            return OrientationSearchResult{ SearchOutcome::BudgetExceeded, nullopt, s.nodes };
        if (! s.solution)
            return OrientationSearchResult{ SearchOutcome::Absent, nullopt, s.nodes };

        vector<Arc> arcs;
        for (int v = 0 ; v < g.size() ; ++v)
            for (VertexSet o = (*s.solution)[v] ; o ; o &= o - 1)
                arcs.push_back(Arc{ v, lowest(o) });
        Orientation result(g, arcs);
        if (! is_semi_transitive(result))
            throw std::logic_error("internal error: orientation search produced an invalid certificate");
        return OrientationSearchResult{ SearchOutcome::Found, std::move(result), s.nodes };
    }

    auto decide_word_representable(const Graph & g, const SearchBudget & budget) -> Decision
    {
        if (auto colouring = find_colouring(g, 3)) {
            auto certificate = orientation_from_colouring(g, *colouring);
            if (! is_semi_transitive(certificate))
                throw std::logic_error("internal error: colour-level orientation is not semi-transitive");
            return Decision{ Verdict::Yes, std::move(certificate), std::move(colouring), 0 };
        }

        auto result = exists_semi_transitive(g, budget);
        switch (result.outcome) {
            case SearchOutcome::Found:
                return Decision{ Verdict::Yes, std::move(result.orientation), nullopt, result.nodes };
            case SearchOutcome::Absent:
                return Decision{ Verdict::No, nullopt, nullopt, result.nodes };
            case SearchOutcome::BudgetExceeded:
                break;
        }
        return Decision{ Verdict::BudgetExceeded, nullopt, nullopt, result.nodes };
    }

    auto to_string(Verdict v) -> const char *
    {
        switch (v) {
            case Verdict::Yes:            return "yes";
            case Verdict::No:             return "no";
            case Verdict::BudgetExceeded: return "budget";
        }
        return "?";
    }
}
