/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_SEMITRANS_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_SEMITRANS_HH 1

#include <wordrep/colouring.hh>
#include <wordrep/graph.hh>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace wordrep
{
    class OrientationError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A directed edge tail -> head.
    struct Arc
    {
        int tail = 0;
        int head = 0;

        auto operator<=> (const Arc &) const = default;
    };

    /// Direction of an edge {u, v} with u < v.
    enum class Direction : std::uint8_t
    {
        Undecided,
        Forward,    ///< u -> v
        Backward    ///< v -> u
    };

    /**
     * A possibly partial assignment of directions to the edges of a graph.
     * Arcs may only be placed on edges of the graph.
     */
    class Orientation
    {
        private:
            Graph _graph;
            std::array<VertexSet, max_vertices> _out{};

        public:
            Orientation() = default;

            /// Every edge undecided.
            explicit Orientation(Graph);

            /// Throws OrientationError if an arc is not on an edge or an
            /// edge is given twice.
            Orientation(Graph, std::span<const Arc>);

            auto graph() const -> const Graph &
            {
                return _graph;
            }

            auto has_arc(int tail, int head) const -> bool
            {
                return contains(_out[tail], head);
            }

            auto out_neighbours(int v) const -> VertexSet
            {
                return _out[v];
            }

            auto direction(Edge) const -> Direction;

            auto is_total() const -> bool;

            /// Arcs sorted by (tail, head).
            auto arcs() const -> std::vector<Arc>;

            /// Copy with one more arc; throws like the constructor.
            auto with_arc(Arc) const -> Orientation;

            /// Every arc reversed, undecided edges stay undecided.
            auto reversed() const -> Orientation;

            auto operator== (const Orientation &) const -> bool = default;
    };

    /**
     * Evidence of a shortcut: arcs path[i] -> path[i+1] and path.front() ->
     * path.back() exist, there are at least four vertices, and the arc
     * missing.first -> missing.second is absent although missing.first comes
     * earlier on the path.
     */
    struct ShortcutWitness
    {
        std::vector<int> path;
        Arc missing;

        auto holds_in(const Orientation &) const -> bool;
    };

    /// Throws OrientationError on a partial orientation.
    auto is_acyclic(const Orientation &) -> bool;

    /// Throws OrientationError on a partial or cyclic orientation.
    auto find_shortcut(const Orientation &) -> std::optional<ShortcutWitness>;

    auto is_semi_transitive(const Orientation &) -> bool;

    /// Orients every edge from the lower colour to the higher one. Throws
    /// OrientationError unless the colouring is proper and uses only 1..3.
    auto orientation_from_colouring(const Graph &, const Colouring &) -> Orientation;

    enum class SearchOutcome
    {
        Found,
        Absent,
        BudgetExceeded
    };

    struct SearchBudget
    {
        int max_vertices = 20;
        int max_edges = 48;
        unsigned long long max_nodes = 20'000'000;
    };

    struct OrientationSearchResult
    {
        SearchOutcome outcome;
        std::optional<Orientation> orientation;
        unsigned long long nodes = 0;
    };

    /**
     * Exhaustive search for an acyclic, shortcut-free orientation.
     *
     * Edges are branched on in most-constrained-first order. After every
     * branch the partial orientation is closed under reachability: any
     * undecided edge between a vertex and one it already reaches is forced
     * in that direction, a reachable cycle fails, and so does any oriented
     * arc a -> b whose a-to-b paths pass through two non-adjacent vertices
     * one of which reaches the other. The first branch only tries one
     * direction, since reversing a semi-transitive orientation gives
     * another.
     */
    auto exists_semi_transitive(const Graph &, const SearchBudget & = {}) -> OrientationSearchResult;

    enum class Verdict
    {
        Yes,
        No,
        BudgetExceeded
    };

    struct Decision
    {
        Verdict verdict;
        std::optional<Orientation> certificate;
        std::optional<Colouring> colouring;  ///< set when the 3-colouring fast path fired
        unsigned long long nodes = 0;
    };

    /// A 3-colourable graph is accepted through orientation_from_colouring
    /// without search; everything else goes to exists_semi_transitive.
    /// Every Yes certificate has been re-checked by is_semi_transitive.
    auto decide_word_representable(const Graph &, const SearchBudget & = {}) -> Decision;

    auto to_string(Verdict) -> const char *;
}

#endif
