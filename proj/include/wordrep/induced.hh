/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_INDUCED_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_INDUCED_HH 1

#include <wordrep/graph.hh>

#include <optional>
#include <span>
#include <vector>

namespace wordrep
{
    inline constexpr int max_pattern_vertices = 12;

    /// Subgraph induced by keep, vertex keep[i] becoming vertex i. Throws
    /// GraphError on out-of-range or repeated vertices.
    auto induced(const Graph &, std::span<const int> keep) -> Graph;

    /// As above, keeping vertices in ascending order.
    auto induced(const Graph &, VertexSet keep) -> Graph;

    /// mapping[p] is the host vertex assigned to pattern vertex p.
    using VertexMapping = std::vector<int>;

    /**
     * Finds an injective map from pattern into host that preserves both
     * adjacency and non-adjacency, i.e. an induced copy of pattern.
     *
     * Plain backtracking: pattern vertices are visited most-connected-first,
     * and host candidates are filtered by degree and by a neighbourhood
     * degree-sequence domination test. Deterministic for fixed inputs.
     *
     * Throws GraphError if the pattern has more than max_pattern_vertices.
     */
    auto contains_induced(const Graph & host, const Graph & pattern) -> std::optional<VertexMapping>;

    /// Checks that mapping is an induced embedding of pattern into host.
    auto is_induced_embedding(const Graph & host, const Graph & pattern, const VertexMapping &) -> bool;

    /// Throws GraphError if either side exceeds max_pattern_vertices.
    auto are_isomorphic(const Graph &, const Graph &) -> bool;
}

#endif
