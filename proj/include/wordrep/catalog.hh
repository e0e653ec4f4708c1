/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_CATALOG_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_CATALOG_HH 1

#include <wordrep/board.hh>
#include <wordrep/induced.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep
{
    class CatalogError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// One of the minimal non-3-colourable triangulation pieces, with its
    /// drawing coordinates.
    struct PatternGraph
    {
        std::string name;
        EmbeddedGraph embedded;
        bool has_domino = false;
        std::string provenance;
    };

    /**
     * Parses and validates pattern fixtures: edge-list checksum, distinct
     * coordinates, vertex counts per family, and non-3-colourability. Throws
     * CatalogError naming the pattern on any failure.
     */
    auto load_catalog(std::string_view json) -> std::vector<PatternGraph>;

    /// The twelve built-in patterns T1, T2, A1..A8, B1, B2, loaded once.
    auto minimal_graphs() -> const std::vector<PatternGraph> &;

    /// FNV-1a over "u,v;" for each edge in sorted order.
    auto edge_checksum(const Graph &) -> std::uint64_t;

    enum class ClosurePolicy
    {
        /// T graphs under the four rotations, domino graphs under the half
        /// turn.
        Literal,
        /// T graphs under all eight symmetries, domino graphs under the
        /// half turn and both mirrors (the domino stays horizontal).
        Extended
    };

    auto to_string(ClosurePolicy) -> const char *;

    /// An isomorphism class of the closure, with every distinct drawing of
    /// it that the policy generates.
    struct ForbiddenMember
    {
        std::string name;
        Graph graph;
        std::vector<std::string> image_names;
        std::vector<EmbeddedGraph> images;
    };

    struct ForbiddenSet
    {
        ClosurePolicy policy;
        std::vector<ForbiddenMember> members;

        auto image_count() const -> int;
    };

    /// Symmetries each pattern is closed under for a policy.
    auto closure_group(const PatternGraph &, ClosurePolicy) -> std::vector<Symmetry>;

    auto forbidden_set(ClosurePolicy) -> ForbiddenSet;

    struct ForbiddenHit
    {
        std::string pattern;       ///< member name
        std::string image;         ///< drawing matched, if found by translation
        VertexMapping mapping;     ///< pattern vertex -> host vertex
        bool embedded = false;     ///< found by sliding a drawing over the host grid
    };

    /**
     * Looks for an induced copy of some member in host. Every drawing of
     * every member is first slid over the host grid looking for an exact
     * induced match; such hits are re-confirmed with the general matcher.
     * If no translated drawing fits, each member is tried with the general
     * induced-subgraph matcher. Members are visited in set order.
     */
    auto find_forbidden(const EmbeddedGraph & host, const ForbiddenSet &) -> std::optional<ForbiddenHit>;

    /// Only the translation pass of find_forbidden.
    auto find_forbidden_embedded(const EmbeddedGraph & host, const ForbiddenSet &) -> std::optional<ForbiddenHit>;

    /// Only the general pass of find_forbidden.
    auto find_forbidden_general(const Graph & host, const ForbiddenSet &) -> std::optional<ForbiddenHit>;
}

#endif
