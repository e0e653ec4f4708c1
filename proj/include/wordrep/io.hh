/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_IO_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_IO_HH 1

#include <wordrep/board.hh>
#include <wordrep/catalog.hh>
#include <wordrep/colouring.hh>
#include <wordrep/graph.hh>
#include <wordrep/semitrans.hh>
#include <wordrep/verify.hh>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace wordrep
{
    using Json = nlohmann::ordered_json;

    class FormatError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// {"n": 4, "edges": [[0,1], ...]}, 0-based, u < v, sorted.
    auto graph_to_json(const Graph &) -> Json;

    /// Throws FormatError on a malformed document and GraphError on an
    /// invalid graph.
    auto graph_from_json(const Json &) -> Graph;

    auto read_graph_file(const std::string & path) -> Graph;

    /// {"edges": [[u, v, "uv"|"vu"], ...]} over every edge; the
    /// orientation must be total.
    auto orientation_to_json(const Orientation &) -> Json;

    auto orientation_from_json(const Graph &, const Json &) -> Orientation;

    auto embedded_to_json(const EmbeddedGraph &) -> Json;

    /// One JSON-lines record.
    auto classification_to_json(const Classification &) -> Json;

    /// {"summary": {...}}; no timing, so output is reproducible.
    auto summary_to_json(const SweepReport &) -> Json;

    auto forbidden_set_to_json(const ForbiddenSet &) -> Json;

    /// Undirected DOT with pinned node positions (x = column, y = -row).
    auto embedded_to_dot(const std::string & name, const EmbeddedGraph &) -> std::string;
}

#endif
