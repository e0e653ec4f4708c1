/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_COLOURING_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_COLOURING_HH 1

#include <wordrep/graph.hh>

#include <optional>
#include <vector>

namespace wordrep
{
    /// colours[v] is the colour of vertex v, counted from 1.
    struct Colouring
    {
        std::vector<int> colours;

        auto operator== (const Colouring &) const -> bool = default;
    };

    /// No edge joins two equal colours, and there is one colour per vertex.
    auto is_proper(const Graph &, const Colouring &) -> bool;

    /// Largest colour used, 0 for the empty graph.
    auto colour_count(const Colouring &) -> int;

    /**
     * Finds a proper colouring using colours 1..k, or nothing if there is none.
     *
     * Backtracks over vertices in index order trying colours in ascending
     * order, with vertex 0 pinned to colour 1, so the witness is the same on
     * every run.
     */
    auto find_colouring(const Graph &, int k) -> std::optional<Colouring>;

    inline auto is_k_colourable(const Graph & g, int k) -> bool
    {
        return find_colouring(g, k).has_value();
    }

    auto chromatic_number(const Graph &) -> int;
}

#endif
