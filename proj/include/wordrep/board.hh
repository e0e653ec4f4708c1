/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_BOARD_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_BOARD_HH 1

#include <wordrep/graph.hh>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep
{
    class BoardError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Grid position, rows grow downwards.
    struct GridPoint
    {
        int row = 0;
        int col = 0;

        auto operator<=> (const GridPoint &) const = default;
    };

    /// A graph whose vertices sit at distinct grid positions, numbered in
    /// row-major order of those positions.
    struct EmbeddedGraph
    {
        Graph graph;
        std::vector<GridPoint> coords;

        auto operator== (const EmbeddedGraph &) const -> bool = default;
    };

    enum class Axis
    {
        Horizontal,  ///< covers cells (row, col) and (row, col + 1)
        Vertical     ///< covers cells (row, col) and (row + 1, col)
    };

    struct Domino
    {
        int row = 0;
        int col = 0;
        Axis axis = Axis::Horizontal;

        auto operator<=> (const Domino &) const = default;
    };

    enum class BoardMode
    {
        Theorem,     ///< at most one domino
        Exploratory  ///< any number of non-overlapping dominoes
    };

    /// A rectangle of cell_rows x cell_cols unit squares, some pairs of which
    /// are merged into dominoes.
    class Board
    {
        private:
            int _rows = 1;
            int _cols = 1;
            std::vector<Domino> _dominoes;
            std::vector<int> _owner;  // per cell: domino index or -1

        public:
            /// Throws BoardError on bad dimensions, out-of-bounds or
            /// overlapping dominoes, or too many dominoes for the mode.
            Board(int cell_rows, int cell_cols, std::vector<Domino> dominoes = {}, BoardMode mode = BoardMode::Theorem);

            auto cell_rows() const -> int { return _rows; }
            auto cell_cols() const -> int { return _cols; }
            auto dominoes() const -> const std::vector<Domino> & { return _dominoes; }

            /// Domino covering the cell, or -1.
            auto owner(int row, int col) const -> int { return _owner[row * _cols + col]; }

            /// Cells not covered by a domino, row-major.
            auto unit_cells() const -> std::vector<GridPoint>;

            auto unit_cell_count() const -> int;

            /// Binary choices in a triangulation: one per unit cell and one
            /// per domino.
            auto choice_count() const -> int;

            /// Row-major index of the grid vertex at (row, col).
            auto vertex(int row, int col) const -> int { return row * (_cols + 1) + col; }

            auto operator== (const Board &) const -> bool = default;
    };

    /// "cells 2x2; domino H 0 0", 0-based.
    auto parse_board(std::string_view, BoardMode = BoardMode::Theorem) -> Board;
    auto format_board(const Board &) -> std::string;

    enum class Diagonal : std::uint8_t
    {
        Slash,     ///< bottom-left to top-right
        Backslash  ///< top-left to bottom-right
    };

    /**
     * The two triangulations of a domino's hexagon. The long chord joins
     * opposite corners, and each of its ends is joined to the middle vertex
     * of the far long side.
     *
     * Fall: long chord descends left to right. For a horizontal domino
     * with top TL TM TR and bottom BL BM BR this is {TL-BM, TL-BR, TM-BR}.
     * Rise: long chord ascends, {BL-TM, BL-TR, BM-TR}.
     */
    enum class DominoPattern : std::uint8_t
    {
        Fall,
        Rise
    };

    struct Triangulation
    {
        std::vector<Diagonal> cells;         ///< per unit cell, row-major
        std::vector<DominoPattern> dominoes; ///< per domino, board order

        auto operator<=> (const Triangulation &) const = default;
    };

    /// '/' or '\\' per unit cell, then 'F' or 'R' per domino.
    auto parse_triangulation(const Board &, std::string_view) -> Triangulation;
    auto format_triangulation(const Triangulation &) -> std::string;

    /// Grid vertices, unit edges except the one splitting each domino.
    auto base_graph(const Board &) -> EmbeddedGraph;

    /// base_graph plus one diagonal per unit cell and three chords per
    /// domino. Throws BoardError if t does not fit b.
    auto triangulate(const Board &, const Triangulation &) -> EmbeddedGraph;

    inline constexpr int max_enumerated_choices = 20;

    /// 2^choice_count(b).
    auto triangulation_count(const Board &) -> std::uint64_t;

    /**
     * The index-th triangulation in lexicographic order of the choice
     * vector (unit cells row-major then dominoes, Slash/Fall before
     * Backslash/Rise).
     */
    auto triangulation_at(const Board &, std::uint64_t index) -> Triangulation;

    /// All triangulations in order; throws BoardError beyond
    /// max_enumerated_choices.
    auto enumerate_triangulations(const Board &) -> std::vector<Triangulation>;
    auto for_each_triangulation(const Board &, const std::function<void (const Triangulation &)> &) -> void;

    auto domino_placements(int cell_rows, int cell_cols, Axis) -> std::vector<Domino>;

    /// Throws BoardError if the index is out of range.
    auto flip_domino_pattern(const Triangulation &, int which) -> Triangulation;

    /// The dihedral group of the square acting on grid positions.
    enum class Symmetry
    {
        Identity,
        Rotate90,      ///< clockwise
        Rotate180,
        Rotate270,
        MirrorRows,    ///< upside down
        MirrorCols,    ///< left-right
        Transpose,
        AntiTranspose
    };

    inline constexpr Symmetry all_symmetries[] = {
        Symmetry::Identity, Symmetry::Rotate90, Symmetry::Rotate180, Symmetry::Rotate270,
        Symmetry::MirrorRows, Symmetry::MirrorCols, Symmetry::Transpose, Symmetry::AntiTranspose
    };

    auto to_string(Symmetry) -> const char *;

    auto compose(Symmetry second, Symmetry first) -> Symmetry;

    /// Maps positions, shifts back to non-negative with the minimum at 0,
    /// and renumbers vertices row-major.
    auto transform(const EmbeddedGraph &, Symmetry) -> EmbeddedGraph;

    auto transform(const Board &, Symmetry, BoardMode = BoardMode::Exploratory) -> Board;

    /// The image of t as a triangulation of transform(b, s).
    auto transform(const Board &, const Triangulation &, Symmetry) -> Triangulation;
}

#endif
