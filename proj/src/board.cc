/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/board.hh>

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <sstream>

using std::array;
using std::function;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace wordrep
{
    using std::to_string;

    namespace
    {
        auto covered_cells(const Domino & d) -> array<GridPoint, 2>
        {
            if (d.axis == Axis::Horizontal)
                return { GridPoint{ d.row, d.col }, GridPoint{ d.row, d.col + 1 } };
            return { GridPoint{ d.row, d.col }, GridPoint{ d.row + 1, d.col } };
        }

        auto describe(const Domino & d) -> string
        {
            return string("domino ") + (d.axis == Axis::Horizontal ? "H " : "V ") + to_string(d.row) + " " + to_string(d.col);
        }

        // rows of the integer matrix acting on (row, col)
        using Matrix = array<array<int, 2>, 2>;

        auto matrix(Symmetry s) -> Matrix
        {
            switch (s) {
                case Symmetry::Identity:      return {{ { 1, 0 }, { 0, 1 } }};
                case Symmetry::Rotate90:      return {{ { 0, 1 }, { -1, 0 } }};
                case Symmetry::Rotate180:     return {{ { -1, 0 }, { 0, -1 } }};
                case Symmetry::Rotate270:     return {{ { 0, -1 }, { 1, 0 } }};
                case Symmetry::MirrorRows:    return {{ { -1, 0 }, { 0, 1 } }};
                case Symmetry::MirrorCols:    return {{ { 1, 0 }, { 0, -1 } }};
                case Symmetry::Transpose:     return {{ { 0, 1 }, { 1, 0 } }};
                case Symmetry::AntiTranspose: return {{ { 0, -1 }, { -1, 0 } }};
            }
            throw std::logic_error("bad symmetry");
        }

        auto map_point(const Matrix & m, GridPoint p) -> GridPoint
        {
            return GridPoint{ m[0][0] * p.row + m[0][1] * p.col, m[1][0] * p.row + m[1][1] * p.col };
        }

        // whether the image of a diagonal changes between ascending and
        // descending
        auto flips_slope(Symmetry s) -> bool
        {
            auto d = map_point(matrix(s), GridPoint{ 1, 1 });
            return (d.row > 0) != (d.col > 0);
        }

        // maps positions and shifts so the image of the box [0, max] starts
        // at the origin
        struct PointMap
        {
            Matrix m;
            GridPoint offset;

            PointMap(Symmetry s, GridPoint max) :
                m(matrix(s))
            {
                int r = 0, c = 0;
                for (auto p : { GridPoint{ 0, 0 }, GridPoint{ 0, max.col }, GridPoint{ max.row, 0 }, max }) {
                    auto q = map_point(m, p);
                    r = std::min(r, q.row);
                    c = std::min(c, q.col);
                }
                offset = GridPoint{ -r, -c };
            }

            auto operator() (GridPoint p) const -> GridPoint
            {
                auto q = map_point(m, p);
                return GridPoint{ q.row + offset.row, q.col + offset.col };
            }

            // top-left cell of the image of the unit square at cell p
            auto cell(GridPoint p) const -> GridPoint
            {
                auto a = (*this)(p);
                auto b = (*this)(GridPoint{ p.row + 1, p.col + 1 });
                return GridPoint{ std::min(a.row, b.row), std::min(a.col, b.col) };
            }
        };

        auto opposite(Diagonal d) -> Diagonal
        {
            return d == Diagonal::Slash ? Diagonal::Backslash : Diagonal::Slash;
        }

        auto opposite(DominoPattern p) -> DominoPattern
        {
            return p == DominoPattern::Fall ? DominoPattern::Rise : DominoPattern::Fall;
        }
    }

    Board::Board(int cell_rows, int cell_cols, vector<Domino> dominoes, BoardMode mode) :
        _rows(cell_rows),
        _cols(cell_cols),
        _dominoes(std::move(dominoes))
    {
        if (_rows < 1 || _cols < 1)
            throw BoardError("board needs at least one cell in each direction, got " + to_string(_rows) + "x" + to_string(_cols));
        if (mode == BoardMode::Theorem && _dominoes.size() > 1)
            throw BoardError("theorem mode allows at most one domino, got " + to_string(_dominoes.size()));

        _owner.assign(_rows * _cols, -1);
        for (unsigned i = 0 ; i < _dominoes.size() ; ++i)
            for (auto [r, c] : covered_cells(_dominoes[i])) {
                if (r < 0 || c < 0 || r >= _rows || c >= _cols)
                    throw BoardError(describe(_dominoes[i]) + " does not fit a " + to_string(_rows) + "x" + to_string(_cols) + " board");
                if (_owner[r * _cols + c] != -1)
                    throw BoardError(describe(_dominoes[i]) + " overlaps " + describe(_dominoes[_owner[r * _cols + c]]));
                _owner[r * _cols + c] = int(i);
            }
    }

    auto Board::unit_cells() const -> vector<GridPoint>
    {
        vector<GridPoint> result;
        for (int r = 0 ; r < _rows ; ++r)
            for (int c = 0 ; c < _cols ; ++c)
                if (owner(r, c) == -1)
                    result.push_back(GridPoint{ r, c });
        return result;
    }

    auto Board::unit_cell_count() const -> int
    {
        return _rows * _cols - 2 * int(_dominoes.size());
    }

    auto Board::choice_count() const -> int
    {
        return unit_cell_count() + int(_dominoes.size());
    }

    auto parse_board(string_view text, BoardMode mode) -> Board
    {
        std::istringstream in{ string(text) };
        string clause;
        int rows = 0, cols = 0;
        bool have_cells = false;
        vector<Domino> dominoes;

        while (std::getline(in, clause, ';')) {
            std::istringstream words(clause);
            string keyword;
            if (! (words >> keyword))
                continue;
            if (keyword == "cells") {
                string dims, extra;
                if (! (words >> dims) || (words >> extra))
                    throw BoardError("expected 'cells RxC', got '" + clause + "'");
                auto x = dims.find('x');
                if (x == string::npos)
                    throw BoardError("expected 'cells RxC', got '" + clause + "'");
                auto parse_int = [&] (string_view s) {
                    int v = 0;
                    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
                    if (ec != std::errc() || p != s.data() + s.size())
                        throw BoardError("bad number '" + string(s) + "' in '" + clause + "'");
                    return v;
                };
                rows = parse_int(string_view(dims).substr(0, x));
                cols = parse_int(string_view(dims).substr(x + 1));
                have_cells = true;
            }
            else if (keyword == "domino") {
                string axis, extra;
                Domino d;
                if (! (words >> axis >> d.row >> d.col) || (words >> extra) || (axis != "H" && axis != "V"))
                    throw BoardError("expected 'domino H|V row col', got '" + clause + "'");
                d.axis = axis == "H" ? Axis::Horizontal : Axis::Vertical;
                dominoes.push_back(d);
            }
            else
                throw BoardError("unknown board clause '" + clause + "'");
        }

        if (! have_cells)
            throw BoardError("board spec needs a 'cells RxC' clause");
        return Board(rows, cols, std::move(dominoes), mode);
    }

    auto format_board(const Board & b) -> string
    {
        string result = "cells " + to_string(b.cell_rows()) + "x" + to_string(b.cell_cols());
        for (auto & d : b.dominoes())
            result += "; " + describe(d);
        return result;
    }

    auto parse_triangulation(const Board & b, string_view text) -> Triangulation
    {
        unsigned units = b.unit_cell_count();
        if (text.size() != units + b.dominoes().size())
            throw BoardError("triangulation '" + string(text) + "' needs " + to_string(units) + " diagonals and "
                    + to_string(b.dominoes().size()) + " domino patterns");

        Triangulation t;
        for (unsigned i = 0 ; i < text.size() ; ++i) {
            char c = text[i];
            if (i < units) {
                if (c != '/' && c != '\\')
                    throw BoardError(string("expected '/' or '\\' for a unit cell, got '") + c + "'");
                t.cells.push_back(c == '/' ? Diagonal::Slash : Diagonal::Backslash);
            }
            else {
                if (c != 'F' && c != 'R')
                    throw BoardError(string("expected 'F' or 'R' for a domino, got '") + c + "'");
                t.dominoes.push_back(c == 'F' ? DominoPattern::Fall : DominoPattern::Rise);
            }
        }
        return t;
    }

    auto format_triangulation(const Triangulation & t) -> string
    {
        string result;
        for (auto d : t.cells)
            result += d == Diagonal::Slash ? '/' : '\\';
        for (auto p : t.dominoes)
            result += p == DominoPattern::Fall ? 'F' : 'R';
        return result;
    }

    namespace
    {
        auto grid_coords(const Board & b) -> vector<GridPoint>
        {
            vector<GridPoint> coords;
            for (int r = 0 ; r <= b.cell_rows() ; ++r)
                for (int c = 0 ; c <= b.cell_cols() ; ++c)
                    coords.push_back(GridPoint{ r, c });
            return coords;
        }

        auto base_edges(const Board & b) -> vector<Edge>
        {
            vector<Edge> edges;
            auto removed = [&] (int r1, int c1, int r2, int c2) {
                for (auto & d : b.dominoes()) {
                    if (d.axis == Axis::Horizontal && c1 == d.col + 1 && c2 == d.col + 1 && r1 == d.row && r2 == d.row + 1)
                        return true;
                    if (d.axis == Axis::Vertical && r1 == d.row + 1 && r2 == d.row + 1 && c1 == d.col && c2 == d.col + 1)
                        return true;
                }
                return false;
            };

            for (int r = 0 ; r <= b.cell_rows() ; ++r)
                for (int c = 0 ; c <= b.cell_cols() ; ++c) {
                    if (c < b.cell_cols() && ! removed(r, c, r, c + 1))
                        edges.push_back(Edge{ b.vertex(r, c), b.vertex(r, c + 1) });
                    if (r < b.cell_rows() && ! removed(r, c, r + 1, c))
                        edges.push_back(Edge{ b.vertex(r, c), b.vertex(r + 1, c) });
                }
            return edges;
        }

        auto check_vertex_count(const Board & b) -> void
        {
            int n = (b.cell_rows() + 1) * (b.cell_cols() + 1);
            if (n > max_vertices)
                throw BoardError(format_board(b) + " has " + to_string(n) + " vertices, limit is " + to_string(max_vertices));
        }
    }

    auto base_graph(const Board & b) -> EmbeddedGraph
    {
        check_vertex_count(b);
        auto edges = base_edges(b);
        return EmbeddedGraph{ Graph((b.cell_rows() + 1) * (b.cell_cols() + 1), edges), grid_coords(b) };
    }

    auto triangulate(const Board & b, const Triangulation & t) -> EmbeddedGraph
    {
        check_vertex_count(b);
        if (t.cells.size() != unsigned(b.unit_cell_count()) || t.dominoes.size() != b.dominoes().size())
            throw BoardError("triangulation '" + format_triangulation(t) + "' does not fit " + format_board(b));

        auto edges = base_edges(b);
        auto cells = b.unit_cells();
        for (unsigned i = 0 ; i < cells.size() ; ++i) {
            auto [r, c] = cells[i];
            if (t.cells[i] == Diagonal::Slash)
                edges.push_back(Edge{ b.vertex(r + 1, c), b.vertex(r, c + 1) });
            else
                edges.push_back(Edge{ b.vertex(r, c), b.vertex(r + 1, c + 1) });
        }

        for (unsigned i = 0 ; i < b.dominoes().size() ; ++i) {
            auto & d = b.dominoes()[i];
            int r = d.row, c = d.col;
            bool fall = t.dominoes[i] == DominoPattern::Fall;
            if (d.axis == Axis::Horizontal) {
                int tl = b.vertex(r, c), tm = b.vertex(r, c + 1), tr = b.vertex(r, c + 2);
                int bl = b.vertex(r + 1, c), bm = b.vertex(r + 1, c + 1), br = b.vertex(r + 1, c + 2);
                if (fall)
                    edges.insert(edges.end(), { Edge{ tl, bm }, Edge{ tl, br }, Edge{ tm, br } });
                else
                    edges.insert(edges.end(), { Edge{ bl, tm }, Edge{ bl, tr }, Edge{ bm, tr } });
            }
            else {
                int l0 = b.vertex(r, c), l1 = b.vertex(r + 1, c), l2 = b.vertex(r + 2, c);
                int r0 = b.vertex(r, c + 1), r1 = b.vertex(r + 1, c + 1), r2 = b.vertex(r + 2, c + 1);
                if (fall)
                    edges.insert(edges.end(), { Edge{ l0, r1 }, Edge{ l0, r2 }, Edge{ l1, r2 } });
                else
                    edges.insert(edges.end(), { Edge{ l2, r1 }, Edge{ l2, r0 }, Edge{ l1, r0 } });
            }
        }

        return EmbeddedGraph{ Graph((b.cell_rows() + 1) * (b.cell_cols() + 1), edges), grid_coords(b) };
    }

    auto triangulation_count(const Board & b) -> uint64_t
    {
        if (b.choice_count() >= 64)
            throw BoardError(format_board(b) + " has too many triangulations to count");
        return uint64_t{1} << b.choice_count();
    }

    auto triangulation_at(const Board & b, uint64_t index) -> Triangulation
    {
        int m = b.choice_count();
        if (index >= triangulation_count(b))
            throw BoardError("triangulation index " + to_string(index) + " out of range for " + format_board(b));

        Triangulation t;
        int units = b.unit_cell_count();
        for (int i = 0 ; i < m ; ++i) {
            bool bit = (index >> (m - 1 - i)) & 1;
            if (i < units)
                t.cells.push_back(bit ? Diagonal::Backslash : Diagonal::Slash);
            else
                t.dominoes.push_back(bit ? DominoPattern::Rise : DominoPattern::Fall);
        }
        return t;
    }

    auto for_each_triangulation(const Board & b, const function<void (const Triangulation &)> & f) -> void
    {
        if (b.choice_count() > max_enumerated_choices)
            throw BoardError(format_board(b) + " has " + to_string(b.choice_count()) + " choices, enumeration limit is "
                    + to_string(max_enumerated_choices));
        for (uint64_t i = 0, count = triangulation_count(b) ; i < count ; ++i)
            f(triangulation_at(b, i));
    }

    auto enumerate_triangulations(const Board & b) -> vector<Triangulation>
    {
        vector<Triangulation> result;
        for_each_triangulation(b, [&] (const Triangulation & t) { result.push_back(t); });
        return result;
    }

    auto domino_placements(int cell_rows, int cell_cols, Axis axis) -> vector<Domino>
    {
        vector<Domino> result;
        int row_span = axis == Axis::Vertical ? 2 : 1, col_span = axis == Axis::Horizontal ? 2 : 1;
        for (int r = 0 ; r + row_span <= cell_rows ; ++r)
            for (int c = 0 ; c + col_span <= cell_cols ; ++c)
                result.push_back(Domino{ r, c, axis });
        return result;
    }

    auto flip_domino_pattern(const Triangulation & t, int which) -> Triangulation
    {
        if (which < 0 || unsigned(which) >= t.dominoes.size())
            throw BoardError("domino index " + to_string(which) + " out of range, triangulation has "
                    + to_string(t.dominoes.size()));
        Triangulation result = t;
        result.dominoes[which] = opposite(result.dominoes[which]);
        return result;
    }

    auto to_string(Symmetry s) -> const char *
    {
        switch (s) {
            case Symmetry::Identity:      return "id";
            case Symmetry::Rotate90:      return "rot90";
            case Symmetry::Rotate180:     return "rot180";
            case Symmetry::Rotate270:     return "rot270";
            case Symmetry::MirrorRows:    return "mirror-rows";
            case Symmetry::MirrorCols:    return "mirror-cols";
            case Symmetry::Transpose:     return "transpose";
            case Symmetry::AntiTranspose: return "anti-transpose";
        }
        return "?";
    }

    auto compose(Symmetry second, Symmetry first) -> Symmetry
    {
        auto a = matrix(second), b = matrix(first);
        Matrix product{};
        for (int i = 0 ; i < 2 ; ++i)
            for (int j = 0 ; j < 2 ; ++j)
                product[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        for (auto s : all_symmetries)
            if (matrix(s) == product)
                return s;
        throw std::logic_error("dihedral group not closed");
    }

    auto transform(const EmbeddedGraph & e, Symmetry s) -> EmbeddedGraph
    {
        GridPoint low{ 0, 0 }, high{ 0, 0 };
        if (! e.coords.empty()) {
            low = high = e.coords.front();
            for (auto p : e.coords) {
                low = GridPoint{ std::min(low.row, p.row), std::min(low.col, p.col) };
                high = GridPoint{ std::max(high.row, p.row), std::max(high.col, p.col) };
            }
        }
        PointMap map(s, GridPoint{ high.row - low.row, high.col - low.col });

        vector<GridPoint> image;
        for (auto p : e.coords)
            image.push_back(map(GridPoint{ p.row - low.row, p.col - low.col }));

        vector<int> order(image.size());
        for (unsigned i = 0 ; i < order.size() ; ++i)
            order[i] = int(i);
        std::sort(order.begin(), order.end(), [&] (int a, int b) { return image[a] < image[b]; });

        vector<int> renumber(image.size());
        vector<GridPoint> coords;
        for (unsigned i = 0 ; i < order.size() ; ++i) {
            renumber[order[i]] = int(i);
            coords.push_back(image[order[i]]);
        }

        vector<Edge> edges;
        for (auto [u, v] : e.graph.edges())
            edges.push_back(Edge{ renumber[u], renumber[v] });
        return EmbeddedGraph{ Graph(e.graph.size(), edges), std::move(coords) };
    }

    auto transform(const Board & b, Symmetry s, BoardMode mode) -> Board
    {
        PointMap map(s, GridPoint{ b.cell_rows(), b.cell_cols() });
        auto corner = map(GridPoint{ b.cell_rows(), b.cell_cols() });
        auto origin = map(GridPoint{ 0, 0 });
        int rows = std::abs(corner.row - origin.row), cols = std::abs(corner.col - origin.col);

        vector<Domino> dominoes;
        for (auto & d : b.dominoes()) {
            auto [first, second] = covered_cells(d);
            auto a = map.cell(first), c = map.cell(second);
            dominoes.push_back(Domino{ std::min(a.row, c.row), std::min(a.col, c.col),
                    a.row == c.row ? Axis::Horizontal : Axis::Vertical });
        }
        return Board(rows, cols, std::move(dominoes), mode);
    }

    auto transform(const Board & b, const Triangulation & t, Symmetry s) -> Triangulation
    {
        if (t.cells.size() != unsigned(b.unit_cell_count()) || t.dominoes.size() != b.dominoes().size())
            throw BoardError("triangulation '" + format_triangulation(t) + "' does not fit " + format_board(b));

        PointMap map(s, GridPoint{ b.cell_rows(), b.cell_cols() });
        bool flip = flips_slope(s);

        std::map<GridPoint, Diagonal> image_cells;
        auto cells = b.unit_cells();
        for (unsigned i = 0 ; i < cells.size() ; ++i)
            image_cells[map.cell(cells[i])] = flip ? opposite(t.cells[i]) : t.cells[i];

        Triangulation result;
        for (auto & [cell, diagonal] : image_cells)
            result.cells.push_back(diagonal);
        for (auto p : t.dominoes)
            result.dominoes.push_back(flip ? opposite(p) : p);
        return result;
    }
}
