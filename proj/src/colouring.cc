/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/colouring.hh>

#include <algorithm>
#include <array>

using std::array;
using std::optional;
using std::nullopt;
using std::vector;

namespace wordrep
{
    namespace
    {
        struct ColourSearch
        {
            const Graph & graph;
            int k;
            // classes[c] holds the vertices currently given colour c + 1
            array<VertexSet, max_vertices> classes{};
            vector<int> colours;

            auto search(int v) -> bool
            {
                if (v == graph.size())
                    return true;

                // one more than the highest colour used so far; anything
                // above that is a relabelling of this choice
                int limit = 0;
                for (int u = 0 ; u < v ; ++u)
                    limit = std::max(limit, colours[u]);
                limit = std::min(k, limit + 1);

                for (int c = 0 ; c < limit ; ++c) {
                    if (classes[c] & graph.neighbours(v))
                        continue;
                    classes[c] |= singleton(v);
                    colours[v] = c + 1;
                    if (search(v + 1))
                        return true;
                    classes[c] &= ~singleton(v);
                }
                colours[v] = 0;
                return false;
            }
        };
    }

    auto is_proper(const Graph & g, const Colouring & c) -> bool
    {
        if (c.colours.size() != unsigned(g.size()))
            return false;
        if (std::any_of(c.colours.begin(), c.colours.end(), [] (int x) { return x < 1; }))
            return false;
        for (auto [u, v] : g.edges())
            if (c.colours[u] == c.colours[v])
                return false;
        return true;
    }

    auto colour_count(const Colouring & c) -> int
    {
        return c.colours.empty() ? 0 : *std::max_element(c.colours.begin(), c.colours.end());
    }

    auto find_colouring(const Graph & g, int k) -> optional<Colouring>
    {
        if (g.size() == 0)
            return Colouring{};
        if (k < 1)
            return nullopt;
        k = std::min(k, g.size());

        ColourSearch s{ g, k, {}, vector<int>(g.size(), 0) };
        if (! s.search(0))
            return nullopt;
        return Colouring{ std::move(s.colours) };
    }

    auto chromatic_number(const Graph & g) -> int
    {
        for (int k = 0 ; ; ++k)
            if (find_colouring(g, k))
                return k;
    }
}
