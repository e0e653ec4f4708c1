/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/word.hh>

#include <algorithm>
#include <array>
#include <cctype>

using std::array;
using std::string;
using std::string_view;
using std::vector;

namespace wordrep
{
    using std::to_string;

    auto alternates(const Word & w, int x, int y) -> bool
    {
        if (x == y)
            throw WordError("alternation needs two distinct letters, got " + to_string(x) + " twice");

        int last = -1;
        bool ok = true;
        bool seen_x = false, seen_y = false;
        for (int letter : w) {
            if (letter != x && letter != y)
                continue;
            (letter == x ? seen_x : seen_y) = true;
            if (letter == last)
                ok = false;
            last = letter;
        }

        if (! seen_x || ! seen_y)
            throw WordError("letter " + to_string(seen_x ? y : x) + " does not occur in the word");
        return ok;
    }

    auto graph_of_word(const Word & w, int n) -> Graph
    {
        if (n < 0 || n > max_vertices)
            throw WordError("alphabet size " + to_string(n) + " outside 0.." + to_string(max_vertices));

        VertexSet seen = 0;
        for (int letter : w) {
            if (letter < 0 || letter >= n)
                throw WordError("letter " + to_string(letter) + " outside alphabet of size " + to_string(n));
            seen |= singleton(letter);
        }
        if (seen != first_n(n))
            throw WordError("letter " + to_string(lowest(first_n(n) & ~seen)) + " does not occur in the word");

        // one pass: since[x] collects letters seen after the latest x, and
        // a pair is broken when one of its letters repeats without the other
        array<VertexSet, max_vertices> since{}, broken{};
        VertexSet placed = 0;
        for (int x : w) {
            if (contains(placed, x))
                broken[x] |= first_n(n) & ~since[x] & ~singleton(x);
            for (VertexSet p = placed ; p ; p &= p - 1)
                since[lowest(p)] |= singleton(x);
            since[x] = 0;
            placed |= singleton(x);
        }

        vector<Edge> edges;
        for (int x = 0 ; x < n ; ++x)
            for (int y = x + 1 ; y < n ; ++y)
                if (! contains(broken[x], y) && ! contains(broken[y], x))
                    edges.push_back(Edge{ x, y });
        return Graph(n, edges);
    }

    auto represents(const Word & w, const Graph & g) -> bool
    {
        return graph_of_word(w, g.size()) == g;
    }

    namespace
    {
        struct UniformWordSearch
        {
            const Graph & graph;
            int n;
            int k;
            Word word;
            array<int, max_vertices> count{};
            // letters placed since the latest occurrence of each letter
            array<VertexSet, max_vertices> since{};
            // pairs whose subsequence already has a repeated letter
            array<VertexSet, max_vertices> broken{};
            unsigned long long nodes = 0;

            auto non_edges_broken() const -> bool
            {
                for (int x = 0 ; x < n ; ++x)
                    if ((first_n(n) & ~singleton(x) & ~graph.neighbours(x)) & ~broken[x])
                        return false;
                return true;
            }

            auto search() -> bool
            {
                ++nodes;
                if (int(word.size()) == n * k)
                    return non_edges_broken();

                for (int x = 0 ; x < n ; ++x) {
                    if (count[x] == k)
                        continue;
                    // rotating a uniform word keeps its graph, so the
                    // search may insist on starting with letter 0
                    if (word.empty() && x != 0)
                        break;

                    VertexSet newly_broken = 0;
                    if (count[x] > 0) {
                        newly_broken = first_n(n) & ~singleton(x) & ~since[x];
                        if (newly_broken & graph.neighbours(x))
                            continue;
                    }

                    auto saved_since = since;
                    auto saved_broken = broken;

                    broken[x] |= newly_broken;
                    for (VertexSet b = newly_broken ; b ; b &= b - 1)
                        broken[lowest(b)] |= singleton(x);
                    for (int y = 0 ; y < n ; ++y)
                        since[y] |= singleton(x);
                    since[x] = 0;
                    ++count[x];
                    word.push_back(x);

                    // a finished pair that still alternates can never break
                    bool dead = false;
                    if (count[x] == k)
                        for (int y = 0 ; y < n && ! dead ; ++y)
                            if (y != x && count[y] == k && ! graph.adjacent(x, y) && ! contains(broken[x], y))
                                dead = true;

                    if (! dead && search())
                        return true;

                    word.pop_back();
                    --count[x];
                    since = saved_since;
                    broken = saved_broken;
                }
                return false;
            }
        };
    }

    auto search_uniform_word(const Graph & g, int k) -> WordSearchResult
    {
        if (k < 1)
            throw WordError("uniformity must be at least 1, got " + to_string(k));
        if (g.size() > max_word_search_vertices || k > max_word_search_uniformity)
            return WordSearchResult{ WordSearchOutcome::BudgetExceeded, std::nullopt, 0 };
        if (g.size() == 0)
            return WordSearchResult{ WordSearchOutcome::Found, Word{}, 0 };

        UniformWordSearch s{ g, g.size(), k, {}, {}, {}, {}, 0 };
        s.word.reserve(g.size() * k);
        if (s.search())
            return WordSearchResult{ WordSearchOutcome::Found, s.word, s.nodes };
        return WordSearchResult{ WordSearchOutcome::Absent, std::nullopt, s.nodes };
    }

    auto parse_word(string_view text) -> Word
    {
        Word result;
        bool commas = text.find(',') != string_view::npos;
        if (! commas) {
            for (char c : text) {
                if (c < '1' || c > '9')
                    throw WordError(string("bad letter '") + c + "' in word, expected digits 1-9");
                result.push_back(c - '1');
            }
        }
        else {
            size_t start = 0;
            while (start <= text.size()) {
                size_t end = text.find(',', start);
                if (end == string_view::npos)
                    end = text.size();
                auto token = text.substr(start, end - start);
                if (token.empty() || token.size() > 2 || ! std::all_of(token.begin(), token.end(), [] (char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    throw WordError("bad letter '" + string(token) + "' in word");
                int label = std::stoi(string(token));
                if (label < 1 || label > max_vertices)
                    throw WordError("letter " + string(token) + " outside 1.." + to_string(max_vertices));
                result.push_back(label - 1);
                start = end + 1;
            }
        }
        if (result.empty())
            throw WordError("empty word");
        return result;
    }

    auto format_word(const Word & w) -> string
    {
        bool commas = std::any_of(w.begin(), w.end(), [] (int x) { return x + 1 > 9; });
        string result;
        for (unsigned i = 0 ; i < w.size() ; ++i) {
            if (commas && i > 0)
                result += ',';
            result += to_string(w[i] + 1);
        }
        return result;
    }
}
