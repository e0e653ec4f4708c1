/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WORDREP_GUARD_INCLUDE_WORDREP_WORD_HH
#define WORDREP_GUARD_INCLUDE_WORDREP_WORD_HH 1

#include <wordrep/graph.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wordrep
{
    /// Letters are vertex numbers, 0-based.
    using Word = std::vector<int>;

    class WordError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// True iff deleting every other letter leaves xyxy... or yxyx...
    /// Throws WordError if x == y or either letter is missing from w.
    auto alternates(const Word & w, int x, int y) -> bool;

    /// The graph on 0..n-1 whose edges are exactly the alternating pairs.
    /// Throws WordError unless w uses each of 0..n-1 and nothing else.
    auto graph_of_word(const Word & w, int n) -> Graph;

    /// Exact equality of graph_of_word(w, g.size()) and g, no relabelling.
    auto represents(const Word & w, const Graph & g) -> bool;

    enum class WordSearchOutcome
    {
        Found,
        Absent,
        BudgetExceeded
    };

    struct WordSearchResult
    {
        WordSearchOutcome outcome;
        std::optional<Word> word;
        unsigned long long nodes = 0;
    };

    inline constexpr int max_word_search_vertices = 6;
    inline constexpr int max_word_search_uniformity = 3;

    /**
     * Exhaustive search for a word in which every letter occurs exactly k
     * times and which represents g.
     *
     * Letters are placed one slot at a time; a placement is rejected as soon
     * as some edge pair stops alternating, and the word is required to start
     * with letter 0 (any rotation of a uniform word represents the same
     * graph). Graphs beyond max_word_search_vertices
     * or k beyond max_word_search_uniformity report BudgetExceeded without
     * searching. Throws WordError if k < 1.
     */
    auto search_uniform_word(const Graph & g, int k) -> WordSearchResult;

    /// Parses 1-based letters, "14213243" or "1,4,2,1,3,2,4,3", into a
    /// 0-based word. Throws WordError on anything else.
    auto parse_word(std::string_view) -> Word;

    /// Inverse of parse_word; uses commas only if some label exceeds 9.
    auto format_word(const Word &) -> std::string;
}

#endif
