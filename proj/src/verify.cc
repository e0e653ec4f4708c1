/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/verify.hh>

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

using std::function;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace wordrep
{
    using std::to_string;

    namespace
    {
        auto parallel_for(uint64_t count, int jobs, const function<void (uint64_t)> & body) -> void
        {
            if (jobs <= 1 || count < 2) {
                for (uint64_t i = 0 ; i < count ; ++i)
                    body(i);
                return;
            }

            std::atomic<uint64_t> next{ 0 };
            std::exception_ptr failure;
            std::mutex failure_mutex;
            {
                vector<std::jthread> workers;
                for (int j = 0 ; j < jobs ; ++j)
                    workers.emplace_back([&] {
                        for (uint64_t i ; (i = next++) < count ; ) {
                            try {
                                body(i);
                            }
                            catch (...) {
                                std::lock_guard lock(failure_mutex);
                                if (! failure)
                                    failure = std::current_exception();
                                next = count;
                            }
                        }
                    });
            }
            if (failure)
                std::rethrow_exception(failure);
        }

        auto hit_consistent(const Classification & c) -> bool
        {
            return c.three_colourable != c.forbidden_hit.has_value();
        }
    }

    auto certificates_valid(const Graph & g, const Classification & c) -> bool
    {
        if (c.three_colourable) {
            if (! c.colouring || ! is_proper(g, *c.colouring) || colour_count(*c.colouring) > 3)
                return false;
        }
        if (c.word_representable == Verdict::Yes) {
            if (! c.orientation || ! (c.orientation->graph() == g) || ! c.orientation->is_total())
                return false;
            if (! is_semi_transitive(*c.orientation))
                return false;
        }
        return true;
    }

    auto classify(const EmbeddedGraph & e, const ForbiddenSet & s, const SearchBudget & budget) -> Classification
    {
        Classification c;
        auto decision = decide_word_representable(e.graph, budget);
        c.word_representable = decision.verdict;
        c.orientation = std::move(decision.certificate);
        c.colouring = std::move(decision.colouring);
        c.three_colourable = c.colouring.has_value();

        if (auto hit = find_forbidden(e, s)) {
            c.forbidden_hit = hit->pattern;
            c.embedded_hit = hit->embedded;
        }
        return c;
    }

    auto to_string(SweepStatus s) -> const char *
    {
        switch (s) {
            case SweepStatus::Pass:         return "pass";
            case SweepStatus::Violation:    return "violation";
            case SweepStatus::Inconclusive: return "inconclusive";
        }
        return "?";
    }

    auto SweepReport::violations_of(std::string_view claim) const -> std::size_t
    {
        return std::count_if(violations.begin(), violations.end(), [&] (const Violation & v) { return v.claim == claim; });
    }

    auto SweepReport::status() const -> SweepStatus
    {
        if (! violations.empty())
            return SweepStatus::Violation;
        if (budget_exceeded > 0)
            return SweepStatus::Inconclusive;
        return SweepStatus::Pass;
    }

    auto SweepReport::merge(SweepReport && other) -> void
    {
        boards += other.boards;
        triangulations += other.triangulations;
        budget_exceeded += other.budget_exceeded;
        three_colourable += other.three_colourable;
        flip_checks += other.flip_checks;
        embedded_hits += other.embedded_hits;
        general_only_hits += other.general_only_hits;
        literal_discrepancies += other.literal_discrepancies;
        literal_checked += other.literal_checked;
        std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
        std::move(other.classifications.begin(), other.classifications.end(), std::back_inserter(classifications));
    }

    auto symmetry_key(const EmbeddedGraph & e) -> string
    {
        string best;
        for (auto s : all_symmetries) {
            auto image = transform(e, s);
            string key;
            for (auto p : image.coords)
                key += to_string(p.row) + "." + to_string(p.col) + " ";
            key += "|";
            for (auto [u, v] : image.graph.edges())
                key += " " + to_string(u) + "-" + to_string(v);
            if (best.empty() || key < best)
                best = std::move(key);
        }
        return best;
    }

    Verifier::Verifier(VerifyOptions options) :
        _options(options),
        _forbidden(forbidden_set(options.policy))
    {
        if (_options.compare_literal)
            _literal = forbidden_set(ClosurePolicy::Literal);
    }

    auto Verifier::cache_size() const -> std::size_t
    {
        std::lock_guard lock(_cache_mutex);
        return _cache.size();
    }

    auto Verifier::classify_one(const Board & b, const Triangulation & t, const EmbeddedGraph & e) const -> Classification
    {
        Classification c;
        c.board = format_board(b);
        c.triangulation = format_triangulation(t);

        if (auto colouring = find_colouring(e.graph, 3)) {
            auto certificate = orientation_from_colouring(e.graph, *colouring);
            c.three_colourable = true;
            c.word_representable = is_semi_transitive(certificate) ? Verdict::Yes : Verdict::BudgetExceeded;
            c.colouring = std::move(colouring);
            c.orientation = std::move(certificate);
        }
        else {
            auto key = symmetry_key(e);
            optional<Verdict> cached;
            {
                std::lock_guard lock(_cache_mutex);
                if (auto i = _cache.find(key) ; i != _cache.end())
                    cached = i->second;
            }

            if (cached)
                c.word_representable = *cached;
            else {
                auto result = exists_semi_transitive(e.graph, _options.budget);
                switch (result.outcome) {
                    case SearchOutcome::Found:
                        c.word_representable = Verdict::Yes;
                        c.orientation = std::move(result.orientation);
                        break;
                    case SearchOutcome::Absent:
                        c.word_representable = Verdict::No;
                        {
                            std::lock_guard lock(_cache_mutex);
                            _cache.emplace(key, Verdict::No);
                        }
                        break;
                    case SearchOutcome::BudgetExceeded:
                        c.word_representable = Verdict::BudgetExceeded;
                        break;
                }
            }
        }

        if (auto hit = find_forbidden(e, _forbidden)) {
            c.forbidden_hit = hit->pattern;
            c.embedded_hit = hit->embedded;
        }
        return c;
    }

    auto Verifier::classify(const Board & b, const Triangulation & t) const -> Classification
    {
        return classify_one(b, t, triangulate(b, t));
    }

    namespace
    {
        // smallest odd wheel W5..W11 contained as an induced subgraph
        auto odd_wheel_note(const Graph & g) -> string
        {
            for (int m = 5 ; m + 1 <= max_pattern_vertices && m + 1 <= g.size() ; m += 2)
                if (contains_induced(g, wheel_graph(m)))
                    return ", contains induced W" + to_string(m);
            return "";
        }
    }

    auto Verifier::verify_theorem(const Board & b) const -> SweepReport
    {
        if (b.dominoes().size() > 1)
            throw BoardError(format_board(b) + ": theorem checks allow at most one domino");
        if (b.choice_count() > max_enumerated_choices)
            throw BoardError(format_board(b) + " has " + to_string(b.choice_count()) + " choices, enumeration limit is "
                    + to_string(max_enumerated_choices));

        uint64_t count = triangulation_count(b);
        vector<Classification> results(count);
        vector<char> literal_hits(count, 0);
        parallel_for(count, _options.jobs, [&] (uint64_t i) {
                auto t = triangulation_at(b, i);
                auto e = triangulate(b, t);
                results[i] = classify_one(b, t, e);
                if (! certificates_valid(e.graph, results[i]))
                    results[i].colouring.reset(), results[i].orientation.reset(), results[i].word_representable = Verdict::BudgetExceeded;
                if (_literal)
                    literal_hits[i] = find_forbidden(e, *_literal).has_value();
                });

        SweepReport report;
        report.boards = 1;
        report.triangulations = count;
        for (uint64_t i = 0 ; i < count ; ++i) {
            auto & c = results[i];
            auto violation = [&] (string claim, string detail) {
                report.violations.push_back(Violation{ c.board, c.triangulation, std::move(claim), std::move(detail) });
            };

            if (c.three_colourable)
                ++report.three_colourable;

            if (c.word_representable == Verdict::BudgetExceeded)
                ++report.budget_exceeded;
            else if (c.three_colourable != (c.word_representable == Verdict::Yes))
                violation(equivalence_claim,
                        string("3-colourable: ") + (c.three_colourable ? "yes" : "no") + ", word-representable: " + to_string(c.word_representable)
                        + (c.orientation ? ", orientation certificate attached" : ""));

            if (! hit_consistent(c))
                violation(forbidden_subgraph_claim,
                        string("3-colourable: ") + (c.three_colourable ? "yes" : "no") + ", forbidden hit: " + c.forbidden_hit.value_or("none")
                        + odd_wheel_note(triangulate(b, parse_triangulation(b, c.triangulation)).graph));

            if (c.forbidden_hit)
                ++(c.embedded_hit ? report.embedded_hits : report.general_only_hits);

            if (_literal) {
                ++report.literal_checked;
                if (bool(literal_hits[i]) == c.three_colourable)
                    ++report.literal_discrepancies;
            }
        }

        if (_options.keep_classifications)
            report.classifications = std::move(results);
        return report;
    }

    auto Verifier::verify_domino_flip(const Board & b) const -> SweepReport
    {
        if (b.dominoes().size() != 1)
            throw BoardError(format_board(b) + ": flip check needs exactly one domino");

        uint64_t count = triangulation_count(b);
        vector<char> colourable(count), flipped(count);
        parallel_for(count, _options.jobs, [&] (uint64_t i) {
                auto t = triangulation_at(b, i);
                colourable[i] = is_k_colourable(triangulate(b, t).graph, 3);
                flipped[i] = is_k_colourable(triangulate(b, flip_domino_pattern(t, 0)).graph, 3);
                });

        SweepReport report;
        for (uint64_t i = 0 ; i < count ; ++i) {
            ++report.flip_checks;
            if (colourable[i] != flipped[i]) {
                auto t = triangulation_at(b, i);
                report.violations.push_back(Violation{ format_board(b), format_triangulation(t),
                        flip_claim,
                        "flipped to " + format_triangulation(flip_domino_pattern(t, 0)) + ": 3-colourable "
                        + (colourable[i] ? "yes" : "no") + " -> " + (flipped[i] ? "yes" : "no") });
            }
        }
        return report;
    }

    auto Verifier::sweep(int cell_rows, int cell_cols, const vector<int> & domino_modes) const -> SweepReport
    {
        for (int mode : domino_modes)
            if (mode != 0 && mode != 1)
                throw BoardError("domino mode must be 0 or 1, got " + to_string(mode));

        SweepReport report;
        if (std::find(domino_modes.begin(), domino_modes.end(), 0) != domino_modes.end())
            report.merge(verify_theorem(Board(cell_rows, cell_cols)));
        if (std::find(domino_modes.begin(), domino_modes.end(), 1) != domino_modes.end())
            for (auto & d : domino_placements(cell_rows, cell_cols, Axis::Horizontal)) {
                Board b(cell_rows, cell_cols, { d });
                report.merge(verify_theorem(b));
                report.merge(verify_domino_flip(b));
            }
        return report;
    }

    auto Verifier::sweep_up_to(int cell_rows, int cell_cols, const vector<int> & domino_modes) const -> SweepReport
    {
        SweepReport report;
        for (int r = 1 ; r <= cell_rows ; ++r)
            for (int c = 1 ; c <= cell_cols ; ++c)
                report.merge(sweep(r, c, domino_modes));
        return report;
    }

    auto stated_wheel(const string & pattern) -> int
    {
        if (pattern == "A1")
            return 9;
        if (pattern == "A2" || pattern == "A3" || pattern == "A6" || pattern == "A7" || pattern == "T2")
            return 7;
        return 5;
    }

    auto verify_catalog(const SearchBudget & budget) -> SweepReport
    {
        SweepReport report;
        auto fail = [&] (const string & name, string claim, string detail) {
            report.violations.push_back(Violation{ "catalog", name, std::move(claim), std::move(detail) });
        };
        auto check_non_representable = [&] (const string & name, const Graph & g) {
            auto d = decide_word_representable(g, budget);
            Classification c;
            c.board = "catalog";
            c.triangulation = name;
            c.three_colourable = d.colouring.has_value();
            c.colouring = d.colouring;
            c.word_representable = d.verdict;
            c.orientation = d.certificate;
            if (d.verdict == Verdict::BudgetExceeded)
                ++report.budget_exceeded;
            else if (d.verdict == Verdict::Yes)
                fail(name, "not word-representable", "orientation search found a semi-transitive orientation");
            ++report.triangulations;
            report.classifications.push_back(std::move(c));
        };

        for (auto & p : minimal_graphs()) {
            auto & g = p.embedded.graph;
            if (is_k_colourable(g, 3))
                fail(p.name, "not 3-colourable", "found a 3-colouring");
            check_non_representable(p.name, g);

            int m = stated_wheel(p.name);
            if (! contains_induced(g, wheel_graph(m)))
                fail(p.name, "contains W" + to_string(m), "no induced copy found");

            if (p.name == "A1") {
                auto leftmost = std::find(p.embedded.coords.begin(), p.embedded.coords.end(), GridPoint{ 1, 0 });
                VertexSet keep = g.vertices() & ~singleton(int(leftmost - p.embedded.coords.begin()));
                if (leftmost == p.embedded.coords.end() || ! are_isomorphic(induced(g, keep), wheel_graph(9)))
                    fail(p.name, "removing the leftmost middle-row vertex leaves W9", "remaining graph is not W9");
            }
        }

        for (int m : { 5, 7, 9 })
            check_non_representable("W" + to_string(m), wheel_graph(m));
        if (chromatic_number(wheel_graph(5)) != 4)
            fail("W5", "chromatic number 4", "got " + to_string(chromatic_number(wheel_graph(5))));

        return report;
    }
}
