/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/board.hh>
#include <wordrep/catalog.hh>
#include <wordrep/colouring.hh>
#include <wordrep/io.hh>
#include <wordrep/semitrans.hh>
#include <wordrep/verify.hh>
#include <wordrep/word.hh>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace wordrep;

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        exit_pass = 0,
        exit_violation = 1,
        exit_usage = 2,
        exit_inconclusive = 3
    };

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct Shared
    {
        string format;
        string policy = "extended";
        int jobs = 0;
        optional<int> budget_edges;
    };

    auto add_shared(CLI::App * cmd, Shared & shared, const vector<string> & formats) -> void
    {
        cmd->add_option("--format", shared.format, "Output format")->check(CLI::IsMember(formats));
        cmd->add_option("--policy", shared.policy, "Closure policy for the forbidden set")
            ->check(CLI::IsMember({ "literal", "extended" }));
        cmd->add_option("--jobs", shared.jobs, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);
        cmd->add_option("--budget-edges", shared.budget_edges, "Edge cap for the orientation search")->check(CLI::PositiveNumber);
    }

    auto format_or(const Shared & shared, const string & fallback) -> string
    {
        return shared.format.empty() ? fallback : shared.format;
    }

    auto policy_of(const Shared & shared) -> ClosurePolicy
    {
        return shared.policy == "literal" ? ClosurePolicy::Literal : ClosurePolicy::Extended;
    }

    auto budget_of(const Shared & shared) -> SearchBudget
    {
        SearchBudget budget;
        if (shared.budget_edges)
            budget.max_edges = *shared.budget_edges;
        else if (auto env = std::getenv("WORDREP_BUDGET_EDGES")) {
            try {
                std::size_t used = 0;
                int value = std::stoi(env, &used);
                if (used != string(env).size() || value <= 0)
                    throw std::invalid_argument(env);
                budget.max_edges = value;
            }
            catch (const std::logic_error &) {
                throw UsageError(string("WORDREP_BUDGET_EDGES must be a positive integer, got '") + env + "'");
            }
        }
        return budget;
    }

    auto jobs_of(const Shared & shared) -> int
    {
        if (shared.jobs > 0)
            return shared.jobs;
        return std::max(1u, std::thread::hardware_concurrency());
    }

    auto verify_options(const Shared & shared) -> VerifyOptions
    {
        VerifyOptions options;
        options.budget = budget_of(shared);
        options.jobs = jobs_of(shared);
        options.policy = policy_of(shared);
        return options;
    }

    /// Text form of a graph, 1-based like word letters.
    auto graph_text(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "n=" << g.size() << " edges:";
        for (auto [u, v] : g.edges())
            out << ' ' << u + 1 << '-' << v + 1;
        return out.str();
    }

    auto graph_dot(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "graph G {\n";
        for (int v = 0 ; v < g.size() ; ++v)
            out << "  " << v << " [label=\"" << v + 1 << "\"];\n";
        for (auto [u, v] : g.edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }

    auto print_graph(const Graph & g, const string & format) -> void
    {
        if (format == "json")
            cout << graph_to_json(g).dump() << '\n';
        else if (format == "dot")
            cout << graph_dot(g);
        else
            cout << graph_text(g) << '\n';
    }

    auto parse_shape(const string & text) -> std::pair<int, int>
    {
        int rows = 0, cols = 0;
        char x = 0, extra = 0;
        std::istringstream in(text);
        if (! (in >> rows >> x >> cols) || (x != 'x' && x != 'X') || (in >> extra) || rows < 1 || cols < 1)
            throw UsageError("shape must look like RxC with R, C >= 1, got '" + text + "'");
        return { rows, cols };
    }

    auto status_exit(SweepStatus status) -> int
    {
        switch (status) {
            case SweepStatus::Pass:         return exit_pass;
            case SweepStatus::Violation:    return exit_violation;
            case SweepStatus::Inconclusive: return exit_inconclusive;
        }
        return exit_violation;
    }

    auto classification_text(const Classification & c) -> string
    {
        std::ostringstream out;
        out << c.board << " | " << c.triangulation << " | 3-colourable: " << (c.three_colourable ? "yes" : "no")
            << " | word-representable: " << to_string(c.word_representable)
            << " | forbidden: " << c.forbidden_hit.value_or("none");
        return out.str();
    }

    auto print_report(const SweepReport & report, const string & format) -> void
    {
        if (format == "json") {
            for (auto & c : report.classifications)
                cout << classification_to_json(c).dump() << '\n';
            cout << summary_to_json(report).dump() << '\n';
        }
        else {
            for (auto & c : report.classifications)
                cout << classification_text(c) << '\n';
            for (auto & v : report.violations)
                cout << "violation: " << v.board << " | " << v.triangulation << " | " << v.claim << " | " << v.detail << '\n';
            cout << "status: " << to_string(report.status()) << ", boards: " << report.boards
                << ", triangulations: " << report.triangulations << ", violations: " << report.violations.size()
                << ", budget exceeded: " << report.budget_exceeded << '\n';
        }
    }

    template <typename F_>
    auto timed(const char * what, F_ && f)
    {
        auto start = std::chrono::steady_clock::now();
        auto result = f();
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        cerr << what << ": " << elapsed.count() << " s\n";
        return result;
    }

    auto parse_modes(const vector<int> & modes) -> vector<int>
    {
        for (int m : modes)
            if (m != 0 && m != 1)
                throw UsageError("--domino-modes takes 0 and/or 1, got " + std::to_string(m));
        return modes;
    }

    /// Classifications only; several dominoes are outside the theorem.
    auto explore(const Board & b, const Verifier & verifier) -> SweepReport
    {
        if (b.choice_count() > max_enumerated_choices)
            throw UsageError(format_board(b) + " has too many choices to enumerate");
        SweepReport report;
        report.boards = 1;
        for_each_triangulation(b, [&] (const Triangulation & t) {
                auto c = verifier.classify(b, t);
                ++report.triangulations;
                report.three_colourable += c.three_colourable;
                report.budget_exceeded += c.word_representable == Verdict::BudgetExceeded;
                report.classifications.push_back(std::move(c));
                });
        return report;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Word-representability of small graphs and triangulated grid boards" };
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Shared shared;

    auto check_word = app.add_subcommand("check-word", "Graph represented by a word, or whether a word represents a graph");
    string word_text, check_graph_file;
    bool emit_graph = false;
    check_word->add_option("--word", word_text, "Word over 1-based letters, e.g. 14213243 or 1,4,2,1")->required();
    auto check_graph_opt = check_word->add_option("--graph", check_graph_file, "Graph JSON file to test against");
    auto emit_graph_opt = check_word->add_flag("--emit-graph", emit_graph, "Print the graph the word represents");
    check_graph_opt->excludes(emit_graph_opt);
    add_shared(check_word, shared, { "json", "dot", "text" });

    auto decide = app.add_subcommand("decide", "Decide word-representability of a graph");
    string decide_graph_file;
    bool emit_certificate = false;
    decide->add_option("--graph", decide_graph_file, "Graph JSON file")->required();
    decide->add_flag("--emit-certificate", emit_certificate, "Also print the semi-transitive orientation");
    add_shared(decide, shared, { "json", "text" });

    auto colour = app.add_subcommand("colour", "Chromatic number, or a k-colouring");
    string colour_graph_file;
    optional<int> colour_k;
    colour->add_option("--graph", colour_graph_file, "Graph JSON file")->required();
    colour->add_option("--k", colour_k, "Find a colouring with at most k colours")->check(CLI::PositiveNumber);
    add_shared(colour, shared, { "json", "text" });

    auto enumerate = app.add_subcommand("enumerate", "List the triangulations of a board");
    string enumerate_board;
    optional<std::uint64_t> enumerate_limit;
    enumerate->add_option("--board", enumerate_board, "Board spec, e.g. \"cells 2x2; domino H 0 0\"")->required();
    enumerate->add_option("--limit", enumerate_limit, "Stop after this many triangulations");
    add_shared(enumerate, shared, { "json", "dot", "text" });

    auto catalog = app.add_subcommand("catalog", "Dump the forbidden set");
    string catalog_emit = "json";
    catalog->add_option("--emit", catalog_emit, "Output format")->check(CLI::IsMember({ "json", "dot" }));
    add_shared(catalog, shared, { "json", "dot" });

    auto verify = app.add_subcommand("verify", "Check the theorem on one board or one board shape");
    string verify_board, verify_shape;
    bool verify_catalog_flag = false;
    vector<int> verify_modes{ 0, 1 };
    auto board_opt = verify->add_option("--board", verify_board, "Board spec");
    auto shape_opt = verify->add_option("--sweep", verify_shape, "Board shape RxC; plain board and every horizontal domino");
    auto catalog_opt = verify->add_flag("--catalog", verify_catalog_flag, "Check the built-in patterns instead");
    verify->add_option("--domino-modes", verify_modes, "0 = no domino, 1 = one horizontal domino")->delimiter(',');
    board_opt->excludes(shape_opt)->excludes(catalog_opt);
    shape_opt->excludes(catalog_opt);
    add_shared(verify, shared, { "json", "text" });

    auto sweep = app.add_subcommand("sweep", "Check the theorem on every board shape up to RxC");
    string sweep_shape;
    vector<int> sweep_modes{ 0, 1 };
    sweep->add_option("shape", sweep_shape, "Largest board shape RxC")->required();
    sweep->add_option("--domino-modes", sweep_modes, "0 = no domino, 1 = one horizontal domino")->delimiter(',');
    add_shared(sweep, shared, { "json", "text" });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*check_word) {
            auto word = parse_word(word_text);
            int n = 0;
            for (int letter : word)
                n = std::max(n, letter + 1);
            if (check_graph_opt->count()) {
                auto g = read_graph_file(check_graph_file);
                bool ok = represents(word, g);
                if (format_or(shared, "text") == "json")
                    cout << Json{ { "represents", ok } }.dump() << '\n';
                else
                    cout << "represents: " << (ok ? "true" : "false") << '\n';
            }
            else if (emit_graph)
                print_graph(graph_of_word(word, n), format_or(shared, "json"));
            else
                throw UsageError("check-word needs --graph FILE or --emit-graph");
            return exit_pass;
        }

        if (*decide) {
            auto g = read_graph_file(decide_graph_file);
            auto d = decide_word_representable(g, budget_of(shared));
            string verdict = d.verdict == Verdict::BudgetExceeded ? "inconclusive" : to_string(d.verdict);
            if (format_or(shared, "text") == "json") {
                Json doc{ { "verdict", verdict } };
                if (emit_certificate)
                    doc["certificate"] = d.certificate ? orientation_to_json(*d.certificate) : Json(nullptr);
                cout << doc.dump() << '\n';
            }
            else {
                cout << verdict << '\n';
                if (emit_certificate && d.certificate)
                    cout << orientation_to_json(*d.certificate).dump() << '\n';
            }
            return d.verdict == Verdict::BudgetExceeded ? exit_inconclusive : exit_pass;
        }

        if (*colour) {
            auto g = read_graph_file(colour_graph_file);
            optional<Colouring> c;
            Json doc;
            if (colour_k) {
                c = find_colouring(g, *colour_k);
                doc["k"] = *colour_k;
            }
            else {
                int chi = chromatic_number(g);
                c = find_colouring(g, chi);
                doc["chromatic_number"] = chi;
            }
            doc["colouring"] = c ? Json(c->colours) : Json(nullptr);
            if (format_or(shared, "text") == "json")
                cout << doc.dump() << '\n';
            else {
                if (! colour_k)
                    cout << "chromatic number: " << doc["chromatic_number"].get<int>() << '\n';
                if (c) {
                    cout << "colouring:";
                    for (int v = 0 ; v < g.size() ; ++v)
                        cout << ' ' << v + 1 << '=' << c->colours[v];
                    cout << '\n';
                }
                else
                    cout << "not " << *colour_k << "-colourable\n";
            }
            return exit_pass;
        }

        if (*enumerate) {
            auto b = parse_board(enumerate_board, BoardMode::Exploratory);
            if (b.choice_count() > max_enumerated_choices)
                throw UsageError(format_board(b) + " has too many choices to enumerate");
            auto format = format_or(shared, "text");
            auto count = triangulation_count(b);
            if (enumerate_limit)
                count = std::min(count, *enumerate_limit);
            for (std::uint64_t i = 0 ; i < count ; ++i) {
                auto t = triangulation_at(b, i);
                auto literal = format_triangulation(t);
                if (format == "json") {
                    Json doc{ { "index", i }, { "triangulation", literal } };
                    doc["graph"] = embedded_to_json(triangulate(b, t));
                    cout << doc.dump() << '\n';
                }
                else if (format == "dot")
                    cout << embedded_to_dot(literal, triangulate(b, t));
                else
                    cout << literal << '\n';
            }
            return exit_pass;
        }

        if (*catalog) {
            auto set = forbidden_set(policy_of(shared));
            auto format = shared.format.empty() ? catalog_emit : shared.format;
            if (format == "json")
                cout << forbidden_set_to_json(set).dump() << '\n';
            else
                for (auto & m : set.members)
                    for (unsigned i = 0 ; i < m.images.size() ; ++i)
                        cout << embedded_to_dot(m.image_names[i], m.images[i]);
            return exit_pass;
        }

        if (*verify) {
            auto format = format_or(shared, "json");
            SweepReport report;
            if (verify_catalog_flag)
                report = timed("verify", [&] { return verify_catalog(budget_of(shared)); });
            else if (board_opt->count()) {
                auto b = parse_board(verify_board, BoardMode::Exploratory);
                Verifier verifier(verify_options(shared));
                if (b.dominoes().size() > 1) {
                    cerr << "note: several dominoes are outside the theorem; classifications only, no claims checked\n";
                    report = timed("verify", [&] { return explore(b, verifier); });
                    print_report(report, format);
                    return report.budget_exceeded ? exit_inconclusive : exit_pass;
                }
                report = timed("verify", [&] {
                        auto r = verifier.verify_theorem(b);
                        if (b.dominoes().size() == 1)
                            r.merge(verifier.verify_domino_flip(b));
                        return r;
                        });
            }
            else if (shape_opt->count()) {
                auto [rows, cols] = parse_shape(verify_shape);
                auto modes = parse_modes(verify_modes);
                Verifier verifier(verify_options(shared));
                report = timed("verify", [&] { return verifier.sweep(rows, cols, modes); });
            }
            else
                throw UsageError("verify needs --board SPEC, --sweep RxC or --catalog");
            print_report(report, format);
            return status_exit(report.status());
        }

        if (*sweep) {
            auto [rows, cols] = parse_shape(sweep_shape);
            auto modes = parse_modes(sweep_modes);
            Verifier verifier(verify_options(shared));
            auto report = timed("sweep", [&] { return verifier.sweep_up_to(rows, cols, modes); });
            print_report(report, format_or(shared, "json"));
            return status_exit(report.status());
        }
    }
    catch (const UsageError & e) {
        cerr << "wordrep: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        // WordError, BoardError, FormatError
        cerr << "wordrep: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const GraphError & e) {
        cerr << "wordrep: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception & e) {
        cerr << "wordrep: internal error: " << e.what() << '\n';
        return exit_violation;
    }

    return exit_usage;
}
