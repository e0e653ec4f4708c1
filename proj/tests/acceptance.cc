/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// One line per acceptance criterion. Exits non-zero if any criterion fails.

#include <wordrep/board.hh>
#include <wordrep/catalog.hh>
#include <wordrep/colouring.hh>
#include <wordrep/induced.hh>
#include <wordrep/semitrans.hh>
#include <wordrep/verify.hh>
#include <wordrep/word.hh>

#include "oracles.hh"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

using namespace wordrep;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    int failures = 0;

    auto criterion(int number, const std::string & title, double limit_seconds, const std::function<Outcome ()> & check) -> void
    {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        }
        catch (const std::exception & e) {
            o = { false, std::string("exception: ") + e.what() };
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = elapsed <= limit_seconds;
        bool pass = o.pass && in_time;
        failures += ! pass;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << elapsed << " s, limit " << limit_seconds << " s";
        std::cout << "ACCEPTANCE " << number << " " << (pass ? "PASS" : "FAIL") << ": " << title << " | " << o.detail
            << " | " << time.str() << (in_time ? "" : " (too slow)") << std::endl;
    }

    auto pattern(const std::string & name) -> const PatternGraph &
    {
        for (auto & p : minimal_graphs())
            if (p.name == name)
                return p;
        throw std::logic_error("no pattern " + name);
    }

    auto jobs() -> int
    {
        return std::max(4u, std::thread::hardware_concurrency());
    }

    auto count_text(std::uint64_t n, const char * what) -> std::string
    {
        return std::to_string(n) + " " + what;
    }

    // the sweeps of criteria 5 to 8 share reports
    SweepReport zero_domino, single_domino;
}

auto main() -> int
{
    std::mt19937 rng(20261017);

    criterion(1, "word 14213243 gives C4 and represents the C4 fixture", 0.001, [] {
            auto w = parse_word("14213243");
            auto g = graph_of_word(w, 4);
            Graph clockwise(4, { Edge{ 0, 1 }, Edge{ 1, 2 }, Edge{ 2, 3 }, Edge{ 0, 3 } });
            bool ok = g == clockwise && represents(w, clockwise);
            return Outcome{ ok, "edges " + to_string(g) + ", represents " + (represents(w, clockwise) ? "true" : "false") };
            });

    criterion(2, "T1 and T2 are not 3-colourable and not word-representable", 2.0, [] {
            bool ok = true;
            std::string detail;
            for (auto name : { "T1", "T2" }) {
                auto & g = pattern(name).embedded.graph;
                auto start = std::chrono::steady_clock::now();
                auto d = decide_word_representable(g);
                double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                bool three = is_k_colourable(g, 3);
                ok = ok && ! three && d.verdict == Verdict::No && t < 1.0;
                detail += std::string(name) + ": 3-colourable " + (three ? "yes" : "no") + ", representable " + to_string(d.verdict)
                    + " (" + std::to_string(d.nodes) + " nodes) ";
            }
            return Outcome{ ok, detail + "each < 1 s" };
            });

    criterion(3, "A1-A8, B1, B2 not 3-colourable, not word-representable, contain the stated wheels", 30.0, [] {
            bool ok = true;
            std::string detail;
            for (auto & p : minimal_graphs()) {
                if (p.name[0] == 'T')
                    continue;
                auto & g = p.embedded.graph;
                int wheel = p.name == "A1" ? 9 : (p.name == "A2" || p.name == "A3" || p.name == "A6" || p.name == "A7") ? 7 : 5;
                bool good = ! is_k_colourable(g, 3) && decide_word_representable(g).verdict == Verdict::No
                    && contains_induced(g, wheel_graph(wheel));
                ok = ok && good;
                detail += p.name + "~W" + std::to_string(wheel) + (good ? "" : "(bad)") + " ";
            }
            auto drop = std::find(pattern("A1").embedded.coords.begin(), pattern("A1").embedded.coords.end(), GridPoint{ 1, 0 })
                - pattern("A1").embedded.coords.begin();
            std::vector<int> keep;
            for (int v = 0 ; v < 11 ; ++v)
                if (v != drop)
                    keep.push_back(v);
            bool a1 = are_isomorphic(induced(pattern("A1").embedded.graph, keep), wheel_graph(9));
            ok = ok && a1;
            return Outcome{ ok, detail + "| A1 minus (1,0) = W9: " + (a1 ? "yes" : "no") };
            });

    criterion(4, "W5, W7, W9 not word-representable, chromatic number of W5 is 4", 10.0, [] {
            bool ok = true;
            std::string detail;
            for (int m : { 5, 7, 9 }) {
                auto d = decide_word_representable(wheel_graph(m));
                ok = ok && d.verdict == Verdict::No;
                detail += "W" + std::to_string(m) + " " + to_string(d.verdict) + ", ";
            }
            int chi = chromatic_number(wheel_graph(5));
            ok = ok && chi == 4;
            return Outcome{ ok, detail + "chi(W5) = " + std::to_string(chi) };
            });

    criterion(5, "zero-domino boards up to 3x3: 3-colourable iff word-representable", 120.0, [] {
            VerifyOptions o;
            o.jobs = jobs();
            o.keep_classifications = false;
            zero_domino = Verifier(o).sweep_up_to(3, 3, { 0 });
            auto bad = zero_domino.violations_of(equivalence_claim);
            bool ok = bad == 0 && zero_domino.budget_exceeded == 0 && zero_domino.triangulations == 2 + 2 * 4 + 2 * 8 + 16 + 2 * 64 + 512;
            return Outcome{ ok, count_text(zero_domino.boards, "boards, ") + count_text(zero_domino.triangulations, "triangulations, ")
                + count_text(bad, "violations, ") + count_text(zero_domino.budget_exceeded, "budget exceeded") };
            });

    criterion(6, "single horizontal domino boards up to 3x3: 3-colourable iff word-representable", 600.0, [] {
            VerifyOptions o;
            o.jobs = jobs();
            o.keep_classifications = false;
            single_domino = Verifier(o).sweep_up_to(3, 3, { 1 });
            auto bad = single_domino.violations_of(equivalence_claim);
            bool ok = bad == 0 && single_domino.budget_exceeded == 0;
            return Outcome{ ok, count_text(single_domino.boards, "boards, ") + count_text(single_domino.triangulations, "triangulations, ")
                + count_text(bad, "violations, ") + count_text(single_domino.budget_exceeded, "budget exceeded") + ", jobs "
                + std::to_string(jobs()) };
            });

    criterion(7, "not 3-colourable iff a forbidden induced subgraph, extended closure, same sweeps", 60.0, [] {
            auto bad = zero_domino.violations_of(forbidden_subgraph_claim) + single_domino.violations_of(forbidden_subgraph_claim);
            auto total = zero_domino.triangulations + single_domino.triangulations;
            auto non_colourable = total - zero_domino.three_colourable - single_domino.three_colourable;

            auto literal = forbidden_set(ClosurePolicy::Literal);
            auto extended = forbidden_set(ClosurePolicy::Extended);
            int extra = 0;
            for (auto & m : extended.members) {
                bool known = false;
                for (auto & n : literal.members)
                    known = known || are_isomorphic(m.graph, n.graph);
                extra += ! known;
            }

            std::string example;
            for (auto * r : { &zero_domino, &single_domino })
                for (auto & v : r->violations)
                    if (example.empty() && v.claim == forbidden_subgraph_claim)
                        example = "first: " + v.board + " " + v.triangulation + " (" + v.detail + ")";

            std::ostringstream detail;
            detail << bad << " of " << non_colourable << " non-3-colourable triangulations have no forbidden hit"
                << ", literal closure " << literal.members.size() << " classes / " << literal.image_count() << " drawings"
                << ", extended " << extended.members.size() << " classes / " << extended.image_count() << " drawings"
                << ", extended adds " << extra << " classes"
                << ", literal closure disagrees with non-3-colourability on " << zero_domino.literal_discrepancies + single_domino.literal_discrepancies
                << (example.empty() ? "" : ", " + example);
            return Outcome{ bad == 0, detail.str() };
            });

    criterion(8, "flipping the single domino preserves 3-colourability", 1.0, [] {
            auto bad = single_domino.violations_of(flip_claim);
            bool ok = bad == 0 && single_domino.flip_checks == single_domino.triangulations && single_domino.flip_checks > 0;
            return Outcome{ ok, count_text(single_domino.flip_checks, "flip checks, ") + count_text(bad, "violations") };
            });

    criterion(9, "orientations from 1000 random 3-colourings are semi-transitive", 60.0, [&] {
            int good = 0, largest = 0;
            for (int i = 0 ; i < 1000 ; ++i) {
                int n = 3 + i % 10;
                auto g = oracle::random_three_colourable(n, 0.3 + 0.5 * (i % 7) / 6.0, rng);
                auto c = find_colouring(g, 3);
                if (! c)
                    continue;
                auto o = orientation_from_colouring(g, *c);
                good += is_semi_transitive(o) && ! oracle::has_shortcut(oracle::arcs(o)) && oracle::is_acyclic(oracle::arcs(o));
                largest = std::max(largest, g.size());
            }
            return Outcome{ good == 1000, std::to_string(good) + " / 1000 pass, n <= " + std::to_string(largest) };
            });

    criterion(10, "graphs on at most 5 vertices: decision and uniform words agree; W5 negative", 300.0, [] {
            int graphs = 0, agree = 0;
            int max_k = 0;
            for (int n = 1 ; n <= 5 ; ++n)
                for (auto & g : oracle::non_isomorphic_graphs(n)) {
                    ++graphs;
                    auto d = decide_word_representable(g);
                    bool decided = d.verdict == Verdict::Yes && d.certificate && is_semi_transitive(*d.certificate)
                        && ! oracle::has_shortcut(oracle::arcs(*d.certificate));
                    bool witnessed = false;
                    for (int k = 1 ; k <= 3 && ! witnessed ; ++k) {
                        auto r = search_uniform_word(g, k);
                        if (r.outcome == WordSearchOutcome::Found && r.word && oracle::graph_of_word(*r.word, n) == oracle::adjacency(g)) {
                            witnessed = true;
                            max_k = std::max(max_k, k);
                        }
                    }
                    agree += decided && witnessed;
                }
            auto w5 = decide_word_representable(wheel_graph(5));
            bool w5_absent = w5.verdict == Verdict::No;
            for (int k = 1 ; k <= 3 ; ++k)
                w5_absent = w5_absent && search_uniform_word(wheel_graph(5), k).outcome == WordSearchOutcome::Absent;
            bool ok = graphs == 1 + 2 + 4 + 11 + 34 && agree == graphs && w5_absent;
            return Outcome{ ok, std::to_string(agree) + " / " + std::to_string(graphs) + " graphs agree, largest k needed "
                + std::to_string(max_k) + ", W5 negative in both: " + (w5_absent ? "yes" : "no") };
            });

    criterion(11, "triangulation and placement counts on boards up to 4x4", 1.0, [] {
            int boards = 0, good = 0;
            for (int r = 1 ; r <= 4 ; ++r)
                for (int c = 1 ; c <= 4 ; ++c) {
                    auto h = domino_placements(r, c, Axis::Horizontal);
                    auto v = domino_placements(r, c, Axis::Vertical);
                    ++boards;
                    bool ok = int(h.size()) == r * (c - 1) && int(v.size()) == (r - 1) * c;
                    std::vector<Board> all{ Board(r, c) };
                    for (auto d : h)
                        all.push_back(Board(r, c, { d }));
                    for (auto d : v)
                        all.push_back(Board(r, c, { d }));
                    for (auto & b : all) {
                        std::uint64_t expected = 1ull << (b.unit_cell_count() + b.dominoes().size());
                        if (b.choice_count() <= 16)
                            ok = ok && enumerate_triangulations(b).size() == expected;
                        else {
                            std::uint64_t seen = 0;
                            for_each_triangulation(b, [&] (const Triangulation &) { ++seen; });
                            ok = ok && seen == expected;
                        }
                    }
                    good += ok;
                }
            return Outcome{ good == boards, std::to_string(good) + " / " + std::to_string(boards) + " board shapes match" };
            });

    criterion(12, "vertical-domino 3x3 board agrees with its rotated horizontal board", 60.0, [] {
            Board vertical(3, 3, { Domino{ 0, 1, Axis::Vertical } });
            auto horizontal = transform(vertical, Symmetry::Rotate90, BoardMode::Theorem);
            if (horizontal.dominoes().at(0).axis != Axis::Horizontal)
                return Outcome{ false, "rotation did not give a horizontal domino" };

            VerifyOptions o;
            o.jobs = jobs();
            Verifier v(o);
            auto direct = v.verify_theorem(vertical);
            auto rotated = v.verify_theorem(horizontal);

            int agree = 0, total = 0;
            for (auto & c : direct.classifications) {
                ++total;
                auto t = parse_triangulation(vertical, c.triangulation);
                auto image = transform(vertical, t, Symmetry::Rotate90);
                auto & r = rotated.classifications.at(
                        std::find_if(rotated.classifications.begin(), rotated.classifications.end(),
                            [&] (auto & x) { return x.triangulation == format_triangulation(image); }) - rotated.classifications.begin());
                bool same_graph = transform(triangulate(vertical, t), Symmetry::Rotate90) == triangulate(horizontal, image);
                agree += same_graph && c.three_colourable == r.three_colourable && c.word_representable == r.word_representable
                    && c.forbidden_hit.has_value() == r.forbidden_hit.has_value();
            }
            bool ok = total == 256 && agree == total && direct.violations_of(equivalence_claim) == 0
                && rotated.violations_of(equivalence_claim) == 0;
            return Outcome{ ok, format_board(vertical) + " vs " + format_board(horizontal) + ": " + std::to_string(agree) + " / "
                + std::to_string(total) + " triangulations agree" };
            });

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
    return failures ? 1 : 0;
}
