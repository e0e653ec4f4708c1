/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/catalog.hh>
#include <wordrep/colouring.hh>
#include <wordrep/graph.hh>
#include <wordrep/induced.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace wordrep;

namespace
{
    auto pattern(const std::string & name) -> const Graph &
    {
        for (auto & p : minimal_graphs())
            if (p.name == name)
                return p.embedded.graph;
        throw std::logic_error("no pattern " + name);
    }

    auto all_but(int n, int drop) -> std::vector<int>
    {
        std::vector<int> keep;
        for (int v = 0 ; v < n ; ++v)
            if (v != drop)
                keep.push_back(v);
        return keep;
    }
}

TEST_CASE("graph construction rejects bad edges")
{
    CHECK_THROWS_AS(Graph(3, { Edge{ 0, 0 } }), GraphError);
    CHECK_THROWS_AS(Graph(3, { Edge{ 0, 3 } }), GraphError);
    CHECK_THROWS_AS(Graph(3, { Edge{ -1, 2 } }), GraphError);
    CHECK_THROWS_AS(Graph(3, { Edge{ 0, 1 }, Edge{ 1, 0 } }), GraphError);
    CHECK_THROWS_AS(Graph(max_vertices + 1), GraphError);
    CHECK_THROWS_AS(Graph(-1), GraphError);
    CHECK_NOTHROW(Graph(max_vertices));
    CHECK(Graph(0).edge_count() == 0);
}

TEST_CASE("adjacency is symmetric and matches the edge list")
{
    std::mt19937 rng(11);
    for (int i = 0 ; i < 50 ; ++i) {
        auto g = oracle::random_graph(1 + i % 12, 0.4, rng);
        int count = 0;
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = 0 ; v < g.size() ; ++v) {
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                count += g.adjacent(u, v);
            }
        CHECK(count == 2 * g.edge_count());
        auto edges = g.edges();
        CHECK(int(edges.size()) == g.edge_count());
        CHECK(std::is_sorted(edges.begin(), edges.end()));
        for (auto [u, v] : edges)
            CHECK(u < v);
        for (int v = 0 ; v < g.size() ; ++v)
            CHECK(g.degree(v) == popcount(g.neighbours(v)));
    }
}

TEST_CASE("cycles and wheels")
{
    auto c4 = cycle_graph(4);
    CHECK(c4.size() == 4);
    CHECK(c4.edges() == std::vector<Edge>{ { 0, 1 }, { 0, 3 }, { 1, 2 }, { 2, 3 } });

    auto w5 = wheel_graph(5);
    CHECK(w5.size() == 6);
    CHECK(w5.edge_count() == 10);

    CHECK(wheel_graph(3) == complete_graph(4));
    CHECK_THROWS_AS(cycle_graph(2), GraphError);
    CHECK_THROWS_AS(wheel_graph(2), GraphError);

    for (int m = 3 ; m <= 11 ; ++m) {
        CHECK(wheel_graph(m).edge_count() == 2 * m);
        CHECK(wheel_graph(m).degree(m) == m);
    }
}

TEST_CASE("colourings")
{
    auto k3 = complete_graph(3);
    auto c = find_colouring(k3, 3);
    REQUIRE(c);
    CHECK(is_proper(k3, *c));
    CHECK(! find_colouring(k3, 2));

    CHECK(! is_k_colourable(pattern("T1"), 3));

    auto w5 = wheel_graph(5);
    auto c4 = find_colouring(w5, 4);
    REQUIRE(c4);
    CHECK(is_proper(w5, *c4));
    CHECK(colour_count(*c4) <= 4);
    CHECK(! find_colouring(w5, 3));

    CHECK(chromatic_number(cycle_graph(4)) == 2);
    CHECK(chromatic_number(w5) == 4);
    CHECK(chromatic_number(pattern("T1")) == 4);
    CHECK(chromatic_number(Graph(1)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(complete_graph(6)) == 6);
}

TEST_CASE("3-colourability agrees with exhaustive assignment")
{
    std::mt19937 rng(5);
    for (int i = 0 ; i < 200 ; ++i) {
        auto g = oracle::random_graph(2 + i % 8, 0.5, rng);
        for (int k = 1 ; k <= 4 ; ++k) {
            auto c = find_colouring(g, k);
            CHECK(c.has_value() == oracle::is_k_colourable(g, k));
            if (c) {
                CHECK(is_proper(g, *c));
                CHECK(colour_count(*c) <= k);
            }
        }
    }
}

TEST_CASE("induced subgraphs")
{
    auto c4 = cycle_graph(4);
    CHECK(induced(c4, first_n(4)) == c4);
    CHECK(induced(c4, std::vector<int>{ 0, 1 }) == Graph(2, { Edge{ 0, 1 } }));
    CHECK(induced(c4, std::vector<int>{ 0, 2 }) == Graph(2));

    // A1 without the vertex at (1, 0)
    const auto & a1 = [] () -> const PatternGraph & {
        for (auto & p : minimal_graphs())
            if (p.name == "A1")
                return p;
        throw std::logic_error("A1");
    }();
    auto drop = std::find(a1.embedded.coords.begin(), a1.embedded.coords.end(), GridPoint{ 1, 0 }) - a1.embedded.coords.begin();
    REQUIRE(drop < long(a1.embedded.coords.size()));
    auto rest = induced(a1.embedded.graph, all_but(a1.embedded.graph.size(), drop));
    CHECK(are_isomorphic(rest, wheel_graph(9)));
    CHECK(oracle::isomorphic(rest, wheel_graph(9)));
}

TEST_CASE("induced containment")
{
    auto m = contains_induced(pattern("A1"), wheel_graph(9));
    REQUIRE(m);
    CHECK(is_induced_embedding(pattern("A1"), wheel_graph(9), *m));

    auto b1 = contains_induced(pattern("B1"), wheel_graph(5));
    REQUIRE(b1);
    CHECK(is_induced_embedding(pattern("B1"), wheel_graph(5), *b1));

    CHECK(! contains_induced(cycle_graph(4), complete_graph(3)));
    // C4 is a subgraph of K4 but not an induced one
    CHECK(! contains_induced(complete_graph(4), cycle_graph(4)));
    CHECK(contains_induced(cycle_graph(6), Graph(3)));
    CHECK(! contains_induced(cycle_graph(5), Graph(3)));
    CHECK(contains_induced(cycle_graph(6), Graph(2)));
    CHECK(contains_induced(Graph(3), Graph(0)));
    CHECK_THROWS(contains_induced(complete_graph(14), complete_graph(13)));
}

TEST_CASE("induced containment agrees with brute force")
{
    std::mt19937 rng(17);
    for (int i = 0 ; i < 200 ; ++i) {
        auto host = oracle::random_graph(7, 0.5, rng);
        auto pat = oracle::random_graph(3 + i % 3, 0.5, rng);

        bool expected = false;
        std::vector<int> chosen;
        std::function<void (int)> pick = [&] (int from) {
            if (expected)
                return;
            if (int(chosen.size()) == pat.size()) {
                std::vector<int> p = chosen;
                std::sort(p.begin(), p.end());
                do
                    expected = expected || oracle::isomorphic(induced(host, p), pat);
                while (! expected && std::next_permutation(p.begin(), p.end()));
                return;
            }
            for (int v = from ; v < host.size() ; ++v) {
                chosen.push_back(v);
                pick(v + 1);
                chosen.pop_back();
            }
        };
        pick(0);

        auto m = contains_induced(host, pat);
        CHECK(m.has_value() == expected);
        if (m)
            CHECK(is_induced_embedding(host, pat, *m));
    }
}

TEST_CASE("isomorphism")
{
    std::mt19937 rng(3);
    auto c4 = cycle_graph(4);
    CHECK(are_isomorphic(c4, oracle::relabel(c4, { 2, 0, 3, 1 })));
    CHECK(! are_isomorphic(pattern("T1"), pattern("T2")));
    CHECK(! oracle::isomorphic(pattern("T1"), pattern("T2")));
    CHECK(! are_isomorphic(wheel_graph(5), cycle_graph(6)));

    for (int i = 0 ; i < 100 ; ++i) {
        auto g = oracle::random_graph(3 + i % 7, 0.45, rng);
        auto h = oracle::relabel(g, oracle::random_permutation(g.size(), rng));
        CHECK(are_isomorphic(g, h));
        auto other = oracle::random_graph(g.size(), 0.45, rng);
        CHECK(are_isomorphic(g, other) == oracle::isomorphic(g, other));
    }
}
