/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/catalog.hh>
#include <wordrep/colouring.hh>
#include <wordrep/induced.hh>
#include <wordrep/semitrans.hh>

#include "oracles.hh"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace wordrep;

namespace
{
    auto catalog_text() -> std::string
    {
        std::ifstream in(WORDREP_CATALOG_PATH);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto by_name(const std::string & name) -> const PatternGraph &
    {
        for (auto & p : minimal_graphs())
            if (p.name == name)
                return p;
        throw std::logic_error("no pattern " + name);
    }

    auto expected_wheel(const std::string & name) -> int
    {
        static const std::map<std::string, int> wheels{
            { "T1", 5 }, { "T2", 7 }, { "A1", 9 }, { "A2", 7 }, { "A3", 7 }, { "A4", 5 }, { "A5", 5 },
            { "A6", 7 }, { "A7", 7 }, { "A8", 5 }, { "B1", 5 }, { "B2", 5 } };
        return wheels.at(name);
    }
}

TEST_CASE("the built-in patterns")
{
    auto & all = minimal_graphs();
    REQUIRE(all.size() == 12);
    std::vector<std::string> names;
    for (auto & p : all)
        names.push_back(p.name);
    CHECK(names == std::vector<std::string>{ "T1", "T2", "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B1", "B2" });

    CHECK(by_name("T1").embedded.graph.edge_count() == 16);
    CHECK(by_name("A1").embedded.graph.size() == 11);

    for (auto & p : all) {
        INFO(p.name);
        CHECK(p.embedded.graph.size() == (p.name[0] == 'A' ? 11 : 9));
        CHECK(p.has_domino == (p.name[0] != 'T'));
        CHECK(! oracle::is_k_colourable(p.embedded.graph, 3));
        CHECK(! p.provenance.empty());
        for (auto [r, c] : p.embedded.coords) {
            CHECK(r >= 0);
            CHECK(r <= 2);
            CHECK(c >= 0);
            CHECK(c <= 3);
        }
    }
}

TEST_CASE("loading rejects damaged fixtures")
{
    auto text = catalog_text();
    REQUIRE(! text.empty());
    CHECK(load_catalog(text).size() == 12);

    auto doc = nlohmann::json::parse(text);
    SUBCASE("edge removed") {
        doc[0]["edges"].erase(0);
        CHECK_THROWS_AS(load_catalog(doc.dump()), CatalogError);
    }
    SUBCASE("checksum altered") {
        doc[3]["checksum"] = "0000000000000000";
        CHECK_THROWS_AS(load_catalog(doc.dump()), CatalogError);
    }
    SUBCASE("vertex count") {
        doc[2]["n"] = 10;
        CHECK_THROWS_AS(load_catalog(doc.dump()), CatalogError);
    }
    SUBCASE("duplicate coordinate") {
        doc[0]["coords"][1] = doc[0]["coords"][0];
        CHECK_THROWS_AS(load_catalog(doc.dump()), CatalogError);
    }
    SUBCASE("not JSON") {
        CHECK_THROWS_AS(load_catalog("[{"), CatalogError);
    }
}

TEST_CASE("checksums")
{
    CHECK(edge_checksum(Graph(2, { Edge{ 0, 1 } })) != edge_checksum(Graph(3, { Edge{ 0, 2 } })));
    CHECK(edge_checksum(cycle_graph(4)) == edge_checksum(cycle_graph(4)));
}

TEST_CASE("patterns are not word-representable and contain their odd wheels")
{
    for (auto & p : minimal_graphs()) {
        INFO(p.name);
        CHECK(decide_word_representable(p.embedded.graph).verdict == Verdict::No);
        CHECK(contains_induced(p.embedded.graph, wheel_graph(expected_wheel(p.name))));
    }
}

TEST_CASE("forbidden sets")
{
    auto literal = forbidden_set(ClosurePolicy::Literal);
    auto extended = forbidden_set(ClosurePolicy::Extended);

    // A6 and A7 are the same abstract graph, so twelve patterns give eleven classes
    CHECK(are_isomorphic(by_name("A6").embedded.graph, by_name("A7").embedded.graph));
    CHECK(literal.members.size() == 11);
    CHECK(extended.members.size() == 11);
    CHECK(literal.image_count() == 28);
    CHECK(extended.image_count() == 48);

    for (auto & m : literal.members) {
        bool found = false;
        for (auto & n : extended.members)
            found = found || are_isomorphic(m.graph, n.graph);
        CHECK(found);
    }

    for (auto * s : { &literal, &extended })
        for (auto & m : s->members) {
            CHECK(! is_k_colourable(m.graph, 3));
            CHECK(m.images.size() == m.image_names.size());
            for (auto & image : m.images)
                CHECK(are_isomorphic(image.graph, m.graph));
        }

    for (unsigned i = 0 ; i < extended.members.size() ; ++i)
        for (unsigned j = i + 1 ; j < extended.members.size() ; ++j)
            CHECK(! are_isomorphic(extended.members[i].graph, extended.members[j].graph));
}

TEST_CASE("forbidden sets are closed under their groups")
{
    for (auto policy : { ClosurePolicy::Literal, ClosurePolicy::Extended }) {
        auto s = forbidden_set(policy);
        std::set<std::pair<std::vector<GridPoint>, std::vector<Edge>>> drawings;
        for (auto & m : s.members)
            for (auto & image : m.images)
                drawings.insert({ image.coords, image.graph.edges() });
        for (auto & p : minimal_graphs())
            for (auto sym : closure_group(p, policy)) {
                auto image = transform(p.embedded, sym);
                CHECK(drawings.contains({ image.coords, image.graph.edges() }));
            }
    }
    CHECK(closure_group(by_name("T1"), ClosurePolicy::Literal).size() == 4);
    CHECK(closure_group(by_name("T1"), ClosurePolicy::Extended).size() == 8);
    CHECK(closure_group(by_name("A1"), ClosurePolicy::Literal).size() == 2);
    CHECK(closure_group(by_name("A1"), ClosurePolicy::Extended).size() == 4);
}

TEST_CASE("matching forbidden subgraphs in boards")
{
    Board square(2, 2);
    int t1_drawings = 0;
    for (auto & t : enumerate_triangulations(square)) {
        auto host = triangulate(square, t);
        if (host == by_name("T1").embedded) {
            ++t1_drawings;
            for (auto policy : { ClosurePolicy::Literal, ClosurePolicy::Extended }) {
                auto hit = find_forbidden(host, forbidden_set(policy));
                REQUIRE(hit);
                CHECK(hit->pattern == "T1");
                CHECK(hit->embedded);
                CHECK(is_induced_embedding(host.graph, by_name("T1").embedded.graph, hit->mapping));
            }
        }
    }
    CHECK(t1_drawings == 1);

    auto extended = forbidden_set(ClosurePolicy::Extended);
    CHECK(! find_forbidden(triangulate(Board(1, 1), triangulation_at(Board(1, 1), 0)), extended));

    // 3-colourable hosts never contain a non-3-colourable induced subgraph
    for (auto & b : { Board(2, 2), Board(2, 3, { Domino{ 0, 1, Axis::Horizontal } }) })
        for (auto & t : enumerate_triangulations(b)) {
            auto host = triangulate(b, t);
            if (is_k_colourable(host.graph, 3))
                CHECK(! find_forbidden(host, extended));
        }
}

TEST_CASE("translation hits are confirmed by the general matcher")
{
    auto extended = forbidden_set(ClosurePolicy::Extended);
    Board b(3, 3, { Domino{ 1, 0, Axis::Horizontal } });
    int hits = 0;
    for (auto & t : enumerate_triangulations(b)) {
        auto host = triangulate(b, t);
        if (auto hit = find_forbidden_embedded(host, extended)) {
            ++hits;
            const Graph * g = nullptr;
            for (auto & m : extended.members)
                if (m.name == hit->pattern)
                    g = &m.graph;
            REQUIRE(g);
            CHECK(is_induced_embedding(host.graph, *g, hit->mapping));
            CHECK(find_forbidden_general(host.graph, extended));
        }
    }
    CHECK(hits > 0);
}
