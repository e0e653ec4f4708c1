/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/io.hh>

#include <fstream>
#include <sstream>

using std::string;
using std::vector;

namespace wordrep
{
    using std::to_string;

    auto graph_to_json(const Graph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({ u, v });
        return Json{ { "n", g.size() }, { "edges", edges } };
    }

    auto graph_from_json(const Json & doc) -> Graph
    {
        try {
            if (! doc.is_object() || ! doc.contains("n") || ! doc.contains("edges"))
                throw FormatError("graph JSON needs \"n\" and \"edges\"");
            int n = doc.at("n").get<int>();
            vector<Edge> edges;
            for (auto & e : doc.at("edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw FormatError("each edge must be a [u, v] pair");
                edges.push_back(Edge{ e.at(0).get<int>(), e.at(1).get<int>() });
            }
            return Graph(n, edges);
        }
        catch (const nlohmann::json::exception & e) {
            throw FormatError(string("bad graph JSON: ") + e.what());
        }
    }

    auto read_graph_file(const string & path) -> Graph
    {
        std::ifstream in(path);
        if (! in)
            throw FormatError("cannot open " + path);
        try {
            return graph_from_json(Json::parse(in));
        }
        catch (const nlohmann::json::exception & e) {
            throw FormatError(path + ": " + e.what());
        }
    }

    auto orientation_to_json(const Orientation & o) -> Json
    {
        Json edges = Json::array();
        for (auto e : o.graph().edges()) {
            auto d = o.direction(e);
            if (d == Direction::Undecided)
                throw FormatError("edge {" + to_string(e.u) + "," + to_string(e.v) + "} is not oriented");
            edges.push_back({ e.u, e.v, d == Direction::Forward ? "uv" : "vu" });
        }
        return Json{ { "edges", edges } };
    }

    auto orientation_from_json(const Graph & g, const Json & doc) -> Orientation
    {
        try {
            vector<Arc> arcs;
            for (auto & e : doc.at("edges")) {
                int u = e.at(0).get<int>(), v = e.at(1).get<int>();
                auto way = e.at(2).get<string>();
                if (way != "uv" && way != "vu")
                    throw FormatError("direction must be \"uv\" or \"vu\", got \"" + way + "\"");
                arcs.push_back(way == "uv" ? Arc{ u, v } : Arc{ v, u });
            }
            return Orientation(g, arcs);
        }
        catch (const nlohmann::json::exception & e) {
            throw FormatError(string("bad orientation JSON: ") + e.what());
        }
    }

    auto embedded_to_json(const EmbeddedGraph & e) -> Json
    {
        Json doc = graph_to_json(e.graph);
        Json coords = Json::array();
        for (auto [r, c] : e.coords)
            coords.push_back({ r, c });
        doc["coords"] = coords;
        return doc;
    }

    auto classification_to_json(const Classification & c) -> Json
    {
        Json doc;
        doc["board"] = c.board;
        doc["triangulation"] = c.triangulation;
        doc["three_colourable"] = c.three_colourable;
        doc["word_representable"] = to_string(c.word_representable);
        doc["forbidden_hit"] = c.forbidden_hit ? Json(*c.forbidden_hit) : Json(nullptr);
        doc["embedded_hit"] = c.embedded_hit;
        if (c.colouring)
            doc["certificate"] = Json{ { "colouring", c.colouring->colours } };
        else if (c.orientation)
            doc["certificate"] = Json{ { "orientation", orientation_to_json(*c.orientation) } };
        else
            doc["certificate"] = nullptr;
        return doc;
    }

    auto summary_to_json(const SweepReport & r) -> Json
    {
        Json violations = Json::array();
        for (auto & v : r.violations)
            violations.push_back(Json{ { "board", v.board }, { "triangulation", v.triangulation },
                    { "claim", v.claim }, { "detail", v.detail } });

        Json summary;
        summary["status"] = to_string(r.status());
        summary["boards"] = r.boards;
        summary["triangulations"] = r.triangulations;
        summary["three_colourable"] = r.three_colourable;
        summary["budget_exceeded"] = r.budget_exceeded;
        summary["flip_checks"] = r.flip_checks;
        summary["embedded_hits"] = r.embedded_hits;
        summary["general_only_hits"] = r.general_only_hits;
        summary["literal_checked"] = r.literal_checked;
        summary["literal_discrepancies"] = r.literal_discrepancies;
        summary["violations"] = violations;
        return Json{ { "summary", summary } };
    }

    auto forbidden_set_to_json(const ForbiddenSet & s) -> Json
    {
        Json members = Json::array();
        for (auto & m : s.members) {
            Json images = Json::array();
            for (unsigned i = 0 ; i < m.images.size() ; ++i) {
                Json image = embedded_to_json(m.images[i]);
                image["name"] = m.image_names[i];
                images.push_back(image);
            }
            Json member = graph_to_json(m.graph);
            member["name"] = m.name;
            member["images"] = images;
            members.push_back(member);
        }
        return Json{ { "policy", to_string(s.policy) }, { "members", members } };
    }

    auto embedded_to_dot(const string & name, const EmbeddedGraph & e) -> string
    {
        std::ostringstream out;
        out << "graph \"" << name << "\" {\n";
        out << "  node [shape=circle, width=0.3, fixedsize=true];\n";
        for (unsigned v = 0 ; v < e.coords.size() ; ++v)
            out << "  " << v << " [pos=\"" << e.coords[v].col << "," << -e.coords[v].row << "!\"];\n";
        for (auto [u, v] : e.graph.edges())
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }
}
