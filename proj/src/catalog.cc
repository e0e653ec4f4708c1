/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wordrep/catalog.hh>
#include <wordrep/colouring.hh>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

using std::nullopt;
using std::optional;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace wordrep
{
    using std::to_string;

    extern const string_view builtin_catalog_json;

    namespace
    {
        auto expected_size(const string & name) -> int
        {
            if (name.starts_with("A"))
                return 11;
            return 9;
        }

        auto hex(uint64_t value) -> string
        {
            char buffer[17];
            std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
            return buffer;
        }
    }

    auto edge_checksum(const Graph & g) -> uint64_t
    {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (auto [u, v] : g.edges())
            for (char c : to_string(u) + "," + to_string(v) + ";") {
                h ^= static_cast<unsigned char>(c);
                h *= 0x100000001b3ULL;
            }
        return h;
    }

    auto load_catalog(string_view text) -> vector<PatternGraph>
    {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::exception & e) {
            throw CatalogError(string("catalog is not valid JSON: ") + e.what());
        }

        vector<PatternGraph> result;
        for (auto & entry : doc) {
            string name = entry.value("name", string("?"));
            try {
                int n = entry.at("n").get<int>();
                vector<Edge> edges;
                for (auto & e : entry.at("edges"))
                    edges.push_back(Edge{ e.at(0).get<int>(), e.at(1).get<int>() });
                vector<GridPoint> coords;
                for (auto & p : entry.at("coords"))
                    coords.push_back(GridPoint{ p.at(0).get<int>(), p.at(1).get<int>() });

                PatternGraph pattern{ name, EmbeddedGraph{ Graph(n, edges), coords },
                    entry.at("has_domino").get<bool>(), entry.at("provenance").get<string>() };

                if (hex(edge_checksum(pattern.embedded.graph)) != entry.at("checksum").get<string>())
                    throw CatalogError("edge list checksum mismatch");
                if (n != expected_size(name))
                    throw CatalogError("expected " + to_string(expected_size(name)) + " vertices, found " + to_string(n));
                if (coords.size() != unsigned(n))
                    throw CatalogError("coordinate count differs from vertex count");
                if (! std::is_sorted(coords.begin(), coords.end()) || std::adjacent_find(coords.begin(), coords.end()) != coords.end())
                    throw CatalogError("coordinates must be distinct and row-major");
                if (is_k_colourable(pattern.embedded.graph, 3))
                    throw CatalogError("pattern is 3-colourable");

                result.push_back(std::move(pattern));
            }
            catch (const CatalogError & e) {
                throw CatalogError("catalog pattern " + name + ": " + e.what());
            }
            catch (const std::exception & e) {
                throw CatalogError("catalog pattern " + name + ": " + e.what());
            }
        }
        return result;
    }

    auto minimal_graphs() -> const vector<PatternGraph> &
    {
        static const vector<PatternGraph> patterns = [] {
            auto loaded = load_catalog(builtin_catalog_json);
            if (loaded.size() != 12)
                throw CatalogError("built-in catalog has " + to_string(loaded.size()) + " patterns, expected 12");
            return loaded;
        }();
        return patterns;
    }

    auto to_string(ClosurePolicy p) -> const char *
    {
        return p == ClosurePolicy::Literal ? "literal" : "extended";
    }

    auto ForbiddenSet::image_count() const -> int
    {
        int total = 0;
        for (auto & m : members)
            total += int(m.images.size());
        return total;
    }

    auto closure_group(const PatternGraph & p, ClosurePolicy policy) -> vector<Symmetry>
    {
        if (! p.has_domino) {
            if (policy == ClosurePolicy::Literal)
                return { Symmetry::Identity, Symmetry::Rotate90, Symmetry::Rotate180, Symmetry::Rotate270 };
            return vector<Symmetry>(std::begin(all_symmetries), std::end(all_symmetries));
        }
        if (policy == ClosurePolicy::Literal)
            return { Symmetry::Identity, Symmetry::Rotate180 };
        return { Symmetry::Identity, Symmetry::Rotate180, Symmetry::MirrorRows, Symmetry::MirrorCols };
    }

    auto forbidden_set(ClosurePolicy policy) -> ForbiddenSet
    {
        ForbiddenSet result{ policy, {} };
        for (auto & pattern : minimal_graphs()) {
            for (auto s : closure_group(pattern, policy)) {
                auto image = transform(pattern.embedded, s);
                string image_name = s == Symmetry::Identity ? pattern.name : pattern.name + "@" + to_string(s);

                auto member = std::find_if(result.members.begin(), result.members.end(),
                        [&] (const ForbiddenMember & m) { return are_isomorphic(m.graph, image.graph); });
                if (member == result.members.end()) {
                    result.members.push_back(ForbiddenMember{ image_name, image.graph, {}, {} });
                    member = std::prev(result.members.end());
                }
                if (std::find(member->images.begin(), member->images.end(), image) == member->images.end()) {
                    member->images.push_back(image);
                    member->image_names.push_back(image_name);
                }
            }
        }
        return result;
    }

    auto find_forbidden_embedded(const EmbeddedGraph & host, const ForbiddenSet & set) -> optional<ForbiddenHit>
    {
        if (host.coords.empty())
            return nullopt;

        std::map<GridPoint, int> at;
        int max_row = 0, max_col = 0;
        for (unsigned v = 0 ; v < host.coords.size() ; ++v) {
            at.emplace(host.coords[v], int(v));
            max_row = std::max(max_row, host.coords[v].row);
            max_col = std::max(max_col, host.coords[v].col);
        }

        for (auto & member : set.members)
            for (unsigned i = 0 ; i < member.images.size() ; ++i) {
                auto & image = member.images[i];
                for (int dr = 0 ; dr <= max_row ; ++dr)
                    for (int dc = 0 ; dc <= max_col ; ++dc) {
                        VertexMapping mapping;
                        for (auto [r, c] : image.coords) {
                            auto where = at.find(GridPoint{ r + dr, c + dc });
                            if (where == at.end())
                                break;
                            mapping.push_back(where->second);
                        }
                        if (mapping.size() != image.coords.size())
                            continue;
                        if (! is_induced_embedding(host.graph, image.graph, mapping))
                            continue;

                        // confirm on the same vertex set with the general
                        // matcher, against the member rather than the drawing
                        if (! are_isomorphic(induced(host.graph, mapping), member.graph))
                            throw std::logic_error("internal error: translated match of " + member.image_names[i]
                                    + " not confirmed by the general matcher");

                        // report the mapping for the member's own numbering
                        auto relabel = contains_induced(image.graph, member.graph);
                        VertexMapping via_member;
                        for (int p : *relabel)
                            via_member.push_back(mapping[p]);
                        return ForbiddenHit{ member.name, member.image_names[i], via_member, true };
                    }
            }
        return nullopt;
    }

    auto find_forbidden_general(const Graph & host, const ForbiddenSet & set) -> optional<ForbiddenHit>
    {
        for (auto & member : set.members)
            if (auto mapping = contains_induced(host, member.graph))
                return ForbiddenHit{ member.name, "", *mapping, false };
        return nullopt;
    }

    auto find_forbidden(const EmbeddedGraph & host, const ForbiddenSet & set) -> optional<ForbiddenHit>
    {
        if (auto hit = find_forbidden_embedded(host, set))
            return hit;
        return find_forbidden_general(host.graph, set);
    }
}
