#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gflow/assignment.hpp"
#include "gflow/coloring.hpp"
#include "gflow/eulerian.hpp"
#include "gflow/group.hpp"
#include "gflow/infinite.hpp"
#include "gflow/multigraph.hpp"
#include "gflow/presentation.hpp"

namespace gflow {

using json = nlohmann::json;  // std::map-backed: object keys serialize sorted

namespace detail {

inline std::string id_string(const json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(std::string(what) + " must be a string or integer");
}

}  // namespace detail

// --------------------------------------------------------------- multigraph

inline json to_json(const Multigraph& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : g.vertex_ids()) j["vertices"].push_back(v);
    j["edges"] = json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back({e.id, g.vertex_id(e.u), g.vertex_id(e.v)});
    return j;
}

inline Multigraph multigraph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(detail::id_string(v, "vertex id"));
    std::vector<Multigraph::EdgeSpec> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw Error("each edge must be [id, u, v]");
        edges.push_back({detail::id_string(e[0], "edge id"), detail::id_string(e[1], "vertex id"),
                         detail::id_string(e[2], "vertex id")});
    }
    return Multigraph(vertices, edges);
}

// ----------------------------------------------------------------- alphabet

inline json to_json(const FlowAlphabet& a) {
    json j;
    if (a.kind() == FlowAlphabet::Kind::integer_k) {
        j["kind"] = "k-flow";
        j["k"] = a.k();
        return j;
    }
    j["group"] = a.group().label();
    if (a.non_elusive()) {
        j["kind"] = "nonzero";
    } else {
        j["kind"] = "elements";
        j["elements"] = json::array();
        for (const auto& e : a.elements()) j["elements"].push_back(e.coords);
    }
    return j;
}

inline FlowAlphabet alphabet_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "k-flow") return FlowAlphabet::k_flow(j.at("k").get<int>());
    FiniteAbelianGroup grp = parse_group_spec(j.at("group").get<std::string>());
    if (kind == "nonzero") return alphabet_nonzero(grp);
    if (kind == "elements") {
        std::vector<GroupElement> elems;
        for (const auto& coords : j.at("elements")) elems.push_back(grp.make(coords.get<std::vector<int>>()));
        return FlowAlphabet::of(grp, elems);
    }
    throw Error("unknown alphabet kind: " + kind);
}

// --------------------------------------------------------------- assignment

inline json to_json(const Multigraph& g, const EdgeAssignment& f) {
    json j;
    json values = json::object();
    if (f.integer_domain()) {
        j["group"] = "Z";
        j["k"] = f.k();
        for (int e = 0; e < g.edge_count(); ++e) values[g.edge(e).id] = {f.ivalue(e)};
    } else {
        j["group"] = f.group().label();
        for (int e = 0; e < g.edge_count(); ++e) values[g.edge(e).id] = f.gvalue(e).coords;
    }
    j["values"] = values;
    return j;
}

inline EdgeAssignment assignment_from_json(const Multigraph& g, const json& j) {
    std::string spec = j.at("group").get<std::string>();
    const json& values = j.at("values");
    if (static_cast<int>(values.size()) != g.edge_count())
        throw Error("assignment is partial: " + std::to_string(values.size()) + " values for " +
                    std::to_string(g.edge_count()) + " edges");
    if (spec == "Z") {
        int k = j.at("k").get<int>();
        std::vector<long long> vals(g.edge_count(), 0);
        for (auto it = values.begin(); it != values.end(); ++it) {
            const json& arr = it.value();
            if (!arr.is_array() || arr.size() != 1) throw Error("integer flow values are one-element arrays");
            vals[g.edge_index(it.key())] = arr[0].get<long long>();
        }
        return EdgeAssignment::integer_valued(k, std::move(vals));
    }
    FiniteAbelianGroup grp = parse_group_spec(spec);
    std::vector<GroupElement> vals(g.edge_count(), grp.zero());
    for (auto it = values.begin(); it != values.end(); ++it)
        vals[g.edge_index(it.key())] = grp.make(it.value().get<std::vector<int>>());
    return EdgeAssignment::group_valued(grp, std::move(vals));
}

// ----------------------------------------------------------------- coloring

inline json to_json(const Multigraph& g, const EdgeColoring& c) {
    json j;
    j["k"] = c.k;
    json colors = json::object();
    for (int e = 0; e < g.edge_count(); ++e) colors[g.edge(e).id] = c.colors[e];
    j["colors"] = colors;
    return j;
}

inline EdgeColoring coloring_from_json(const Multigraph& g, const json& j) {
    EdgeColoring c;
    c.k = j.at("k").get<int>();
    c.colors.assign(g.edge_count(), 0);
    const json& colors = j.at("colors");
    if (static_cast<int>(colors.size()) != g.edge_count()) throw Error("coloring is partial");
    for (auto it = colors.begin(); it != colors.end(); ++it)
        c.colors[g.edge_index(it.key())] = it.value().get<int>();
    return c;
}

// -------------------------------------------------------------- edge subset

inline json to_json(const Multigraph& g, const EdgeSubset& s) {
    json j = json::array();
    for (const auto& id : s.ids(g)) j.push_back(id);
    return j;
}

inline EdgeSubset edge_subset_from_json(const Multigraph& g, const json& j) {
    std::vector<std::string> ids;
    for (const auto& id : j) ids.push_back(detail::id_string(id, "edge id"));
    return EdgeSubset::of_ids(g, ids);
}

// ------------------------------------------------------------------- cuts

// A cuts file lists cuts either as vertex-id arrays (one side of the cut),
// as {"side_a": [...]}, or as {"prefix": i} for presentations (side A = the
// prefix and all cells with index < i).
struct CutSpec {
    enum class Kind { vertex_set, prefix } kind = Kind::vertex_set;
    std::vector<std::string> side_a;
    int prefix = 0;
};

inline std::vector<CutSpec> cut_specs_from_json(const json& j) {
    if (!j.is_array()) throw Error("cuts JSON must be an array");
    std::vector<CutSpec> out;
    for (const auto& entry : j) {
        CutSpec spec;
        if (entry.is_array()) {
            for (const auto& v : entry) spec.side_a.push_back(detail::id_string(v, "vertex id"));
        } else if (entry.is_object() && entry.contains("side_a")) {
            for (const auto& v : entry.at("side_a")) spec.side_a.push_back(detail::id_string(v, "vertex id"));
        } else if (entry.is_object() && entry.contains("prefix")) {
            spec.kind = CutSpec::Kind::prefix;
            spec.prefix = entry.at("prefix").get<int>();
        } else {
            throw Error("each cut must be a vertex array, {\"side_a\": [...]} or {\"prefix\": i}");
        }
        out.push_back(std::move(spec));
    }
    return out;
}

inline json to_json(const Multigraph& g, const OrientedCut& cut) {
    json j;
    j["side_a"] = cut.side_a_ids(g);
    json crossing = json::array();
    for (const auto& de : cut.directed_crossing(g)) crossing.push_back({de.edge, de.tail, de.head});
    j["crossing"] = crossing;
    return j;
}

// ------------------------------------------------------------- presentation

inline json to_json(const PeriodicPresentation& p) {
    json j;
    j["direction"] = p.direction == PeriodicPresentation::Direction::one_way ? "one-way" : "two-way";
    auto fragment = [](const PeriodicPresentation::Fragment& f) {
        json out;
        out["vertices"] = f.vertices;
        out["edges"] = json::array();
        for (const auto& [id, u, v] : f.edges) out["edges"].push_back({id, u, v});
        return out;
    };
    j["cell"] = fragment(p.cell);
    if (!p.prefix.vertices.empty()) j["prefix"] = fragment(p.prefix);
    j["glue"] = json::array();
    for (const auto& ge : p.glue) j["glue"].push_back({ge.from, ge.to, ge.id});
    if (!p.prefix_glue.empty()) {
        j["prefix_glue"] = json::array();
        for (const auto& ge : p.prefix_glue) j["prefix_glue"].push_back({ge.from, ge.to, ge.id});
    }
    return j;
}

inline PeriodicPresentation presentation_from_json(const json& j) {
    PeriodicPresentation p;
    std::string dir = j.value("direction", "two-way");
    if (dir == "one-way")
        p.direction = PeriodicPresentation::Direction::one_way;
    else if (dir == "two-way")
        p.direction = PeriodicPresentation::Direction::two_way;
    else
        throw Error("direction must be \"one-way\" or \"two-way\"");
    auto fragment = [](const json& f) {
        PeriodicPresentation::Fragment out;
        if (f.contains("vertices"))
            for (const auto& v : f.at("vertices")) out.vertices.push_back(detail::id_string(v, "vertex id"));
        if (f.contains("edges"))
            for (const auto& e : f.at("edges")) {
                if (!e.is_array() || e.size() != 3) throw Error("each edge must be [id, u, v]");
                out.edges.push_back({detail::id_string(e[0], "edge id"), detail::id_string(e[1], "vertex id"),
                                     detail::id_string(e[2], "vertex id")});
            }
        return out;
    };
    if (j.contains("cell")) p.cell = fragment(j.at("cell"));
    if (j.contains("prefix")) p.prefix = fragment(j.at("prefix"));
    auto glue_list = [](const json& arr, const char* what) {
        std::vector<PeriodicPresentation::GlueEdge> out;
        int auto_id = 0;
        for (const auto& entry : arr) {
            if (!entry.is_array() || entry.size() < 2 || entry.size() > 3)
                throw Error(std::string(what) + " entries are [from, to] or [from, to, id]");
            PeriodicPresentation::GlueEdge ge;
            ge.from = entry[0].get<std::string>();
            ge.to = entry[1].get<std::string>();
            ge.id = entry.size() == 3 ? entry[2].get<std::string>() : "g" + std::to_string(auto_id);
            ++auto_id;
            out.push_back(std::move(ge));
        }
        return out;
    };
    if (j.contains("glue")) p.glue = glue_list(j.at("glue"), "glue");
    if (j.contains("prefix_glue")) p.prefix_glue = glue_list(j.at("prefix_glue"), "prefix_glue");
    p.validate();
    return p;
}

// -------------------------------------------------------------- certificate

inline json to_json(const ObstructionCertificate& cert) {
    json j;
    j["type"] = "obstruction";
    j["depth"] = cert.depth;
    j["alphabet"] = to_json(cert.alphabet);
    j["quotient"] = to_json(cert.quotient);
    json family;
    family["singleton_cuts"] = cert.window_vertices;
    family["component_cuts"] = cert.component_dummies;
    j["cut_family"] = family;
    j["transcript"] = cert.transcript;
    return j;
}

inline ObstructionCertificate certificate_from_json(const json& j) {
    ObstructionCertificate cert;
    cert.depth = j.at("depth").get<int>();
    cert.alphabet = alphabet_from_json(j.at("alphabet"));
    cert.quotient = multigraph_from_json(j.at("quotient"));
    for (const auto& v : j.at("cut_family").at("singleton_cuts"))
        cert.window_vertices.push_back(v.get<std::string>());
    for (const auto& v : j.at("cut_family").at("component_cuts"))
        cert.component_dummies.push_back(v.get<std::string>());
    cert.transcript = j.value("transcript", "");
    return cert;
}

// ------------------------------------------------------------------ circles

inline CircleTemplate circle_from_json(const json& j) {
    CircleTemplate c;
    if (j.contains("cell_edges"))
        for (const auto& e : j.at("cell_edges")) c.cell_edges.push_back(e.get<std::string>());
    if (j.contains("prefix_edges"))
        for (const auto& e : j.at("prefix_edges")) c.prefix_edges.push_back(e.get<std::string>());
    return c;
}

// -------------------------------------------------------------------- files

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw Error("malformed JSON in " + path + ": " + ex.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace gflow
