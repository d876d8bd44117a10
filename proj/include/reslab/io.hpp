#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reslab/plane_graph.hpp"
#include "reslab/resonance.hpp"

namespace reslab {

/// JSON graph schema:
///   {"vertices":[0..n-1], "edges":[[u,v],...],
///    "rotations":{"v":[neighbors clockwise],...}, "outer_face":[v,...]?}
/// Vertex ids must be dense 0..n-1.
inline nlohmann::json to_json(const PlaneGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.n; ++v) j["vertices"].push_back(v);
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    j["rotations"] = nlohmann::json::object();
    for (int v = 0; v < g.n; ++v) j["rotations"][std::to_string(v)] = g.rot[v];
    if (g.outer.size() == 1) j["outer_face"] = g.faces[g.outer[0]].boundary;
    return j;
}

inline PlaneGraph plane_from_json(const nlohmann::json& j) {
    require(j.is_object(), errc::bad_input, "top level must be an object");
    require(j.contains("vertices") && j["vertices"].is_array(), errc::bad_input,
            "field 'vertices' must be an array of ints");
    require(j.contains("edges") && j["edges"].is_array(), errc::bad_input,
            "field 'edges' must be an array of pairs");
    require(j.contains("rotations") && j["rotations"].is_object(), errc::bad_input,
            "field 'rotations' must be an object");

    std::vector<int> vertices;
    for (const auto& v : j["vertices"]) {
        require(v.is_number_integer(), errc::bad_input, "field 'vertices': entries must be ints");
        vertices.push_back(v.get<int>());
    }
    int n = static_cast<int>(vertices.size());
    {
        std::vector<int> sorted = vertices;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            require(sorted[i] == i, errc::bad_input,
                    "field 'vertices': ids must be dense 0..n-1");
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                    e[1].is_number_integer(),
                errc::bad_input, "field 'edges': entries must be [u,v] int pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    std::vector<std::vector<int>> rotations(n);
    for (const auto& [key, val] : j["rotations"].items()) {
        int v = -1;
        try {
            v = std::stoi(key);
        } catch (...) {
            fail(errc::bad_input, "field 'rotations': key '" + key + "' is not a vertex id");
        }
        require(0 <= v && v < n, errc::bad_input,
                "field 'rotations': key '" + key + "' out of range");
        require(val.is_array(), errc::bad_input, "field 'rotations." + key + "' must be an array");
        for (const auto& u : val) {
            require(u.is_number_integer(), errc::bad_input,
                    "field 'rotations." + key + "': entries must be ints");
            rotations[v].push_back(u.get<int>());
        }
    }

    std::optional<std::vector<int>> hint;
    if (j.contains("outer_face")) {
        require(j["outer_face"].is_array(), errc::bad_input,
                "field 'outer_face' must be an array of ints");
        hint.emplace();
        for (const auto& u : j["outer_face"]) {
            require(u.is_number_integer(), errc::bad_input,
                    "field 'outer_face': entries must be ints");
            hint->push_back(u.get<int>());
        }
    }
    return build_embedding(n, edges, rotations, hint);
}

inline PlaneGraph plane_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    require(!j.is_discarded(), errc::bad_input, "invalid JSON");
    return plane_from_json(j);
}

/// DOT export with face ids as edge comments.
inline std::string to_dot(const PlaneGraph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.n; ++v)
        out << "  " << v << (g.color[v] == 0 ? " [color=white];\n" : " [color=black];\n");
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        out << "  " << u << " -- " << v << "; /* faces " << g.face_right(u, v) << "|"
            << g.face_right(v, u) << " */\n";
    }
    out << "}\n";
    return out.str();
}

/// DOT export of a resonance graph, face labels on edges.
inline std::string to_dot(const ResonanceGraph& rg, const std::string& name = "R") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int e = 0; e < rg.graph.edge_count(); ++e) {
        auto [i, j] = rg.graph.edges[e];
        out << "  " << i << " -- " << j << " [label=\"s" << rg.label[e] << "\"];\n";
    }
    for (int v = 0; v < rg.graph.n; ++v)
        if (rg.graph.degree(v) == 0) out << "  " << v << ";\n";
    out << "}\n";
    return out.str();
}

/// Resonance report: {"vertices": n, "edges": [[i,j],...], "labels": {"e": face},
/// "matchings": [...]}; matchings serialize as sorted edge-id arrays.
inline nlohmann::json resonance_to_json(const ResonanceGraph& rg) {
    nlohmann::json j;
    j["vertices"] = rg.graph.n;
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : rg.graph.edges) j["edges"].push_back({a, b});
    j["labels"] = nlohmann::json::object();
    for (int e = 0; e < rg.graph.edge_count(); ++e)
        j["labels"][std::to_string(e)] = rg.label[e];
    j["matchings"] = nlohmann::json::array();
    for (const Matching& m : rg.matchings) {
        std::vector<int> ids;
        m.for_each([&](int e) { ids.push_back(e); });
        j["matchings"].push_back(ids);
    }
    return j;
}

}  // namespace reslab
