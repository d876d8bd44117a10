#include <catch2/catch_amalgamated.hpp>

#include "reslab/generators.hpp"
#include "reslab/io.hpp"

using namespace reslab;

TEST_CASE("JSON round trip preserves the embedding") {
    for (const PlaneGraph& g : {gen_hexagon().graph, gen_coronene_arc().graph,
                                gen_bridged_hexpair(), gen_hexagon_tail(),
                                embed_tree_or_cycle(gen_path(4))}) {
        PlaneGraph back = plane_from_json(to_json(g));
        REQUIRE(back.n == g.n);
        REQUIRE(back.edges == g.edges);
        REQUIRE(back.rot == g.rot);
        REQUIRE(back.faces.size() == g.faces.size());
        for (std::size_t f = 0; f < g.faces.size(); ++f) {
            REQUIRE(back.faces[f].boundary == g.faces[f].boundary);
            REQUIRE(back.faces[f].is_finite == g.faces[f].is_finite);
        }
        REQUIRE(back.outer == g.outer);
        REQUIRE(back.color == g.color);
    }
}

TEST_CASE("serialization is deterministic") {
    REQUIRE(to_json(gen_coronene().graph).dump() == to_json(gen_coronene().graph).dump());
}

TEST_CASE("schema violations are reported with field context") {
    auto code_of = [](const std::string& text) {
        try {
            plane_from_json_text(text);
        } catch (const error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    REQUIRE(code_of("[1,2]").find("object") != std::string::npos);
    REQUIRE(code_of("{\"edges\":[],\"rotations\":{}}").find("vertices") != std::string::npos);
    REQUIRE(code_of("{\"vertices\":[0,2],\"edges\":[],\"rotations\":{}}").find("dense") !=
            std::string::npos);
    REQUIRE(code_of("{\"vertices\":[0,1],\"edges\":[[0]],\"rotations\":{}}").find("edges") !=
            std::string::npos);
    REQUIRE(code_of("{\"vertices\":[0,1],\"edges\":[[0,1]],\"rotations\":{\"9\":[1]}}")
                .find("rotations") != std::string::npos);
    REQUIRE(code_of("not json at all").find("JSON") != std::string::npos);
}

TEST_CASE("outer face hint survives the round trip") {
    PlaneGraph g = gen_bridged_hexpair();  // two faces share the maximum length
    nlohmann::json j = to_json(g);
    REQUIRE(j.contains("outer_face"));
    PlaneGraph back = plane_from_json(j);
    REQUIRE(back.faces[back.outer_face()].boundary == g.faces[g.outer_face()].boundary);
}

TEST_CASE("DOT export carries face ids as edge comments") {
    std::string dot = to_dot(gen_hexagon().graph);
    REQUIRE(dot.find("graph G {") == 0);
    REQUIRE(dot.find("/* faces ") != std::string::npos);

    ResonanceGraph rg = build_resonance_graph(gen_naphthalene().graph);
    std::string rdot = to_dot(rg);
    REQUIRE(rdot.find("label=\"s") != std::string::npos);
}

TEST_CASE("resonance JSON report shape") {
    ResonanceGraph rg = build_resonance_graph(gen_naphthalene().graph);
    nlohmann::json j = resonance_to_json(rg);
    REQUIRE(j["vertices"] == 3);
    REQUIRE(j["edges"].size() == 2);
    REQUIRE(j["labels"].size() == 2);
}
