#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reslab/plane_graph.hpp"

namespace reslab {

// ---- trees ----------------------------------------------------------------

inline Graph gen_path(int n) {
    require(n >= 1, errc::bad_parameter, "path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph gen_cycle(int n) {
    require(n >= 3, errc::bad_parameter, "cycle needs n >= 3");
    Graph g = gen_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// Star with k leaves; vertex 0 is the center.
inline Graph gen_star(int k) {
    require(k >= 1, errc::bad_parameter, "star needs k >= 1");
    Graph g(k + 1);
    for (int v = 1; v <= k; ++v) g.add_edge(0, v);
    return g;
}

/// Bistar: edge 0-1 with p pendants on 0 and q pendants on 1.
inline Graph gen_bistar(int p, int q) {
    require(p >= 1 && q >= 1, errc::bad_parameter, "bistar needs p,q >= 1");
    Graph g(p + q + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < p; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < q; ++i) g.add_edge(1, 2 + p + i);
    return g;
}

/// Path 0-1-2 with p pendants on 0 and q pendants on 2.
inline Graph gen_s3(int p, int q) {
    require(p >= 1 && q >= 1, errc::bad_parameter, "S3 needs p,q >= 1");
    Graph g(p + q + 3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    for (int i = 0; i < p; ++i) g.add_edge(0, 3 + i);
    for (int i = 0; i < q; ++i) g.add_edge(2, 3 + p + i);
    return g;
}

/// Path 0-1-2-3 with p pendants on 0 and q pendants on 3.
inline Graph gen_s4(int p, int q) {
    require(p >= 1 && q >= 1, errc::bad_parameter, "S4 needs p,q >= 1");
    Graph g(p + q + 4);
    for (int v = 0; v < 3; ++v) g.add_edge(v, v + 1);
    for (int i = 0; i < p; ++i) g.add_edge(0, 4 + i);
    for (int i = 0; i < q; ++i) g.add_edge(3, 4 + p + i);
    return g;
}

/// Path 0-1-2 with p pendants on 0, q pendants on 2, r pendants on 1.
inline Graph gen_s3pqr(int p, int q, int r) {
    require(p >= 1 && q >= 1 && r >= 1, errc::bad_parameter, "S3pqr needs p,q,r >= 1");
    Graph g(p + q + r + 3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    for (int i = 0; i < p; ++i) g.add_edge(0, 3 + i);
    for (int i = 0; i < q; ++i) g.add_edge(2, 3 + p + i);
    for (int i = 0; i < r; ++i) g.add_edge(1, 3 + p + q + i);
    return g;
}

/// Gear graph BW3: hub 0 inside a 6-cycle 1..6, hub adjacent to 1, 3, 5.
inline Graph gen_gear() {
    Graph g(7);
    for (int i = 1; i <= 6; ++i) g.add_edge(i, i % 6 + 1);
    g.add_edge(0, 1);
    g.add_edge(0, 3);
    g.add_edge(0, 5);
    return g;
}

// ---- hexagonal systems -----------------------------------------------------

/// Hexagonal systems are built on an exact integer lattice: flat-top hexagons
/// whose true position is (x, sqrt(3)*y) for stored integer (x, y). Centers
/// step by the six offsets below (clockwise); each center's six corners are
/// center + {(2,0),(1,-1),(-1,-1),(-2,0),(-1,1),(1,1)} (clockwise on screen
/// with y up). Coordinates exist only during construction.
namespace hexlat {

using Pt = std::pair<int, int>;

inline constexpr std::array<Pt, 6> kCenterStep{{{3, 1}, {3, -1}, {0, -2}, {-3, -1}, {-3, 1}, {0, 2}}};
inline constexpr std::array<Pt, 6> kCorner{{{2, 0}, {1, -1}, {-1, -1}, {-2, 0}, {-1, 1}, {1, 1}}};

inline Pt add(Pt a, Pt b) { return {a.first + b.first, a.second + b.second}; }

/// Clockwise angular order comparator for direction vectors, exact: the true
/// vector is (x, sqrt(3) y), whose cross-product sign equals the integer one.
inline bool clockwise_less(Pt a, Pt b) {
    auto half = [](Pt v) { return (v.second < 0 || (v.second == 0 && v.first < 0)) ? 1 : 0; };
    if (half(a) != half(b)) return half(a) < half(b);
    long cross = static_cast<long>(a.first) * b.second - static_cast<long>(a.second) * b.first;
    return cross < 0;
}

}  // namespace hexlat

/// A hexagonal system with the traced face id of each input hexagon.
struct HexSystem {
    PlaneGraph graph;
    std::vector<int> face_of_hexagon;  // per input center
};

inline HexSystem hex_system(const std::vector<hexlat::Pt>& centers) {
    using namespace hexlat;
    require(!centers.empty(), errc::invalid_chain_spec, "no hexagons");
    {
        std::set<Pt> distinct(centers.begin(), centers.end());
        require(distinct.size() == centers.size(), errc::invalid_chain_spec, "repeated hexagon");
    }

    // Corner coordinates -> dense vertex ids, in sorted coordinate order.
    std::map<Pt, int> vertex;
    for (Pt c : centers)
        for (Pt d : kCorner) vertex.emplace(add(c, d), -1);
    int next = 0;
    for (auto& [pt, id] : vertex) id = next++;

    std::set<std::pair<int, int>> edge_set;
    for (Pt c : centers)
        for (int i = 0; i < 6; ++i) {
            int u = vertex.at(add(c, kCorner[i]));
            int v = vertex.at(add(c, kCorner[(i + 1) % 6]));
            edge_set.insert(std::minmax(u, v));
        }

    std::vector<Pt> coord_of(vertex.size());
    for (const auto& [pt, id] : vertex) coord_of[id] = pt;
    std::vector<std::vector<int>> rotations(vertex.size());
    for (auto [u, v] : edge_set) {
        rotations[u].push_back(v);
        rotations[v].push_back(u);
    }
    for (std::size_t v = 0; v < rotations.size(); ++v)
        std::sort(rotations[v].begin(), rotations[v].end(), [&](int a, int b) {
            Pt da{coord_of[a].first - coord_of[v].first, coord_of[a].second - coord_of[v].second};
            Pt db{coord_of[b].first - coord_of[v].first, coord_of[b].second - coord_of[v].second};
            return clockwise_less(da, db);
        });

    // Clockwise corner cycle of each hexagon; for a single hexagon its
    // reversal pins the outer face (both traced faces have length six).
    std::vector<std::vector<int>> hex_cycle;
    for (Pt c : centers) {
        std::vector<int> cyc;
        for (Pt d : kCorner) cyc.push_back(vertex.at(add(c, d)));
        hex_cycle.push_back(std::move(cyc));
    }
    std::optional<std::vector<int>> hint;
    if (centers.size() == 1) {
        hint = hex_cycle[0];
        std::reverse(hint->begin(), hint->end());
    }

    HexSystem sys;
    sys.graph = build_embedding(static_cast<int>(vertex.size()),
                                {edge_set.begin(), edge_set.end()}, rotations, hint);
    for (const auto& cyc : hex_cycle) {
        auto face = detail::match_face_cycle(sys.graph.faces, cyc);
        require(face.has_value() && sys.graph.faces[*face].is_finite, errc::invalid_chain_spec,
                "a hexagon is not a finite face (overlapping system)");
        sys.face_of_hexagon.push_back(*face);
    }
    return sys;
}

/// Catacondensed chain of n hexagons from a turn string over {L,R,S} of
/// length n-2 (first step is free; L/R/S turn the heading at each subsequent
/// fusion). Rejects chains that self-touch.
inline HexSystem gen_hex_chain(int n, const std::string& turns) {
    using namespace hexlat;
    require(n >= 1, errc::bad_parameter, "chain needs n >= 1");
    require(static_cast<int>(turns.size()) == std::max(0, n - 2), errc::invalid_chain_spec,
            "turn string must have length n-2");

    std::vector<Pt> centers{{0, 0}};
    int dir = 0;
    for (int i = 1; i < n; ++i) {
        if (i >= 2) {
            char t = turns[i - 2];
            if (t == 'L')
                dir = (dir + 5) % 6;
            else if (t == 'R')
                dir = (dir + 1) % 6;
            else
                require(t == 'S', errc::invalid_chain_spec, "turns must be over {L,R,S}");
        }
        centers.push_back(add(centers.back(), kCenterStep[dir]));
    }
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 2; j < centers.size(); ++j) {
            Pt d{centers[j].first - centers[i].first, centers[j].second - centers[i].second};
            for (Pt step : kCenterStep)
                require(d != step, errc::invalid_chain_spec,
                        "chain self-touches (non-consecutive hexagons adjacent)");
        }

    HexSystem sys = hex_system(centers);
    require(sys.graph.n == 4 * n + 2 && sys.graph.edge_count() == 5 * n + 1 &&
                sys.graph.finite_face_count() == n,
            errc::invalid_chain_spec, "chain self-overlaps");
    return sys;
}

/// Zigzag chain (alternating turns): the resonance graph is the Fibonacci
/// cube of dimension n.
inline HexSystem gen_fibonaccene(int n) {
    std::string turns;
    for (int i = 0; i < n - 2; ++i) turns.push_back(i % 2 == 0 ? 'L' : 'R');
    return gen_hex_chain(n, turns);
}

inline HexSystem gen_hexagon() { return gen_fibonaccene(1); }
inline HexSystem gen_naphthalene() { return gen_fibonaccene(2); }

/// Central hexagon surrounded by six.
inline HexSystem gen_coronene() {
    std::vector<hexlat::Pt> centers{{0, 0}};
    for (auto step : hexlat::kCenterStep) centers.push_back(step);
    return hex_system(centers);
}

/// Coronene with one petal removed: an arc of five fused hexagons around the
/// central one. Hexagon 0 is the central face; 1..5 follow the arc. Its
/// maximal resonant sets realize every maximal independent set of the face
/// conflict graph (a P5 plus a vertex adjacent to all).
inline HexSystem gen_coronene_arc() {
    std::vector<hexlat::Pt> centers{{0, 0}};
    for (int i = 0; i < 5; ++i) centers.push_back(hexlat::kCenterStep[i]);
    return hex_system(centers);
}

/// Two vertex-disjoint hexagons joined by two edges at opposite corners; the
/// inner dual is a path on three faces and the graph is peripherally
/// 2-colorable.
inline PlaneGraph gen_bridged_hexpair() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    for (int i = 0; i < 6; ++i) edges.emplace_back(6 + i, 6 + (i + 1) % 6);
    edges.emplace_back(0, 6);
    edges.emplace_back(3, 9);

    // Drawing: hexagon 0..5 on the left (0 east, going clockwise 1 southeast,
    // 2 southwest, 3 west, 4 northwest, 5 northeast), hexagon 6..11 on the
    // right (6 west, 7 southwest, 8 southeast, 9 east, 10 northeast, 11
    // northwest), straight bridge 0-6, and bridge 3-9 sweeping below.
    std::vector<std::vector<int>> rot(12);
    rot[0] = {5, 6, 1};
    rot[1] = {0, 2};
    rot[2] = {1, 3};
    rot[3] = {4, 2, 9};
    rot[4] = {5, 3};
    rot[5] = {0, 4};
    rot[6] = {0, 11, 7};
    rot[7] = {6, 8};
    rot[8] = {7, 9};
    rot[9] = {10, 3, 8};
    rot[10] = {11, 9};
    rot[11] = {6, 10};
    std::vector<int> outer{0, 5, 4, 3, 9, 10, 11, 6};
    return build_embedding(12, edges, rot, outer);
}

/// Hexagon with a pendant two-edge tail: the tail edge at the hexagon is
/// forbidden, giving a weakly elementary graph with a K2 elementary component.
inline PlaneGraph gen_hexagon_tail() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    edges.emplace_back(0, 6);
    edges.emplace_back(6, 7);
    std::vector<std::vector<int>> rot(8);
    rot[0] = {6, 1, 5};  // tail outside the hexagon
    rot[1] = {0, 2};
    rot[2] = {1, 3};
    rot[3] = {2, 4};
    rot[4] = {3, 5};
    rot[5] = {4, 0};
    rot[6] = {0, 7};
    rot[7] = {6};
    return build_embedding(8, edges, rot);
}

/// Gear graph with its planar embedding (hub inside the rim, three
/// quadrilateral faces).
inline PlaneGraph gen_gear_plane() {
    Graph g = gen_gear();
    std::vector<std::vector<int>> rot(7);
    rot[0] = {1, 3, 5};
    rot[1] = {2, 0, 6};
    rot[2] = {1, 3};
    rot[3] = {0, 2, 4};
    rot[4] = {5, 3};
    rot[5] = {6, 0, 4};
    rot[6] = {1, 5};
    return build_embedding(7, g.edges, rot);
}

/// Forest or single cycle embedded trivially (any rotation system of an
/// acyclic graph or of a cycle is planar); rotations in ascending neighbor
/// order.
inline PlaneGraph embed_tree_or_cycle(const Graph& g) {
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v) {
        rot[v] = g.adj[v];
        std::sort(rot[v].begin(), rot[v].end());
    }
    return build_embedding(g.n, g.edges, rot);
}

}  // namespace reslab
