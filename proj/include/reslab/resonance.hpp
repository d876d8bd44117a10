#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "reslab/matching.hpp"

namespace reslab {

/// Resonance graph R(G): vertices are perfect matchings (enumeration order),
/// an edge joins M1, M2 iff M1 xor M2 is the boundary edge set of exactly one
/// finite face, which becomes the edge's face-label.
struct ResonanceGraph {
    Graph graph;
    std::vector<Matching> matchings;
    std::vector<int> label;  // per graph edge id: finite face id of the source graph
    int n_faces = 0;         // finite face count of the source graph

    int vertex_of(const Matching& m) const {
        auto it = std::lower_bound(matchings.begin(), matchings.end(), m);
        require(it != matchings.end() && *it == m, errc::bad_input, "matching not a vertex");
        return static_cast<int>(it - matchings.begin());
    }
};

inline ResonanceGraph build_resonance_graph(const PlaneGraph& g,
                                            const std::vector<Matching>& matchings) {
    require(!matchings.empty(), errc::no_perfect_matching, "graph has no perfect matching");
    ResonanceGraph rg;
    rg.matchings = matchings;
    rg.n_faces = g.finite_face_count();
    rg.graph = Graph(static_cast<int>(matchings.size()));

    std::unordered_map<EdgeSet, int, EdgeSetHash> face_by_boundary;
    for (const Face& f : g.faces)
        if (f.is_finite) face_by_boundary.emplace(f.edge_set(g), f.id);

    for (int i = 0; i < rg.graph.n; ++i)
        for (int j = i + 1; j < rg.graph.n; ++j) {
            auto it = face_by_boundary.find(matchings[i] ^ matchings[j]);
            if (it == face_by_boundary.end()) continue;
            rg.graph.add_edge(i, j);
            rg.label.push_back(it->second);
        }
    return rg;
}

inline ResonanceGraph build_resonance_graph(const PlaneGraph& g) {
    return build_resonance_graph(g, enumerate_perfect_matchings(g));
}

struct ConnectivityReport {
    bool resonance_connected = false;
    bool weakly_elementary = false;
    bool passed = false;  // the two sides agree
};

/// Both sides of the connectivity equivalence, computed independently.
inline ConnectivityReport check_connectivity_theorem(const PlaneGraph& g) {
    std::vector<Matching> ms = enumerate_perfect_matchings(g);
    require(!ms.empty(), errc::no_perfect_matching, "graph has no perfect matching");
    ConnectivityReport r;
    r.resonance_connected = is_connected(build_resonance_graph(g, ms).graph);
    r.weakly_elementary = is_weakly_elementary(g, ms);
    r.passed = r.resonance_connected == r.weakly_elementary;
    return r;
}

struct ProductReport {
    std::size_t resonance_vertices = 0;
    std::vector<std::size_t> factor_vertices;
    bool vertex_count_matches = false;
    bool isomorphic = false;
    bool passed = false;
};

/// Verifies R(G) = box product of the R(G_i) over elementary components, via
/// the natural coordinate map (matching restricted to each component).
inline ProductReport check_product_structure(const PlaneGraph& g) {
    std::vector<Matching> ms = enumerate_perfect_matchings(g);
    require(!ms.empty(), errc::no_perfect_matching, "graph has no perfect matching");
    require(is_weakly_elementary(g, ms), errc::not_weakly_elementary,
            "product structure requires a weakly elementary graph");

    std::vector<SubPlane> comps = elementary_components(g, ms);
    ResonanceGraph rg = build_resonance_graph(g, ms);

    ProductReport r;
    r.resonance_vertices = ms.size();

    std::vector<ResonanceGraph> factors;
    std::vector<std::unordered_map<EdgeSet, int, EdgeSetHash>> index;
    std::size_t product_count = 1;
    for (const SubPlane& sp : comps) {
        factors.push_back(build_resonance_graph(sp.graph));
        r.factor_vertices.push_back(factors.back().matchings.size());
        product_count *= factors.back().matchings.size();
        index.emplace_back();
        for (std::size_t i = 0; i < factors.back().matchings.size(); ++i)
            index.back().emplace(factors.back().matchings[i], static_cast<int>(i));
    }
    r.vertex_count_matches = product_count == ms.size();

    // Coordinates of each matching of G: its restriction to each component,
    // re-indexed into that component's edge id space.
    auto coordinates = [&](const Matching& m) {
        std::vector<int> coord(comps.size());
        for (std::size_t c = 0; c < comps.size(); ++c) {
            EdgeSet local;
            for (int e = 0; e < comps[c].graph.edge_count(); ++e)
                if (m.test(comps[c].orig_edge[e])) local.set(e);
            auto it = index[c].find(local);
            if (it == index[c].end()) return std::vector<int>{};
            coord[c] = it->second;
        }
        return coord;
    };

    std::vector<std::vector<int>> coords(ms.size());
    std::set<std::vector<int>> distinct;
    bool ok = r.vertex_count_matches;
    for (std::size_t i = 0; i < ms.size() && ok; ++i) {
        coords[i] = coordinates(ms[i]);
        ok = !coords[i].empty() && distinct.insert(coords[i]).second;
    }

    if (ok) {
        // Adjacent iff exactly one coordinate differs by a factor edge.
        std::size_t expected_edges = 0;
        for (std::size_t c = 0; c < comps.size(); ++c)
            expected_edges += factors[c].graph.edge_count() * (product_count / r.factor_vertices[c]);
        ok = rg.graph.edge_count() == static_cast<int>(expected_edges);
        for (const auto& [i, j] : rg.graph.edges) {
            if (!ok) break;
            int differing = -1;
            for (std::size_t c = 0; c < comps.size(); ++c)
                if (coords[i][c] != coords[j][c]) {
                    if (differing >= 0) {
                        ok = false;
                        break;
                    }
                    differing = static_cast<int>(c);
                }
            ok = ok && differing >= 0 &&
                 factors[differing].graph.has_edge(coords[i][differing], coords[j][differing]);
        }
    }
    r.isomorphic = ok;
    r.passed = r.vertex_count_matches && r.isomorphic;
    return r;
}

/// Height of the matching lattice: distance between the extremal matchings in
/// the resonance graph.
inline int height(const PlaneGraph& g) {
    std::vector<Matching> ms = enumerate_perfect_matchings(g);
    require(!ms.empty(), errc::no_perfect_matching, "graph has no perfect matching");
    ResonanceGraph rg = build_resonance_graph(g, ms);
    ExtremalPair ex = extremal_matchings(g, ms);
    std::vector<int> dist = bfs_distances(rg.graph, rg.vertex_of(ex.bottom));
    int d = dist[rg.vertex_of(ex.top)];
    require(d >= 0, errc::not_weakly_elementary, "resonance graph is disconnected");
    return d;
}

}  // namespace reslab
