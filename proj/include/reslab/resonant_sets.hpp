#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "reslab/cube.hpp"
#include "reslab/resonance.hpp"

namespace reslab {

/// A set of finite faces, sorted by face id.
using FaceSet = std::vector<int>;

namespace detail {

inline Graph remove_face_vertices(const PlaneGraph& g, const FaceSet& s, std::vector<int>* kept) {
    std::set<int> gone;
    for (int f : s)
        for (int v : g.face_vertices(f)) gone.insert(v);
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!gone.count(v)) keep.push_back(v);
    if (kept) *kept = keep;
    return induced_subgraph(g.skeleton(), keep);
}

inline bool faces_vertex_disjoint(const PlaneGraph& g, const FaceSet& s) {
    std::set<int> seen;
    for (int f : s)
        for (int v : g.face_vertices(f))
            if (!seen.insert(v).second) return false;
    return true;
}

}  // namespace detail

/// S (pairwise vertex-disjoint finite faces) is resonant iff G - S is empty or
/// has a perfect matching: any matching of the remainder extends by an
/// alternation of each face boundary independently.
inline bool is_resonant(const PlaneGraph& g, const FaceSet& s) {
    if (s.empty()) return false;
    for (int f : s)
        require(0 <= f && f < static_cast<int>(g.faces.size()) && g.faces[f].is_finite,
                errc::bad_input, "not a finite face id");
    if (!detail::faces_vertex_disjoint(g, s)) return false;
    std::vector<int> kept;
    Graph rest = detail::remove_face_vertices(g, s, &kept);
    return kept.empty() || has_perfect_matching(rest);
}

/// All nonempty resonant sets, ordered by size then lexicographically.
inline std::vector<FaceSet> enumerate_resonant_sets(const PlaneGraph& g) {
    require(count_perfect_matchings(g.skeleton(), 1) == 1, errc::no_perfect_matching,
            "graph has no perfect matching");
    std::vector<int> faces = g.finite_face_ids();
    std::vector<std::vector<int>> face_verts;
    for (int f : faces) face_verts.push_back(g.face_vertices(f));

    std::vector<FaceSet> out;
    FaceSet current;
    std::vector<char> used(g.n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!current.empty() && is_resonant(g, current)) out.push_back(current);
        for (std::size_t i = from; i < faces.size(); ++i) {
            bool disjoint = true;
            for (int v : face_verts[i])
                if (used[v]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (int v : face_verts[i]) used[v] = 1;
            current.push_back(faces[i]);
            rec(i + 1);
            current.pop_back();
            for (int v : face_verts[i]) used[v] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const FaceSet& a, const FaceSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline bool is_maximal_resonant(const PlaneGraph& g, const FaceSet& s) {
    require(is_resonant(g, s), errc::not_resonant, "not a resonant set");
    for (const Face& f : g.faces) {
        if (!f.is_finite || std::binary_search(s.begin(), s.end(), f.id)) continue;
        FaceSet bigger = s;
        bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), f.id), f.id);
        if (is_resonant(g, bigger)) return false;
    }
    return true;
}

/// Canonical: G - S is empty or has a unique perfect matching.
inline bool is_canonical_resonant(const PlaneGraph& g, const FaceSet& s) {
    require(is_resonant(g, s), errc::not_resonant, "not a resonant set");
    std::vector<int> kept;
    Graph rest = detail::remove_face_vertices(g, s, &kept);
    return kept.empty() || count_perfect_matchings(rest, 2) == 1;
}

/// Resonance graph with its verified partial-cube structure and the face label
/// carried by each Theta class (asserted consistent across the class).
struct ResonanceCube {
    ResonanceGraph rg;
    CubeLabelling labelling;
    std::vector<int> face_of_class;  // theta class/coordinate -> finite face id
};

inline ResonanceCube analyze_resonance(const PlaneGraph& g,
                                       const std::vector<Matching>& matchings) {
    ResonanceCube rc;
    rc.rg = build_resonance_graph(g, matchings);
    require(is_connected(rc.rg.graph), errc::precondition_failed,
            "resonance graph is disconnected (graph not weakly elementary)");
    ThetaResult theta = theta_classes(rc.rg.graph);
    require(theta.is_partial_cube, errc::not_partial_cube,
            "resonance graph is not a partial cube: " + theta.refutation);
    rc.labelling = *theta.labelling;
    for (const auto& cls : theta.classes) {
        int face = rc.rg.label[cls.front()];
        for (int e : cls)
            require(rc.rg.label[e] == face, errc::not_a_hypercube,
                    "theta class carries multiple face labels");
        rc.face_of_class.push_back(face);
    }
    return rc;
}

inline ResonanceCube analyze_resonance(const PlaneGraph& g) {
    return analyze_resonance(g, enumerate_perfect_matchings(g));
}

/// Face labels of the Theta classes of an induced hypercube, given by its
/// vertex set in the resonance graph.
inline FaceSet hypercube_face_labels(const ResonanceGraph& rg, const std::vector<int>& cube_vertices) {
    // Validate: the induced subgraph must be a hypercube. Use its own theta
    // structure: 2^k vertices, k-regular, and parallel classes consistent.
    std::vector<int> vs = cube_vertices;
    std::sort(vs.begin(), vs.end());
    require(!vs.empty() && std::unique(vs.begin(), vs.end()) == vs.end(), errc::not_a_hypercube,
            "duplicate vertices");
    Graph q = induced_subgraph(rg.graph, vs);
    int k = 0;
    while ((std::size_t{1} << k) < vs.size()) ++k;
    require((std::size_t{1} << k) == vs.size(), errc::not_a_hypercube,
            "vertex count is not a power of two");
    for (int v = 0; v < q.n; ++v)
        require(q.degree(v) == k, errc::not_a_hypercube, "not k-regular");
    ThetaResult theta = theta_classes(q);
    require(theta.is_partial_cube && theta.labelling->n_coords == k, errc::not_a_hypercube,
            "induced subgraph is not a hypercube");

    // Map q's edges back to rg edge labels.
    std::map<std::pair<int, int>, int> label_of;
    for (int e = 0; e < rg.graph.edge_count(); ++e)
        label_of[rg.graph.edges[e]] = rg.label[e];
    FaceSet out;
    for (const auto& cls : theta.classes) {
        int face = -1;
        for (int e : cls) {
            auto [u, v] = q.edges[e];
            auto it = label_of.find(std::minmax(vs[u], vs[v]));
            require(it != label_of.end(), errc::not_a_hypercube, "cube edge missing from graph");
            if (face < 0) face = it->second;
            require(face == it->second, errc::not_a_hypercube,
                    "theta class carries multiple face labels");
        }
        out.push_back(face);
    }
    std::sort(out.begin(), out.end());
    require(std::unique(out.begin(), out.end()) == out.end(), errc::not_a_hypercube,
            "repeated face label across theta classes");
    return out;
}

struct PreimageReport {
    FaceSet face_set;
    long hypercube_count = 0;  // induced |S|-cubes of R(G) with label set S
    long matching_count = 0;   // perfect matchings of G - S (1 when empty)
    bool passed = false;
};

/// Checks that the number of induced k-hypercubes labelled by S equals the
/// number of perfect matchings of G - S.
inline PreimageReport preimage_count_check(const PlaneGraph& g, const FaceSet& s) {
    require(is_resonant(g, s), errc::not_resonant, "not a resonant set");
    PreimageReport r;
    r.face_set = s;

    ResonanceCube rc = analyze_resonance(g);
    auto cubes = all_induced_hypercubes(rc.labelling.labels, rc.labelling.n_coords);
    for (const MaximalHypercube& q : cubes) {
        FaceSet labels;
        for (int c : q.theta_classes) labels.push_back(rc.face_of_class[c]);
        std::sort(labels.begin(), labels.end());
        if (labels == s) ++r.hypercube_count;
    }

    std::vector<int> kept;
    Graph rest = detail::remove_face_vertices(g, s, &kept);
    r.matching_count = kept.empty() ? 1 : count_perfect_matchings(rest, -1);
    r.passed = r.hypercube_count == r.matching_count;
    return r;
}

/// All simple cycles, each listed once as a vertex sequence starting at its
/// smallest vertex with the smaller neighbor second.
inline std::vector<std::vector<int>> enumerate_simple_cycles(const PlaneGraph& g,
                                                             std::size_t cycle_cap = 200000) {
    Graph sk = g.skeleton();
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);
    std::function<void(int, int)> dfs = [&](int root, int u) {
        for (int v : sk.adj[u]) {
            if (v == root && path.size() >= 3) {
                if (path[1] < path.back()) {
                    cycles.push_back(path);
                    require(cycles.size() <= cycle_cap, errc::size_limit_exceeded,
                            "cycle enumeration cap exceeded");
                }
                continue;
            }
            if (v <= root || on_path[v]) continue;
            on_path[v] = 1;
            path.push_back(v);
            dfs(root, v);
            path.pop_back();
            on_path[v] = 0;
        }
    };
    for (int r = 0; r < g.n; ++r) {
        path = {r};
        on_path.assign(g.n, 0);
        on_path[r] = 1;
        dfs(r, r);
    }
    return cycles;
}

struct NestedNicePair {
    std::vector<int> inner, outer;  // outer's interior strictly contains shared faces
};

/// Scans pairs of vertex-disjoint cycles whose union is nice (the rest of the
/// graph is empty or perfectly matchable) and reports those with non-disjoint
/// interiors. Empty result certifies the forcing-infinite-face side of the
/// equivalence.
inline std::vector<NestedNicePair> nested_nice_cycles_scan(const PlaneGraph& g) {
    require(g.n > 2, errc::bad_parameter, "graph must differ from K2");
    require(is_elementary(g), errc::not_elementary, "graph is not elementary");

    auto cycles = enumerate_simple_cycles(g);
    std::vector<std::set<int>> interiors;
    std::vector<std::set<int>> vertex_sets;
    for (const auto& c : cycles) {
        interiors.push_back(cycle_interior(g, c));
        vertex_sets.emplace_back(c.begin(), c.end());
    }

    std::vector<NestedNicePair> out;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            bool disjoint = true;
            for (int v : vertex_sets[i])
                if (vertex_sets[j].count(v)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;

            std::set<int> common;
            std::set_intersection(interiors[i].begin(), interiors[i].end(), interiors[j].begin(),
                                  interiors[j].end(), std::inserter(common, common.begin()));
            if (common.empty()) continue;

            std::set<int> gone(vertex_sets[i]);
            gone.insert(vertex_sets[j].begin(), vertex_sets[j].end());
            std::vector<int> keep;
            for (int v = 0; v < g.n; ++v)
                if (!gone.count(v)) keep.push_back(v);
            if (!keep.empty() && !has_perfect_matching(induced_subgraph(g.skeleton(), keep)))
                continue;

            NestedNicePair pair;
            if (interiors[i].size() < interiors[j].size()) {
                pair.inner = cycles[i];
                pair.outer = cycles[j];
            } else {
                pair.inner = cycles[j];
                pair.outer = cycles[i];
            }
            out.push_back(std::move(pair));
        }
    return out;
}

struct Theorem35Report {
    bool elementary = false;
    bool outer_forcing = false;
    bool hypothesis_met = false;  // elementary, forcing infinite face, != K2
    std::vector<FaceSet> maximal_resonant;
    std::vector<FaceSet> canonical_resonant;
    std::vector<FaceSet> maximal_cube_labels;  // label set per maximal hypercube
    std::vector<int> maximal_cube_dims;
    bool maximal_equals_canonical = false;
    bool bijection_holds = false;
    bool passed = false;
    std::string note;
};

/// Checks both claims: maximal resonant sets = canonical resonant sets, and
/// the face-label map restricted to maximal hypercubes is a bijection onto the
/// maximal resonant sets. When the forcing-outer-face hypothesis fails the
/// checks still run and the report is marked "outside theorem hypothesis".
inline Theorem35Report verify_theorem_35(const PlaneGraph& g) {
    Theorem35Report r;
    std::vector<Matching> ms = enumerate_perfect_matchings(g);
    require(!ms.empty(), errc::no_perfect_matching, "graph has no perfect matching");
    r.elementary = is_elementary(g, ms);
    r.outer_forcing = is_forcing_face(g, g.outer_face());
    r.hypothesis_met = r.elementary && r.outer_forcing && g.n > 2;
    if (!r.hypothesis_met) r.note = "outside theorem hypothesis";

    auto all = enumerate_resonant_sets(g);
    for (const FaceSet& s : all) {
        if (is_maximal_resonant(g, s)) r.maximal_resonant.push_back(s);
        if (is_canonical_resonant(g, s)) r.canonical_resonant.push_back(s);
    }
    r.maximal_equals_canonical = r.maximal_resonant == r.canonical_resonant;

    ResonanceCube rc = analyze_resonance(g, ms);
    for (const MaximalHypercube& q :
         maximal_hypercubes(rc.labelling.labels, rc.labelling.n_coords)) {
        FaceSet labels;
        for (int c : q.theta_classes) labels.push_back(rc.face_of_class[c]);
        std::sort(labels.begin(), labels.end());
        r.maximal_cube_labels.push_back(labels);
        r.maximal_cube_dims.push_back(q.dim);
    }

    std::vector<FaceSet> sorted_labels = r.maximal_cube_labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    bool injective = std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) ==
                     sorted_labels.end();
    std::vector<FaceSet> sorted_maximal = r.maximal_resonant;
    std::sort(sorted_maximal.begin(), sorted_maximal.end());
    r.bijection_holds = injective && sorted_labels == sorted_maximal;

    r.passed = r.hypothesis_met && r.maximal_equals_canonical && r.bijection_holds;
    return r;
}

}  // namespace reslab
