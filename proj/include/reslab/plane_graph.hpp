#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "reslab/graph.hpp"

namespace reslab {

struct Face {
    int id = -1;
    /// Directed closed walk v0, v1, ..., v_{k-1} (edge v_{k-1} -> v0 implied).
    /// The face region lies to the RIGHT of each directed edge of the walk.
    std::vector<int> boundary;
    bool is_finite = true;

    int length() const { return static_cast<int>(boundary.size()); }

    EdgeSet edge_set(const struct PlaneGraph& g) const;
};

/// Combinatorial planar embedding of a bipartite graph: per-vertex clockwise
/// rotation of neighbors, faces derived by tracing, one outer face per
/// connected component, proper 2-coloring (0 = white, 1 = black).
///
/// Tracing convention: the successor of directed edge (u,v) is (v,w) where w
/// immediately precedes u in the clockwise rotation at v. With clockwise
/// rotations this walks every face with its region to the right, i.e. finite
/// faces are traversed clockwise and outer faces counterclockwise.
struct PlaneGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;        // lexicographically sorted; id = index
    std::vector<std::vector<int>> rot;             // clockwise neighbor order
    std::vector<Face> faces;
    std::vector<int> outer;                        // outer face ids, one per component
    std::vector<int> color;                        // 0 white / 1 black
    std::vector<int> comp;                         // component id per vertex

    std::unordered_map<std::int64_t, int> edge_index_;
    std::vector<int> face_right_;                  // directed edge -> traced face id

    int edge_count() const { return static_cast<int>(edges.size()); }

    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = edge_index_.find(std::int64_t(u) * n + v);
        return it == edge_index_.end() ? -1 : it->second;
    }

    /// Index of directed edge (u,v) into face_right_.
    int dir_index(int u, int v) const {
        int e = edge_id(u, v);
        require(e >= 0, errc::bad_input, "no such edge");
        return 2 * e + (u < v ? 0 : 1);
    }

    /// Traced face whose region lies to the right of directed edge (u,v).
    int face_right(int u, int v) const { return face_right_[dir_index(u, v)]; }

    int degree(int v) const { return static_cast<int>(rot[v].size()); }

    bool is_outer(int face_id) const { return !faces[face_id].is_finite; }

    std::vector<int> finite_face_ids() const {
        std::vector<int> ids;
        for (const Face& f : faces)
            if (f.is_finite) ids.push_back(f.id);
        return ids;
    }

    int finite_face_count() const { return static_cast<int>(finite_face_ids().size()); }

    /// The unique outer face; connected graphs only.
    int outer_face() const {
        require(outer.size() == 1, errc::disconnected, "graph has multiple outer faces");
        return outer[0];
    }

    /// Vertices of the face boundary as a set.
    std::vector<int> face_vertices(int face_id) const {
        std::vector<int> vs = faces[face_id].boundary;
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    /// Periphery of a connected graph walked clockwise (reverse of the traced
    /// outer walk, whose region lies to the right).
    std::vector<int> periphery_clockwise() const {
        std::vector<int> walk = faces[outer_face()].boundary;
        std::reverse(walk.begin(), walk.end());
        return walk;
    }

    Graph skeleton() const {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
};

inline EdgeSet Face::edge_set(const PlaneGraph& g) const {
    EdgeSet s;
    for (int i = 0; i < length(); ++i)
        s.set(g.edge_id(boundary[i], boundary[(i + 1) % length()]));
    return s;
}

namespace detail {

inline std::vector<Face> trace_faces(const PlaneGraph& g, std::vector<int>& face_right) {
    // pos[v][u] = index of u in rot[v]
    std::vector<std::unordered_map<int, int>> pos(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int i = 0; i < g.degree(v); ++i) pos[v][g.rot[v][i]] = i;

    face_right.assign(2 * g.edge_count(), -1);
    std::vector<Face> faces;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int d = 0; d < 2; ++d) {
            if (face_right[2 * e + d] >= 0) continue;
            int u = d == 0 ? g.edges[e].first : g.edges[e].second;
            int v = d == 0 ? g.edges[e].second : g.edges[e].first;
            Face f;
            f.id = static_cast<int>(faces.size());
            int su = u, sv = v;
            do {
                face_right[g.dir_index(u, v)] = f.id;
                f.boundary.push_back(u);
                int i = pos[v].at(u);
                int w = g.rot[v][(i - 1 + g.degree(v)) % g.degree(v)];
                u = v;
                v = w;
            } while (!(u == su && v == sv));
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

/// Matches `hint` (a directed cyclic vertex sequence) against a traced face.
inline std::optional<int> match_face_cycle(const std::vector<Face>& faces,
                                           const std::vector<int>& hint) {
    for (const Face& f : faces) {
        if (f.boundary.size() != hint.size()) continue;
        int k = f.length();
        for (int shift = 0; shift < k; ++shift) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = f.boundary[(shift + i) % k] == hint[i];
            if (ok) return f.id;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Builds a validated embedding from a rotation system.
///
/// Outer faces: one per connected component — the hinted face when the hint
/// lies in that component, otherwise the face of maximum boundary length with
/// ties broken by smallest minimum vertex id, then by smallest face id.
inline PlaneGraph build_embedding(int n, std::vector<std::pair<int, int>> edge_list,
                                  std::vector<std::vector<int>> rotations,
                                  std::optional<std::vector<int>> outer_hint = std::nullopt) {
    require(n >= 1, errc::bad_input, "empty vertex set");
    require(static_cast<int>(rotations.size()) == n, errc::bad_rotation,
            "rotation list size differs from vertex count");

    PlaneGraph g;
    g.n = n;
    for (auto& [u, v] : edge_list) {
        require(0 <= u && u < n && 0 <= v && v < n, errc::bad_input, "edge endpoint out of range");
        require(u != v, errc::bad_input, "loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    require(std::adjacent_find(edge_list.begin(), edge_list.end()) == edge_list.end(),
            errc::bad_input, "duplicate edge");
    g.edges = std::move(edge_list);
    for (int e = 0; e < g.edge_count(); ++e)
        g.edge_index_[std::int64_t(g.edges[e].first) * n + g.edges[e].second] = e;

    // Each undirected edge must appear in exactly two rotations, once per side.
    g.rot = std::move(rotations);
    std::vector<int> seen(g.edge_count(), 0);
    for (int v = 0; v < n; ++v) {
        std::set<int> local;
        for (int u : g.rot[v]) {
            require(u != v, errc::bad_rotation, "vertex listed in its own rotation");
            require(local.insert(u).second, errc::bad_rotation,
                    "neighbor repeated in rotation of vertex " + std::to_string(v));
            int e = g.edge_id(u, v);
            require(e >= 0, errc::bad_rotation,
                    "rotation of vertex " + std::to_string(v) + " lists non-neighbor " +
                        std::to_string(u));
            ++seen[e];
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        require(seen[e] == 2, errc::bad_rotation, "edge missing from a rotation");

    g.faces = detail::trace_faces(g, g.face_right_);

    Graph sk = g.skeleton();
    g.comp = component_ids(sk);
    int comps = g.n == 0 ? 0 : 1 + *std::max_element(g.comp.begin(), g.comp.end());

    // Euler check per component (single-vertex components carry one empty face
    // conceptually; they have no edges, so tracing yields none — treat V=1,
    // E=0, F=1 directly).
    std::vector<int> vc(comps, 0), ec(comps, 0), fc(comps, 0);
    for (int v = 0; v < n; ++v) ++vc[g.comp[v]];
    for (auto [u, v] : g.edges) ++ec[g.comp[u]];
    for (const Face& f : g.faces) ++fc[g.comp[f.boundary[0]]];
    for (int c = 0; c < comps; ++c) {
        if (vc[c] == 1 && ec[c] == 0) continue;
        require(vc[c] - ec[c] + fc[c] == 2, errc::non_planar_embedding,
                "Euler check failed for component " + std::to_string(c));
    }

    auto coloring = bipartite_coloring(sk);
    require(coloring.has_value(), errc::not_bipartite, "odd cycle found");
    g.color = std::move(*coloring);

    // Outer face selection.
    std::optional<int> hinted;
    if (outer_hint) {
        hinted = detail::match_face_cycle(g.faces, *outer_hint);
        require(hinted.has_value(), errc::bad_input, "outer face hint matches no traced face");
    }
    std::vector<int> best(comps, -1);
    for (const Face& f : g.faces) {
        int c = g.comp[f.boundary[0]];
        if (hinted && g.comp[g.faces[*hinted].boundary[0]] == c) {
            best[c] = *hinted;
            continue;
        }
        if (best[c] < 0) {
            best[c] = f.id;
            continue;
        }
        const Face& b = g.faces[best[c]];
        int fmin = *std::min_element(f.boundary.begin(), f.boundary.end());
        int bmin = *std::min_element(b.boundary.begin(), b.boundary.end());
        if (std::tuple(-f.length(), fmin, f.id) < std::tuple(-b.length(), bmin, b.id))
            best[c] = f.id;
    }
    for (int c = 0; c < comps; ++c)
        if (best[c] >= 0) {
            g.faces[best[c]].is_finite = false;
            g.outer.push_back(best[c]);
        }
    std::sort(g.outer.begin(), g.outer.end());

    return g;
}

/// Inner dual: one vertex per finite face (in ascending face id order), edges
/// between finite faces sharing at least one graph edge.
struct InnerDual {
    Graph graph;
    std::vector<int> face_of;              // dual vertex -> finite face id
    std::unordered_map<int, int> dual_of;  // finite face id -> dual vertex
};

inline InnerDual inner_dual(const PlaneGraph& g) {
    InnerDual d;
    d.face_of = g.finite_face_ids();
    d.graph = Graph(static_cast<int>(d.face_of.size()));
    for (int i = 0; i < d.graph.n; ++i) d.dual_of[d.face_of[i]] = i;
    std::set<std::pair<int, int>> added;
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.face_right_[2 * e], b = g.face_right_[2 * e + 1];
        if (a == b) continue;
        if (g.is_outer(a) || g.is_outer(b)) continue;
        int x = d.dual_of.at(a), y = d.dual_of.at(b);
        if (x > y) std::swap(x, y);
        if (added.insert({x, y}).second) d.graph.add_edge(x, y);
    }
    return d;
}

namespace detail {

inline void validate_cycle(const PlaneGraph& g, const std::vector<int>& c) {
    require(c.size() >= 3, errc::not_a_cycle, "cycle too short");
    std::set<int> distinct(c.begin(), c.end());
    require(distinct.size() == c.size(), errc::not_a_cycle, "repeated vertex in cycle");
    for (std::size_t i = 0; i < c.size(); ++i)
        require(g.edge_id(c[i], c[(i + 1) % c.size()]) >= 0, errc::not_a_cycle,
                "cycle uses a non-edge");
}

}  // namespace detail

/// Finite faces on the bounded side of simple cycle `c`, computed by dual
/// reachability: delete the dual connections crossing edges of c, then take
/// every finite face unreachable from the outer faces.
inline std::set<int> cycle_interior(const PlaneGraph& g, const std::vector<int>& c) {
    detail::validate_cycle(g, c);
    EdgeSet on_cycle;
    for (std::size_t i = 0; i < c.size(); ++i)
        on_cycle.set(g.edge_id(c[i], c[(i + 1) % c.size()]));

    std::vector<std::vector<int>> dual_adj(g.faces.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (on_cycle.test(e)) continue;
        int a = g.face_right_[2 * e], b = g.face_right_[2 * e + 1];
        if (a == b) continue;
        dual_adj[a].push_back(b);
        dual_adj[b].push_back(a);
    }
    std::vector<char> reached(g.faces.size(), 0);
    std::vector<int> stack(g.outer.begin(), g.outer.end());
    for (int f : stack) reached[f] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int h : dual_adj[f])
            if (!reached[h]) {
                reached[h] = 1;
                stack.push_back(h);
            }
    }
    std::set<int> interior;
    for (const Face& f : g.faces)
        if (f.is_finite && !reached[f.id]) interior.insert(f.id);
    return interior;
}

namespace detail {

/// Re-marks outer faces of `res` so that any face carrying one of the given
/// directed edges (which bounded an outer region before a restriction or
/// union) is outer for its component; components not touched keep the default
/// choice. Deleting edges only merges faces, so the face right of a surviving
/// outer-walk edge is exactly the grown outer region.
inline void adopt_outer_faces(PlaneGraph& res,
                              const std::vector<std::pair<int, int>>& outer_dir_edges) {
    std::vector<int> face_comp(res.faces.size());
    for (const Face& f : res.faces) face_comp[f.id] = res.comp[f.boundary[0]];

    int comps = 0;
    for (const Face& f : res.faces) comps = std::max(comps, face_comp[f.id] + 1);
    std::vector<int> choice(comps, -1);
    for (int of : res.outer) choice[face_comp[of]] = of;
    for (auto [u, v] : outer_dir_edges) {
        int f = res.face_right(u, v);
        choice[face_comp[f]] = f;
    }
    for (Face& f : res.faces) f.is_finite = true;
    res.outer.clear();
    for (int c = 0; c < comps; ++c)
        if (choice[c] >= 0) {
            res.faces[choice[c]].is_finite = false;
            res.outer.push_back(choice[c]);
        }
    std::sort(res.outer.begin(), res.outer.end());
}

}  // namespace detail

/// Restriction of the embedding to an edge subset: same vertices, rotations
/// filtered to kept neighbors, faces re-traced. Each component's outer face
/// follows the original outer region where any of its boundary edges survive;
/// fully interior components fall back to the default rule.
inline PlaneGraph restrict_to_edges(const PlaneGraph& g, const EdgeSet& keep) {
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < g.edge_count(); ++e)
        if (keep.test(e)) kept.push_back(g.edges[e]);
    std::vector<std::vector<int>> rotations(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.rot[v])
            if (keep.test(g.edge_id(u, v))) rotations[v].push_back(u);
    PlaneGraph res = build_embedding(g.n, kept, rotations);

    std::vector<std::pair<int, int>> outer_edges;
    for (int of : g.outer) {
        const Face& f = g.faces[of];
        for (int i = 0; i < f.length(); ++i) {
            int u = f.boundary[i], v = f.boundary[(i + 1) % f.length()];
            if (keep.test(g.edge_id(u, v))) outer_edges.emplace_back(u, v);
        }
    }
    detail::adopt_outer_faces(res, outer_edges);
    return res;
}

/// Side-by-side disjoint union; vertices of b are shifted by a.n. Outer face
/// choices of both operands are preserved.
inline PlaneGraph plane_disjoint_union(const PlaneGraph& a, const PlaneGraph& b) {
    std::vector<std::pair<int, int>> edge_list = a.edges;
    for (auto [u, v] : b.edges) edge_list.emplace_back(a.n + u, a.n + v);
    std::vector<std::vector<int>> rotations = a.rot;
    for (const auto& r : b.rot) {
        std::vector<int> shifted;
        for (int u : r) shifted.push_back(a.n + u);
        rotations.push_back(std::move(shifted));
    }
    PlaneGraph res = build_embedding(a.n + b.n, edge_list, rotations);

    std::vector<std::pair<int, int>> outer_edges;
    for (int of : a.outer) {
        const Face& f = a.faces[of];
        outer_edges.emplace_back(f.boundary[0], f.boundary[1 % f.length()]);
    }
    for (int of : b.outer) {
        const Face& f = b.faces[of];
        outer_edges.emplace_back(a.n + f.boundary[0], a.n + f.boundary[1 % f.length()]);
    }
    detail::adopt_outer_faces(res, outer_edges);
    return res;
}

}  // namespace reslab
