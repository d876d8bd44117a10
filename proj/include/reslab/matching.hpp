#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "reslab/plane_graph.hpp"

namespace reslab {

/// A perfect matching as a canonical bitmask over edge ids.
using Matching = EdgeSet;

namespace detail {

struct MatchCtx {
    int n;
    std::vector<std::vector<std::pair<int, int>>> inc;  // (neighbor, edge id), neighbor ascending

    static MatchCtx of(int n, const std::vector<std::pair<int, int>>& edges) {
        MatchCtx c;
        c.n = n;
        c.inc.resize(n);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            auto [u, v] = edges[e];
            c.inc[u].emplace_back(v, e);
            c.inc[v].emplace_back(u, e);
        }
        for (auto& lst : c.inc) std::sort(lst.begin(), lst.end());
        return c;
    }

    // Backtracks on the least-id uncovered vertex. `limit` < 0 collects into
    // `out`; otherwise stops once `limit` matchings have been counted.
    long run(std::vector<Matching>* out, long limit) const {
        std::vector<char> covered(n, 0);
        Matching current;
        long found = 0;
        rec(covered, current, 0, out, limit, found);
        return found;
    }

  private:
    void rec(std::vector<char>& covered, Matching& current, int from, std::vector<Matching>* out,
             long limit, long& found) const {
        if (limit >= 0 && found >= limit) return;
        int u = from;
        while (u < n && covered[u]) ++u;
        if (u == n) {
            ++found;
            if (out) out->push_back(current);
            return;
        }
        covered[u] = 1;
        for (auto [v, e] : inc[u]) {
            if (covered[v]) continue;
            covered[v] = 1;
            current.set(e);
            rec(covered, current, u + 1, out, limit, found);
            current.reset(e);
            covered[v] = 0;
            if (limit >= 0 && found >= limit) break;
        }
        covered[u] = 0;
    }
};

inline void check_edge_guard(int edge_count) {
    require(edge_count <= edge_guard(), errc::size_limit_exceeded,
            "edge count " + std::to_string(edge_count) + " exceeds guard " +
                std::to_string(edge_guard()) + " (override with RESLAB_EDGE_GUARD)");
}

}  // namespace detail

/// All perfect matchings, deterministically ordered by bitmask value.
inline std::vector<Matching> enumerate_perfect_matchings(int n,
                                                         const std::vector<std::pair<int, int>>& edges) {
    detail::check_edge_guard(static_cast<int>(edges.size()));
    std::vector<Matching> out;
    if (n % 2 == 0) detail::MatchCtx::of(n, edges).run(&out, -1);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Matching> enumerate_perfect_matchings(const PlaneGraph& g) {
    return enumerate_perfect_matchings(g.n, g.edges);
}

inline std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
    return enumerate_perfect_matchings(g.n, g.edges);
}

/// Number of perfect matchings, counting at most `limit` (early exit).
inline long count_perfect_matchings(const Graph& g, long limit) {
    detail::check_edge_guard(g.edge_count());
    if (g.n % 2 != 0) return 0;
    return detail::MatchCtx::of(g.n, g.edges).run(nullptr, limit);
}

inline bool has_perfect_matching(const Graph& g) {
    return g.n == 0 || count_perfect_matchings(g, 1) == 1;
}

struct EdgeClassification {
    EdgeSet allowed;  // bit per edge id; clear bit within range = forbidden
    int edge_count = 0;

    bool is_allowed(int e) const { return allowed.test(e); }
    bool all_allowed() const { return allowed.count() == edge_count; }
};

/// Allowed = contained in >= 1 perfect matching; union over the enumeration.
inline EdgeClassification classify_edges(const PlaneGraph& g,
                                         const std::vector<Matching>& matchings) {
    require(!matchings.empty(), errc::no_perfect_matching, "graph has no perfect matching");
    EdgeClassification c;
    c.edge_count = g.edge_count();
    for (const Matching& m : matchings) c.allowed = c.allowed | m;
    return c;
}

inline EdgeClassification classify_edges(const PlaneGraph& g) {
    return classify_edges(g, enumerate_perfect_matchings(g));
}

/// Independent definitional path: edge e is allowed iff G minus its endpoints
/// has a perfect matching. Used as a cross-check oracle against classify_edges.
inline bool edge_allowed_direct(const Graph& g, int e) {
    auto [a, b] = g.edges[e];
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (v != a && v != b) keep.push_back(v);
    return has_perfect_matching(induced_subgraph(g, keep));
}

inline bool is_elementary(const PlaneGraph& g, const std::vector<Matching>& matchings) {
    if (!is_connected(g.skeleton())) return false;
    return classify_edges(g, matchings).all_allowed();
}

inline bool is_elementary(const PlaneGraph& g) {
    return is_elementary(g, enumerate_perfect_matchings(g));
}

/// Embedded subgraph extracted from a PlaneGraph (component or edge subset),
/// with maps back to the original vertex/edge ids.
struct SubPlane {
    PlaneGraph graph;
    std::vector<int> orig_vertex;  // new vertex id -> original
    std::vector<int> orig_edge;    // new edge id -> original
};

inline std::vector<SubPlane> split_components(const PlaneGraph& g) {
    Graph sk = g.skeleton();
    std::vector<int> comp = component_ids(sk);
    int comps = g.n == 0 ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<SubPlane> out(comps);
    std::vector<int> newid(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        newid[v] = static_cast<int>(out[comp[v]].orig_vertex.size());
        out[comp[v]].orig_vertex.push_back(v);
    }
    for (int c = 0; c < comps; ++c) {
        const auto& verts = out[c].orig_vertex;
        std::vector<std::pair<int, int>> edge_list;
        for (auto [u, v] : g.edges)
            if (comp[u] == c) edge_list.emplace_back(newid[u], newid[v]);
        std::vector<std::vector<int>> rotations(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (int u : g.rot[verts[i]]) rotations[i].push_back(newid[u]);
        out[c].graph = build_embedding(static_cast<int>(verts.size()), edge_list, rotations);
        for (auto [u, v] : out[c].graph.edges)
            out[c].orig_edge.push_back(g.edge_id(verts[u], verts[v]));
    }
    // keep each component's outer face aligned with the original choice
    for (int of : g.outer) {
        const Face& f = g.faces[of];
        int c = comp[f.boundary[0]];
        detail::adopt_outer_faces(out[c].graph,
                                  {{newid[f.boundary[0]], newid[f.boundary[1 % f.length()]]}});
    }
    return out;
}

/// Connected components left after deleting all forbidden edges, each with its
/// inherited embedding.
inline std::vector<SubPlane> elementary_components(const PlaneGraph& g,
                                                   const std::vector<Matching>& matchings) {
    EdgeClassification cls = classify_edges(g, matchings);
    PlaneGraph allowed = restrict_to_edges(g, cls.allowed);
    std::vector<SubPlane> comps = split_components(allowed);
    // orig_edge from split_components refers to the restricted graph; compose
    // back into g's edge ids (vertex ids are unchanged by the restriction).
    for (SubPlane& sp : comps)
        for (int e = 0; e < sp.graph.edge_count(); ++e)
            sp.orig_edge[e] = g.edge_id(sp.orig_vertex[sp.graph.edges[e].first],
                                        sp.orig_vertex[sp.graph.edges[e].second]);
    return comps;
}

inline std::vector<SubPlane> elementary_components(const PlaneGraph& g) {
    return elementary_components(g, enumerate_perfect_matchings(g));
}

/// Weakly elementary: deleting forbidden edges produces no new finite face.
/// Re-traces the allowed-edge subgraph with inherited rotations and compares
/// finite-face boundaries (as endpoint-pair sets) against the finite faces of
/// g whose boundaries survive.
inline bool is_weakly_elementary(const PlaneGraph& g, const std::vector<Matching>& matchings) {
    EdgeClassification cls = classify_edges(g, matchings);

    using Boundary = std::set<std::pair<int, int>>;
    auto boundary_pairs = [](const Face& f) {
        Boundary b;
        for (int i = 0; i < f.length(); ++i) {
            int u = f.boundary[i], v = f.boundary[(i + 1) % f.length()];
            b.insert(std::minmax(u, v));
        }
        return b;
    };

    std::set<Boundary> expected;
    for (const Face& f : g.faces) {
        if (!f.is_finite) continue;
        if (cls.allowed.contains(f.edge_set(g))) expected.insert(boundary_pairs(f));
    }

    PlaneGraph restricted = restrict_to_edges(g, cls.allowed);
    std::set<Boundary> actual;
    for (const Face& f : restricted.faces)
        if (f.is_finite) actual.insert(boundary_pairs(f));

    return actual == expected;
}

inline bool is_weakly_elementary(const PlaneGraph& g) {
    return is_weakly_elementary(g, enumerate_perfect_matchings(g));
}

/// Forcing face: deleting the boundary vertices of `face_id` leaves an empty
/// graph or one with a unique perfect matching.
inline bool is_forcing_face(const PlaneGraph& g, int face_id) {
    std::vector<int> del = g.face_vertices(face_id);
    std::vector<int> keep;
    std::set<int> gone(del.begin(), del.end());
    for (int v = 0; v < g.n; ++v)
        if (!gone.count(v)) keep.push_back(v);
    if (keep.empty()) return true;
    return count_perfect_matchings(induced_subgraph(g.skeleton(), keep), 2) == 1;
}

enum class CycleOrientation { Proper, Improper, NotAlternating };

/// Classifies a simple cycle against a matching: walk the cycle with its
/// interior to the right (the combinatorial clockwise direction) and test
/// whether matched edges all run white -> black (Proper) or black -> white
/// (Improper).
inline CycleOrientation alternating_orientation(const PlaneGraph& g, const Matching& m,
                                                const std::vector<int>& cycle) {
    detail::validate_cycle(g, cycle);
    std::set<int> interior = cycle_interior(g, cycle);

    std::vector<int> walk = cycle;
    if (!interior.count(g.face_right(walk[0], walk[1]))) {
        std::reverse(walk.begin(), walk.end());
        require(interior.count(g.face_right(walk[0], walk[1])) > 0, errc::not_a_cycle,
                "cycle has no interior side");
    }

    int k = static_cast<int>(walk.size());
    std::vector<char> in_m(k);
    for (int i = 0; i < k; ++i) in_m[i] = m.test(g.edge_id(walk[i], walk[(i + 1) % k]));
    for (int i = 0; i < k; ++i)
        if (in_m[i] == in_m[(i + 1) % k]) return CycleOrientation::NotAlternating;

    bool proper = true, improper = true;
    for (int i = 0; i < k; ++i) {
        if (!in_m[i]) continue;
        int u = walk[i], v = walk[(i + 1) % k];
        if (g.color[u] == 0 && g.color[v] == 1)
            improper = false;
        else
            proper = false;
    }
    require(proper != improper, errc::not_a_cycle, "inconsistent matched-edge orientation");
    return proper ? CycleOrientation::Proper : CycleOrientation::Improper;
}

/// Decomposes a symmetric difference of two matchings (every vertex has degree
/// 0 or 2) into vertex-disjoint cycles.
inline std::vector<std::vector<int>> symmetric_difference_cycles(const PlaneGraph& g,
                                                                 const EdgeSet& diff) {
    std::vector<std::vector<int>> inc(g.n);
    diff.for_each([&](int e) {
        inc[g.edges[e].first].push_back(g.edges[e].second);
        inc[g.edges[e].second].push_back(g.edges[e].first);
    });
    std::vector<char> used(g.n, 0);
    std::vector<std::vector<int>> cycles;
    for (int s = 0; s < g.n; ++s) {
        if (used[s] || inc[s].empty()) continue;
        std::vector<int> cyc;
        int prev = -1, cur = s;
        do {
            cyc.push_back(cur);
            used[cur] = 1;
            int nxt = (inc[cur][0] != prev || inc[cur].size() == 1) ? inc[cur][0] : inc[cur][1];
            prev = cur;
            cur = nxt;
        } while (cur != s);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

struct ExtremalPair {
    Matching bottom;  // no proper alternating cycle
    Matching top;     // no improper alternating cycle
};

/// Scans all matchings using the symmetric-difference characterization: the
/// alternating cycles of M are exactly the cycles of M xor M' over all M'.
inline ExtremalPair extremal_matchings(const PlaneGraph& g,
                                       const std::vector<Matching>& matchings) {
    require(!matchings.empty(), errc::no_perfect_matching, "graph has no perfect matching");
    std::optional<Matching> bottom, top;
    for (const Matching& m : matchings) {
        bool any_proper = false, any_improper = false;
        for (const Matching& other : matchings) {
            if (other == m) continue;
            for (const auto& cyc : symmetric_difference_cycles(g, m ^ other)) {
                CycleOrientation o = alternating_orientation(g, m, cyc);
                if (o == CycleOrientation::Proper) any_proper = true;
                if (o == CycleOrientation::Improper) any_improper = true;
            }
            if (any_proper && any_improper) break;
        }
        if (!any_proper) {
            require(!bottom.has_value(), errc::not_unique, "two bottom extremal matchings");
            bottom = m;
        }
        if (!any_improper) {
            require(!top.has_value(), errc::not_unique, "two top extremal matchings");
            top = m;
        }
    }
    require(bottom.has_value(), errc::not_unique, "no bottom extremal matching");
    require(top.has_value(), errc::not_unique, "no top extremal matching");
    return {*bottom, *top};
}

inline ExtremalPair extremal_matchings(const PlaneGraph& g) {
    return extremal_matchings(g, enumerate_perfect_matchings(g));
}

struct P2CResult {
    bool ok = false;
    std::string refutation;
    std::vector<int> periphery_deg3;  // witness: degree-3 vertices in periphery order
};

/// Peripherally 2-colorable test: all degrees in {2,3}, degree-3 vertices on
/// the periphery, and their colors alternate along the periphery. Alternation
/// is invariant under traversal direction and color swap, so a single cyclic
/// check covers both orientations and both proper colorings.
inline P2CResult is_peripherally_2_colorable(const PlaneGraph& g,
                                             const std::vector<Matching>& matchings) {
    require(g.n > 2, errc::bad_parameter, "graph must differ from K2");
    require(is_elementary(g, matchings), errc::not_elementary, "graph is not elementary");

    P2CResult r;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2 && g.degree(v) != 3) {
            r.refutation = "vertex " + std::to_string(v) + " has degree " +
                           std::to_string(g.degree(v)) + ", outside {2,3}";
            return r;
        }

    std::vector<int> periphery = g.periphery_clockwise();
    std::set<int> on_periphery(periphery.begin(), periphery.end());
    require(on_periphery.size() == periphery.size(), errc::not_elementary,
            "periphery is not a simple cycle");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 3 && !on_periphery.count(v)) {
            r.refutation = "degree-3 vertex " + std::to_string(v) + " is interior";
            return r;
        }

    for (int v : periphery)
        if (g.degree(v) == 3) r.periphery_deg3.push_back(v);
    int k = static_cast<int>(r.periphery_deg3.size());
    for (int i = 0; i < k; ++i) {
        int a = r.periphery_deg3[i], b = r.periphery_deg3[(i + 1) % k];
        if (g.color[a] == g.color[b]) {
            r.refutation = "degree-3 vertices " + std::to_string(a) + " and " + std::to_string(b) +
                           " are consecutive on the periphery with equal color";
            return r;
        }
    }
    r.ok = true;
    return r;
}

inline P2CResult is_peripherally_2_colorable(const PlaneGraph& g) {
    return is_peripherally_2_colorable(g, enumerate_perfect_matchings(g));
}

}  // namespace reslab
