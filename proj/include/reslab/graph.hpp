#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "reslab/core.hpp"

namespace reslab {

/// Simple undirected graph on dense vertex ids 0..n-1. Edge ids are positions
/// in `edges`; add_edge keeps endpoints sorted but does not reorder the list,
/// so construction order defines edge identity.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices) {}

    int add_edge(int u, int v) {
        require(u != v, errc::bad_input, "loop edge");
        require(0 <= u && u < n && 0 <= v && v < n, errc::bad_input, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        adj[u].push_back(v);
        adj[v].push_back(u);
        return static_cast<int>(edges.size()) - 1;
    }

    bool has_edge(int u, int v) const {
        for (int w : adj[u])
            if (w == v) return true;
        return false;
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Edge id for (u,v), or -1.
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (int i = 0; i < edge_count(); ++i)
            if (edges[i] == std::pair<int, int>(u, v)) return i;
        return -1;
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
        Graph g(n);
        for (auto [u, v] : es) g.add_edge(u, v);
        return g;
    }
};

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.n);
    for (int v = 0; v < g.n; ++v) d.push_back(bfs_distances(g, v));
    return d;
}

/// Component id per vertex, ids assigned in order of smallest contained vertex.
inline std::vector<int> component_ids(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int next = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u])
                if (comp[v] < 0) {
                    comp[v] = next;
                    q.push(v);
                }
        }
        ++next;
    }
    return comp;
}

inline int component_count(const Graph& g) {
    auto c = component_ids(g);
    return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

inline bool is_connected(const Graph& g) { return g.n <= 1 || component_count(g) == 1; }

/// Proper 2-coloring (0/1) with the smallest vertex id of each component
/// colored 0; empty result if an odd cycle exists.
inline std::optional<std::vector<int>> bipartite_coloring(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

inline bool is_forest(const Graph& g) {
    return g.edge_count() == g.n - component_count(g);
}

inline Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

/// Induced subgraph on `keep` (ascending); result vertex i corresponds to keep[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> index(g.n, -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
    Graph h(static_cast<int>(keep.size()));
    for (auto [u, v] : g.edges)
        if (index[u] >= 0 && index[v] >= 0) h.add_edge(index[u], index[v]);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (auto [u, v] : a.edges) g.add_edge(u, v);
    for (auto [u, v] : b.edges) g.add_edge(a.n + u, a.n + v);
    return g;
}

}  // namespace reslab
