#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "reslab/graph.hpp"

namespace reslab {

/// Backtracking graph isomorphism for small unlabelled comparisons. Degree
/// sequence prefilter, then maps a's vertices in descending-degree order.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<int> order(a.n);
    for (int i = 0; i < a.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return da[x] > da[y]; });

    std::vector<int> map_ab(a.n, -1), used_b(a.n, 0);
    std::function<bool(int)> place = [&](int idx) {
        if (idx == a.n) return true;
        int u = order[idx];
        for (int v = 0; v < b.n; ++v) {
            if (used_b[v] || db[v] != da[u]) continue;
            bool ok = true;
            for (int w : a.adj[u]) {
                if (map_ab[w] < 0) continue;
                if (!b.has_edge(v, map_ab[w])) {
                    ok = false;
                    break;
                }
            }
            // non-edges must map to non-edges as well
            if (ok)
                for (int j = 0; j < idx && ok; ++j) {
                    int w = order[j];
                    if (!a.has_edge(u, w) && b.has_edge(v, map_ab[w])) ok = false;
                }
            if (!ok) continue;
            map_ab[u] = v;
            used_b[v] = 1;
            if (place(idx + 1)) return true;
            map_ab[u] = -1;
            used_b[v] = 0;
        }
        return false;
    };
    return place(0);
}

}  // namespace reslab
