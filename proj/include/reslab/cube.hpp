#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "reslab/graph.hpp"

namespace reslab {

/// Binary coordinates of a partial cube. Coordinate i corresponds to the i-th
/// Theta class (classes ordered by smallest contained edge id); vertex 0 is
/// labelled all-zeros.
struct CubeLabelling {
    int n_coords = 0;
    std::vector<std::uint64_t> labels;
    std::vector<int> theta_class_of_coordinate;
};

struct ThetaResult {
    std::vector<std::vector<int>> classes;  // edge ids, classes ordered by min edge id
    bool is_partial_cube = false;
    std::optional<CubeLabelling> labelling;
    std::string refutation;
};

/// Djokovic-Winkler relation from all-pairs distances; classes are its
/// transitive closure. The partial-cube verdict demands Theta transitive,
/// every class separating the graph into exactly two sides, and the induced
/// labelling isometric.
inline ThetaResult theta_classes(const Graph& h) {
    require(is_connected(h), errc::disconnected, "theta relation needs a connected graph");
    ThetaResult res;
    int m = h.edge_count();
    auto dist = all_pairs_distances(h);

    auto related = [&](int e, int f) {
        auto [x1, x2] = h.edges[e];
        auto [y1, y2] = h.edges[f];
        return dist[x1][y1] + dist[x2][y2] != dist[x1][y2] + dist[x2][y1];
    };

    std::vector<int> parent(m);
    for (int e = 0; e < m; ++e) parent[e] = e;
    std::function<int(int)> find = [&](int e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    };
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (related(e, f)) parent[find(e)] = find(f);

    std::map<int, std::vector<int>> by_root;
    for (int e = 0; e < m; ++e) by_root[find(e)].push_back(e);
    for (auto& [root, edges] : by_root) res.classes.push_back(edges);
    std::sort(res.classes.begin(), res.classes.end());

    for (const auto& cls : res.classes)
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (!related(cls[a], cls[b])) {
                    res.refutation = "theta is not transitive";
                    return res;
                }

    int k = static_cast<int>(res.classes.size());
    if (k > 64) {
        res.refutation = "more than 64 theta classes";
        return res;
    }
    CubeLabelling lab;
    lab.n_coords = k;
    lab.labels.assign(h.n, 0);
    for (int c = 0; c < k; ++c) {
        lab.theta_class_of_coordinate.push_back(c);
        std::vector<char> removed(m, 0);
        for (int e : res.classes[c]) removed[e] = 1;
        Graph cut(h.n);
        for (int e = 0; e < m; ++e)
            if (!removed[e]) cut.add_edge(h.edges[e].first, h.edges[e].second);
        std::vector<int> comp = component_ids(cut);
        if (*std::max_element(comp.begin(), comp.end()) != 1) {
            res.refutation = "removing a theta class does not split the graph into two sides";
            return res;
        }
        for (int e : res.classes[c])
            if (comp[h.edges[e].first] == comp[h.edges[e].second]) {
                res.refutation = "a theta class edge does not cross its two sides";
                return res;
            }
        for (int v = 0; v < h.n; ++v)
            if (comp[v] != comp[0]) lab.labels[v] |= std::uint64_t{1} << c;
    }
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (__builtin_popcountll(lab.labels[u] ^ lab.labels[v]) != dist[u][v]) {
                res.refutation = "labelling is not isometric";
                return res;
            }
    res.is_partial_cube = true;
    res.labelling = std::move(lab);
    return res;
}

struct DaisyResult {
    bool is_daisy = false;
    int base_vertex = -1;
    CubeLabelling labelling;  // daisy-oriented: base relabelled to all-zeros
    std::vector<std::uint64_t> maximal_vertices;
    std::string refutation;
};

/// Daisy-cube recognition: for each base vertex in id order, XOR-relabel so
/// the base reads all-zeros and test downward closure of the label set.
inline DaisyResult is_daisy_cube(const Graph& h) {
    DaisyResult r;
    ThetaResult theta = theta_classes(h);
    if (!theta.is_partial_cube) {
        r.refutation = "not a partial cube: " + theta.refutation;
        return r;
    }
    const CubeLabelling& lab = *theta.labelling;
    std::unordered_set<std::uint64_t> raw(lab.labels.begin(), lab.labels.end());

    for (int b = 0; b < h.n; ++b) {
        std::uint64_t mask = lab.labels[b];
        bool closed = true;
        for (std::uint64_t l : raw) {
            std::uint64_t v = l ^ mask;
            std::uint64_t bits = v;
            while (bits && closed) {
                std::uint64_t low = bits & (~bits + 1);
                closed = raw.count((v ^ low) ^ mask) > 0;
                bits ^= low;
            }
            if (!closed) break;
        }
        if (!closed) continue;

        r.is_daisy = true;
        r.base_vertex = b;
        r.labelling = lab;
        for (auto& l : r.labelling.labels) l ^= mask;
        std::unordered_set<std::uint64_t> set(r.labelling.labels.begin(),
                                              r.labelling.labels.end());
        for (std::uint64_t v : r.labelling.labels) {
            bool maximal = true;
            for (int c = 0; c < lab.n_coords && maximal; ++c)
                if (!((v >> c) & 1)) maximal = !set.count(v | (std::uint64_t{1} << c));
            if (maximal) r.maximal_vertices.push_back(v);
        }
        std::sort(r.maximal_vertices.begin(), r.maximal_vertices.end());
        return r;
    }
    r.refutation = "no base vertex yields a downward closed label set";
    return r;
}

struct MedianResult {
    bool is_median = false;
    std::array<int, 3> witness{-1, -1, -1};  // triple without a unique median
};

inline MedianResult is_median_graph(const Graph& h) {
    require(is_connected(h), errc::disconnected, "median test needs a connected graph");
    auto dist = all_pairs_distances(h);
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            for (int w = v + 1; w < h.n; ++w) {
                int medians = 0;
                for (int x = 0; x < h.n; ++x)
                    if (dist[u][x] + dist[x][v] == dist[u][v] &&
                        dist[u][x] + dist[x][w] == dist[u][w] &&
                        dist[v][x] + dist[x][w] == dist[v][w])
                        ++medians;
                if (medians != 1) return {false, {u, v, w}};
            }
    return {true, {-1, -1, -1}};
}

/// Induced hypercube of a partial cube: the corners min_corner | s over all
/// subsets s of `coords`.
struct MaximalHypercube {
    std::vector<int> vertices;  // ascending vertex ids
    int dim = 0;
    std::uint64_t coords = 0;           // coordinate set as bitmask
    std::uint64_t min_corner_label = 0;
    std::vector<int> theta_classes;     // = coordinate indices of `coords`
};

namespace detail {

struct CubeScan {
    const std::vector<std::uint64_t>& labels;
    std::unordered_map<std::uint64_t, int> vertex_of;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> found;  // (min corner, coords)
    bool maximal_only = true;

    explicit CubeScan(const std::vector<std::uint64_t>& labels_) : labels(labels_) {
        for (int v = 0; v < static_cast<int>(labels.size()); ++v) vertex_of.emplace(labels[v], v);
    }

    bool addable(std::uint64_t base, const std::vector<std::uint64_t>& corners, int c) const {
        if ((base >> c) & 1) return false;
        std::uint64_t bit = std::uint64_t{1} << c;
        for (std::uint64_t l : corners)
            if (!vertex_of.count(l | bit)) return false;
        return true;
    }

    // Bron-Kerbosch style enumeration of maximal coordinate sets growable from
    // base; validity (all corners present) is hereditary.
    void extend(std::uint64_t base, std::uint64_t cube, std::vector<std::uint64_t>& corners,
                std::vector<int> cand, std::vector<int> excluded) {
        if (cand.empty() && excluded.empty()) {
            if (cube) found.emplace_back(base, cube);
            return;
        }
        std::vector<int> cand_left = cand;
        for (int c : cand) {
            std::uint64_t bit = std::uint64_t{1} << c;
            std::vector<std::uint64_t> next_corners = corners;
            for (std::uint64_t l : corners) next_corners.push_back(l | bit);
            std::vector<int> next_cand, next_excl;
            for (int p : cand_left)
                if (p != c && addable(base, next_corners, p)) next_cand.push_back(p);
            for (int x : excluded)
                if (addable(base, next_corners, x)) next_excl.push_back(x);
            extend(base, cube | bit, next_corners, std::move(next_cand), std::move(next_excl));
            cand_left.erase(std::find(cand_left.begin(), cand_left.end(), c));
            excluded.push_back(c);
        }
    }

    // Every nonempty coordinate set (not only maximal): ascending growth.
    void grow_all(std::uint64_t base, std::uint64_t cube, std::vector<std::uint64_t>& corners,
                  int n_coords, int start) {
        if (cube) found.emplace_back(base, cube);
        for (int c = start; c < n_coords; ++c) {
            if (!addable(base, corners, c)) continue;
            std::uint64_t bit = std::uint64_t{1} << c;
            std::size_t old = corners.size();
            for (std::size_t i = 0; i < old; ++i) corners.push_back(corners[i] | bit);
            grow_all(base, cube | bit, corners, n_coords, c + 1);
            corners.resize(old);
        }
    }
};

inline std::vector<MaximalHypercube> cubes_to_result(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
    const std::unordered_map<std::uint64_t, int>& vertex_of) {
    std::vector<MaximalHypercube> out;
    for (auto [base, cube] : pairs) {
        MaximalHypercube q;
        q.min_corner_label = base;
        q.coords = cube;
        q.dim = __builtin_popcountll(cube);
        for (int c = 0; c < 64; ++c)
            if ((cube >> c) & 1) q.theta_classes.push_back(c);
        std::uint64_t s = cube;
        // iterate subsets of cube
        std::uint64_t sub = 0;
        while (true) {
            q.vertices.push_back(vertex_of.at(base | sub));
            if (sub == s) break;
            sub = (sub - s) & s;
        }
        std::sort(q.vertices.begin(), q.vertices.end());
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace detail

/// Maximal nontrivial induced hypercubes of a partial cube given by a verified
/// labelling; sorted by (dimension descending, smallest vertex id).
inline std::vector<MaximalHypercube> maximal_hypercubes(const std::vector<std::uint64_t>& labels,
                                                        int n_coords) {
    detail::CubeScan scan(labels);
    for (int b = 0; b < static_cast<int>(labels.size()); ++b) {
        std::uint64_t base = labels[b];
        std::vector<int> cand;
        std::vector<std::uint64_t> corners{base};
        for (int c = 0; c < n_coords; ++c)
            if (scan.addable(base, corners, c)) cand.push_back(c);
        scan.extend(base, 0, corners, std::move(cand), {});
    }
    // Cross-base containment filter: cube (m1,C1) lies inside (m2,C2) iff
    // C1 subset of C2, m2 subset of m1, and m1\m2 inside C2.
    auto contained = [](std::pair<std::uint64_t, std::uint64_t> a,
                        std::pair<std::uint64_t, std::uint64_t> b) {
        return (a.second & ~b.second) == 0 && (b.first & ~a.first) == 0 &&
               ((a.first & ~b.first) & ~b.second) == 0;
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keep;
    for (const auto& a : scan.found) {
        bool maximal = true;
        for (const auto& b : scan.found)
            if (a != b && contained(a, b)) {
                maximal = false;
                break;
            }
        if (maximal) keep.push_back(a);
    }
    auto out = detail::cubes_to_result(keep, scan.vertex_of);
    std::sort(out.begin(), out.end(), [](const MaximalHypercube& a, const MaximalHypercube& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

inline std::vector<MaximalHypercube> maximal_hypercubes(const Graph& h) {
    ThetaResult t = theta_classes(h);
    require(t.is_partial_cube, errc::not_partial_cube, t.refutation);
    return maximal_hypercubes(t.labelling->labels, t.labelling->n_coords);
}

/// All nontrivial induced hypercubes (each once, keyed by min corner and
/// coordinate set).
inline std::vector<MaximalHypercube> all_induced_hypercubes(const std::vector<std::uint64_t>& labels,
                                                            int n_coords) {
    detail::CubeScan scan(labels);
    for (std::uint64_t base : labels) {
        std::vector<std::uint64_t> corners{base};
        scan.grow_all(base, 0, corners, n_coords, 0);
    }
    return detail::cubes_to_result(scan.found, scan.vertex_of);
}

/// Graph together with binary-string vertex identities (independent sets,
/// cliques, or hypercube coordinates).
struct LabelledGraph {
    Graph graph;
    int n_coords = 0;
    std::vector<std::uint64_t> labels;  // ascending

    int vertex_of(std::uint64_t label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        require(it != labels.end() && *it == label, errc::bad_input, "label not present");
        return static_cast<int>(it - labels.begin());
    }
};

namespace detail {

/// Graph on the given label set with edges between labels at Hamming distance
/// one. Labels must be distinct; they are sorted ascending.
inline LabelledGraph hamming_one_graph(std::vector<std::uint64_t> labels, int n_coords) {
    std::sort(labels.begin(), labels.end());
    LabelledGraph out;
    out.n_coords = n_coords;
    out.labels = std::move(labels);
    out.graph = Graph(static_cast<int>(out.labels.size()));
    std::unordered_map<std::uint64_t, int> index;
    for (int i = 0; i < out.graph.n; ++i) index.emplace(out.labels[i], i);
    for (int i = 0; i < out.graph.n; ++i) {
        std::uint64_t bits = out.labels[i];
        while (bits) {
            std::uint64_t low = bits & (~bits + 1);
            auto it = index.find(out.labels[i] ^ low);
            if (it != index.end()) out.graph.add_edge(it->second, i);
            bits ^= low;
        }
    }
    return out;
}

inline void enumerate_independent_masks(const Graph& h, std::vector<std::uint64_t>& out) {
    require(h.n <= 32, errc::size_limit_exceeded, "independent-set enumeration guard (32 vertices)");
    std::vector<std::uint64_t> nbr(h.n, 0);
    for (auto [u, v] : h.edges) {
        nbr[u] |= std::uint64_t{1} << v;
        nbr[v] |= std::uint64_t{1} << u;
    }
    out.push_back(0);
    // grow sets by largest allowed vertex; each set produced once
    std::vector<std::pair<std::uint64_t, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [mask, from] = stack.back();
        stack.pop_back();
        for (int v = from; v < h.n; ++v) {
            if (nbr[v] & mask) continue;
            std::uint64_t next = mask | (std::uint64_t{1} << v);
            out.push_back(next);
            stack.push_back({next, v + 1});
        }
    }
}

}  // namespace detail

/// All independent sets of h as characteristic-vector masks, ascending,
/// including the empty set.
inline std::vector<std::uint64_t> all_independent_masks(const Graph& h) {
    std::vector<std::uint64_t> masks;
    detail::enumerate_independent_masks(h, masks);
    std::sort(masks.begin(), masks.end());
    return masks;
}

/// Daisy cube on the downward closure of the maximal independent sets of h
/// (equivalently: all independent sets of h as characteristic vectors, with
/// edges between vectors at Hamming distance one). Coordinate j = vertex j.
inline LabelledGraph build_DI(const Graph& h) {
    return detail::hamming_one_graph(all_independent_masks(h), h.n);
}

/// Simplex graph: all cliques of h (including the empty one), adjacent when
/// they differ in exactly one vertex.
inline LabelledGraph simplex_graph(const Graph& h) {
    require(h.n <= 32, errc::size_limit_exceeded, "clique enumeration guard (32 vertices)");
    std::vector<std::uint64_t> nbr(h.n, 0);
    for (auto [u, v] : h.edges) {
        nbr[u] |= std::uint64_t{1} << v;
        nbr[v] |= std::uint64_t{1} << u;
    }
    std::vector<std::uint64_t> cliques{0};
    std::vector<std::pair<std::uint64_t, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [mask, from] = stack.back();
        stack.pop_back();
        for (int v = from; v < h.n; ++v) {
            if ((nbr[v] & mask) != mask) continue;  // v must see every clique member
            std::uint64_t next = mask | (std::uint64_t{1} << v);
            cliques.push_back(next);
            stack.push_back({next, v + 1});
        }
    }
    return detail::hamming_one_graph(std::move(cliques), h.n);
}

inline LabelledGraph hypercube(int n) {
    require(n >= 0 && n <= 20, errc::bad_parameter, "hypercube dimension out of range");
    std::vector<std::uint64_t> labels(std::size_t{1} << n);
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    return detail::hamming_one_graph(std::move(labels), n);
}

/// Fibonacci cube: binary strings of length n without two consecutive 1s.
inline LabelledGraph fibonacci_cube(int n) {
    require(n >= 1 && n <= 24, errc::bad_parameter, "fibonacci cube dimension out of range");
    std::vector<std::uint64_t> labels;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if ((m & (m >> 1)) == 0) labels.push_back(m);
    return detail::hamming_one_graph(std::move(labels), n);
}

/// Lucas cube: like the Fibonacci cube but also forbidding 1 in both the
/// first and last position (cyclically no consecutive 1s).
inline LabelledGraph lucas_cube(int n) {
    require(n >= 1 && n <= 24, errc::bad_parameter, "lucas cube dimension out of range");
    std::vector<std::uint64_t> labels;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if ((m & (m >> 1)) != 0) continue;
        if (n >= 2 && (m & 1) && (m >> (n - 1))) continue;
        if (n == 1 && m != 0) continue;
        labels.push_back(m);
    }
    return detail::hamming_one_graph(std::move(labels), n);
}

inline long fibonacci(int k) {
    long a = 0, b = 1;  // F0, F1
    for (int i = 0; i < k; ++i) {
        long t = a + b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace reslab
