// Shared randomized property checks (Catch2 assertions inside), used by both
// the property suite and the acceptance suite.
#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reslab/generators.hpp"
#include "reslab/mis.hpp"
#include "reslab/resonant_sets.hpp"

namespace reslab::props {

inline HexSystem random_chain(std::mt19937_64& rng) {
    const char alphabet[] = {'L', 'R', 'S'};
    for (;;) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::string turns;
        for (int i = 0; i < n - 2; ++i) turns.push_back(alphabet[rng() % 3]);
        try {
            return gen_hex_chain(n, turns);
        } catch (const error&) {
            // self-touching turn string; resample
        }
    }
}

inline Graph random_tree(std::mt19937_64& rng, int max_n) {
    int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<int> seq(std::max(0, n - 2));
    for (int& s : seq) s = static_cast<int>(rng() % n);
    return prufer_decode(seq, n);
}

/// 4-cycles of resonance graphs: antipodal edges share a face label, incident
/// edges carry vertex-disjoint faces.
inline void check_four_cycle_labels(int cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < cases; ++trial) {
        HexSystem sys = random_chain(rng);
        ResonanceGraph rg = build_resonance_graph(sys.graph);
        std::map<std::pair<int, int>, int> label_of;
        for (int e = 0; e < rg.graph.edge_count(); ++e) label_of[rg.graph.edges[e]] = rg.label[e];
        auto lbl = [&](int a, int b) { return label_of.at(std::minmax(a, b)); };
        for (int a = 0; a < rg.graph.n; ++a)
            for (int b : rg.graph.adj[a])
                for (int c : rg.graph.adj[b])
                    for (int d : rg.graph.adj[c]) {
                        if (a >= c || b >= d || !rg.graph.has_edge(d, a)) continue;
                        REQUIRE(lbl(a, b) == lbl(c, d));
                        REQUIRE(lbl(b, c) == lbl(d, a));
                        auto va = sys.graph.face_vertices(lbl(a, b));
                        auto vb = sys.graph.face_vertices(lbl(b, c));
                        std::vector<int> common;
                        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                              std::back_inserter(common));
                        REQUIRE(common.empty());
                    }
    }
}

/// Labellings accepted by the theta machinery embed isometrically.
inline void check_theta_isometry(int cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int accepted = 0;
    for (int trial = 0; trial < cases; ++trial) {
        Graph g;
        if (trial % 2 == 0) {
            g = random_tree(rng, 8);
        } else {
            int n = 2 + static_cast<int>(rng() % 6);
            g = Graph(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 3 == 0) g.add_edge(u, v);
            if (!is_connected(g)) continue;
        }
        ThetaResult t = theta_classes(g);
        if (!t.is_partial_cube) continue;
        ++accepted;
        auto dist = all_pairs_distances(g);
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v)
                REQUIRE(__builtin_popcountll(t.labelling->labels[u] ^ t.labelling->labels[v]) ==
                        dist[u][v]);
        int edges_in_classes = 0;
        for (const auto& cls : t.classes) edges_in_classes += static_cast<int>(cls.size());
        REQUIRE(edges_in_classes == g.edge_count());
    }
    REQUIRE(accepted >= cases / 4);  // trees alone guarantee plenty of partial cubes
}

/// Daisy certificates: downward closure reproduces the label set, the maximal
/// vertices form an antichain and equal the MIS characteristic vectors.
inline void check_daisy_certificates(int cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < cases; ++trial) {
        Graph t = random_tree(rng, 8);
        LabelledGraph di = build_DI(t);
        DaisyResult r = is_daisy_cube(di.graph);
        REQUIRE(r.is_daisy);
        std::set<std::uint64_t> closure;
        for (std::uint64_t m : r.maximal_vertices)
            for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
                closure.insert(sub);
                if (sub == 0) break;
            }
        std::set<std::uint64_t> labels(r.labelling.labels.begin(), r.labelling.labels.end());
        REQUIRE(closure == labels);
        for (std::uint64_t a : r.maximal_vertices)
            for (std::uint64_t b : r.maximal_vertices)
                if (a != b) REQUIRE((a & ~b) != 0);
        std::set<std::uint64_t> mis_chi;
        for (const IndepSet& s : enumerate_mis(t)) {
            std::uint64_t chi = 0;
            for (int v : s) chi |= std::uint64_t{1} << v;
            mis_chi.insert(chi);
        }
        std::set<std::uint64_t> maximal(r.maximal_vertices.begin(), r.maximal_vertices.end());
        REQUIRE(maximal == mis_chi);
    }
}

/// Well-definedness of the face-label map: the label set of every induced
/// hypercube of R(G) is a resonant set of matching cardinality.
inline void check_face_label_map(int cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < cases; ++trial) {
        HexSystem sys = random_chain(rng);
        ResonanceCube rc = analyze_resonance(sys.graph);
        auto cubes = all_induced_hypercubes(rc.labelling.labels, rc.labelling.n_coords);
        for (const MaximalHypercube& q : cubes) {
            FaceSet labels;
            for (int c : q.theta_classes) labels.push_back(rc.face_of_class[c]);
            std::sort(labels.begin(), labels.end());
            REQUIRE(static_cast<int>(labels.size()) == q.dim);
            REQUIRE(is_resonant(sys.graph, labels));
        }
    }
}

}  // namespace reslab::props
