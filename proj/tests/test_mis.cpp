#include <catch2/catch_amalgamated.hpp>

#include "reslab/generators.hpp"
#include "reslab/mis.hpp"

using namespace reslab;

TEST_CASE("maximal independent set enumeration") {
    SECTION("star K1,3: center or all leaves") {
        auto mis = enumerate_mis(gen_star(3));
        REQUIRE(mis == std::vector<IndepSet>{{0}, {1, 2, 3}});
    }
    SECTION("P5 has four") { REQUIRE(enumerate_mis(gen_path(5)).size() == 4); }
    SECTION("C4 has two") {
        auto mis = enumerate_mis(gen_cycle(4));
        REQUIRE(mis == std::vector<IndepSet>{{0, 2}, {1, 3}});
    }
    SECTION("every reported set is independent and maximal") {
        Graph g = gen_gear();
        for (const IndepSet& s : enumerate_mis(g)) {
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    REQUIRE_FALSE(g.has_edge(s[i], s[j]));
            for (int v = 0; v < g.n; ++v) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                bool blocked = false;
                for (int u : s)
                    if (g.has_edge(u, v)) blocked = true;
                REQUIRE(blocked);
            }
        }
    }
}

TEST_CASE("tree MIS DP agrees with enumeration") {
    REQUIRE(count_mis_tree(gen_path(1)) == 1);
    REQUIRE(count_mis_tree(gen_path(2)) == 2);
    REQUIRE(count_mis_tree(gen_path(4)) == 3);
    for_each_labeled_tree(7, [](const Graph& t) {
        REQUIRE(count_mis_tree(t) == static_cast<long>(enumerate_mis(t).size()));
    });
}

TEST_CASE("independent set enumeration includes the empty set") {
    REQUIRE(all_independent_masks(gen_path(2)).size() == 3);
    REQUIRE(all_independent_masks(gen_cycle(4)).size() == 7);
    REQUIRE(all_independent_masks(Graph(1)).size() == 2);
}

TEST_CASE("tree classification") {
    SECTION("named cases") {
        REQUIRE(classify_tree(Graph(1)).tag == TreeClassTag::OneVertex);
        REQUIRE(classify_tree(gen_path(2)).tag == TreeClassTag::Star);
        REQUIRE(classify_tree(gen_star(3)).tag == TreeClassTag::Star);

        TreeClass p4 = classify_tree(gen_path(4));
        REQUIRE(p4.tag == TreeClassTag::Bistar);
        REQUIRE(p4.params == std::vector<int>{1, 1});
        REQUIRE(p4.predicted_mis == 3);

        TreeClass p5 = classify_tree(gen_path(5));
        REQUIRE(p5.tag == TreeClassTag::S3);
        REQUIRE(p5.predicted_mis == 4);

        TreeClass p6 = classify_tree(gen_path(6));
        REQUIRE(p6.tag == TreeClassTag::S4);
        REQUIRE(p6.params == std::vector<int>{1, 1});
        REQUIRE(p6.predicted_mis == 5);

        TreeClass spider = classify_tree(gen_s3pqr(1, 1, 1));
        REQUIRE(spider.tag == TreeClassTag::S3pqr);
        REQUIRE(spider.predicted_mis == 5);

        REQUIRE(classify_tree(gen_bistar(2, 5)).params == std::vector<int>{2, 5});
        REQUIRE(classify_tree(gen_s3(2, 3)).tag == TreeClassTag::S3);
        REQUIRE(classify_tree(gen_s4(3, 2)).params == std::vector<int>{2, 3});
    }
    SECTION("a three-legged spider with long legs is Other") {
        // center 0 with legs 1-2, 3-4, 5-6
        Graph t(7);
        t.add_edge(0, 1);
        t.add_edge(1, 2);
        t.add_edge(0, 3);
        t.add_edge(3, 4);
        t.add_edge(0, 5);
        t.add_edge(5, 6);
        TreeClass c = classify_tree(t);
        REQUIRE(c.tag == TreeClassTag::Other);
        REQUIRE(c.predicted_mis == 8);
    }
    SECTION("non-trees are rejected") { REQUIRE_THROWS_AS(classify_tree(gen_cycle(4)), error); }
    SECTION("prediction equals brute force for all labeled trees up to 7 vertices") {
        for (int n = 1; n <= 7; ++n)
            for_each_labeled_tree(n, [](const Graph& t) {
                TreeClass c = classify_tree(t);
                long actual = static_cast<long>(enumerate_mis(t).size());
                REQUIRE(c.predicted_mis == actual);
                if (c.tag == TreeClassTag::Other) REQUIRE(actual >= 6);
            });
    }
}

TEST_CASE("padovan and binomial counting") {
    std::vector<long> expect{1, 1, 2, 2, 3, 4, 5, 7, 9};
    for (int n = 0; n <= 8; ++n) REQUIRE(padovan(n) == expect[n]);

    REQUIRE(max_kcube_count(5, 2) == 3);
    REQUIRE(max_kcube_count(5, 3) == 1);
    REQUIRE(max_kcube_count(5, 1) == 0);

    SECTION("per-dimension counts sum to the Padovan number") {
        for (int n = 1; n <= 12; ++n) {
            long sum = 0;
            for (int k = 0; k <= n; ++k) sum += max_kcube_count(n, k);
            REQUIRE(sum == padovan(n));
        }
    }
    SECTION("counts match the path MIS size profile") {
        for (int n = 1; n <= 12; ++n) {
            std::map<int, long> by_size;
            for (const IndepSet& s : enumerate_mis(gen_path(n)))
                ++by_size[static_cast<int>(s.size())];
            for (int k = 1; k <= n; ++k)
                REQUIRE(max_kcube_count(n, k) == by_size[k]);
        }
    }
}

TEST_CASE("diameter characterization for two and three maximal independent sets") {
    for (int n = 2; n <= 7; ++n)
        for_each_labeled_tree(n, [](const Graph& t) {
            auto d = all_pairs_distances(t);
            int diam = 0;
            for (int u = 0; u < t.n; ++u)
                for (int v = 0; v < t.n; ++v) diam = std::max(diam, d[u][v]);
            long mis = count_mis_tree(t);
            if (diam == 2) REQUIRE(mis == 2);
            if (diam == 3) REQUIRE(mis == 3);
            if (mis == 2 && t.n >= 3) REQUIRE(diam == 2);
            if (mis == 3) REQUIRE(diam == 3);
        });
}

TEST_CASE("wilf bound") {
    REQUIRE(wilf_bound(1) == 1);
    REQUIRE(wilf_bound(4) == 3);
    REQUIRE(wilf_bound(5) == 4);
    WilfReport r = verify_wilf(7);
    REQUIRE(r.passed);
    REQUIRE(r.observed_max == std::vector<long>{1, 2, 2, 3, 4, 5, 8});
}

TEST_CASE("prufer decoding") {
    REQUIRE(is_tree(prufer_decode({}, 2)));
    REQUIRE(is_tree(prufer_decode({0, 0}, 4)));  // star at 0
    REQUIRE(prufer_decode({0, 0}, 4).degree(0) == 3);
    int count = 0;
    for_each_labeled_tree(5, [&](const Graph& t) {
        REQUIRE(is_tree(t));
        ++count;
    });
    REQUIRE(count == 125);  // 5^3
}

TEST_CASE("verify_corollary_37: maximal hypercubes against dual MIS") {
    SECTION("hexagon: one against one") {
        auto r = verify_corollary_37(gen_hexagon().graph);
        REQUIRE(r.passed);
        REQUIRE(r.maximal_hypercubes == 1);
    }
    SECTION("naphthalene: two against two") {
        auto r = verify_corollary_37(gen_naphthalene().graph);
        REQUIRE(r.passed);
        REQUIRE(r.maximal_hypercubes == 2);
    }
    SECTION("fibonaccenes up to 8: the Padovan count") {
        for (int n = 1; n <= 8; ++n) {
            auto r = verify_corollary_37(gen_fibonaccene(n).graph);
            REQUIRE(r.passed);
            REQUIRE(static_cast<long>(r.maximal_hypercubes) == padovan(n));
        }
    }
    SECTION("bridged hexagon pair") {
        auto r = verify_corollary_37(gen_bridged_hexpair());
        REQUIRE(r.passed);
        REQUIRE(r.maximal_hypercubes == 2);
    }
    SECTION("non-p2c input is an error") {
        REQUIRE_THROWS_AS(verify_corollary_37(gen_coronene().graph), error);
    }
}

TEST_CASE("verify_matchings_equal_independent_sets") {
    SECTION("hexagon: 2 = 2") {
        auto r = verify_matchings_equal_independent_sets(gen_hexagon().graph);
        REQUIRE(r.passed);
        REQUIRE(r.matchings == 2);
    }
    SECTION("naphthalene: 3 = 3") {
        auto r = verify_matchings_equal_independent_sets(gen_naphthalene().graph);
        REQUIRE(r.passed);
        REQUIRE(r.matchings == 3);
    }
    SECTION("fibonaccene 4: 8 = 8") {
        auto r = verify_matchings_equal_independent_sets(gen_fibonaccene(4).graph);
        REQUIRE(r.passed);
        REQUIRE(r.matchings == 8);
    }
    SECTION("hexagon with tail: forbidden edge handled via the allowed subgraph") {
        auto r = verify_matchings_equal_independent_sets(gen_hexagon_tail());
        REQUIRE(r.passed);
        REQUIRE(r.matchings == 2);
    }
}

TEST_CASE("g-bijection: resonant sets against dual independent sets, size for size") {
    for (const auto& sys : {gen_naphthalene(), gen_fibonaccene(4)}) {
        const PlaneGraph& g = sys.graph;
        InnerDual dual = inner_dual(g);
        auto resonant = enumerate_resonant_sets(g);
        auto masks = all_independent_masks(dual.graph);
        REQUIRE(resonant.size() + 1 == masks.size());  // empty set excluded on one side
        std::set<IndepSet> resonant_as_dual;
        for (const FaceSet& s : resonant) {
            IndepSet d;
            for (int f : s) d.push_back(dual.dual_of.at(f));
            std::sort(d.begin(), d.end());
            resonant_as_dual.insert(d);
            // maximality transfers
            bool dual_maximal = true;
            for (int v = 0; v < dual.graph.n && dual_maximal; ++v) {
                if (std::binary_search(d.begin(), d.end(), v)) continue;
                bool blocked = false;
                for (int u : d)
                    if (dual.graph.has_edge(u, v)) blocked = true;
                if (!blocked) dual_maximal = false;
            }
            REQUIRE(is_maximal_resonant(g, s) == dual_maximal);
        }
        REQUIRE(resonant_as_dual.size() == resonant.size());
    }
}

TEST_CASE("small daisy structure") {
    SECTION("one-vertex tree gives K2") {
        REQUIRE(verify_small_daisy_structure(Graph(1)).passed);
    }
    SECTION("bistar(1,1) = P4: three squares pairwise over edges") {
        auto r = verify_small_daisy_structure(gen_path(4));
        REQUIRE(r.passed);
        REQUIRE(r.cube_dims == std::vector<int>{2, 2, 2});
    }
    SECTION("stars: K2 plus Q_{n-1}") {
        for (int k = 1; k <= 5; ++k) {
            auto r = verify_small_daisy_structure(gen_star(k));
            REQUIRE(r.passed);
        }
    }
    SECTION("trees with more than five MIS are rejected") {
        Graph t(7);
        t.add_edge(0, 1);
        t.add_edge(1, 2);
        t.add_edge(0, 3);
        t.add_edge(3, 4);
        t.add_edge(0, 5);
        t.add_edge(5, 6);
        REQUIRE_THROWS_AS(verify_small_daisy_structure(t), error);
    }
}

TEST_CASE("lucas forest probe finds nothing small") {
    REQUIRE_FALSE(lucas_forest_search(4, 5).has_value());
}
