#include <doctest.h>

#include "fairshare/oracle.hpp"
#include "fairshare/reductions.hpp"
#include "support/testgen.hpp"

using namespace fairshare;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph cycle4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

}  // namespace

TEST_CASE("pad_clique lifts low targets while preserving the answer") {
    SUBCASE("4-cycle with k=2") {
        CliqueInstance padded = pad_clique({cycle4(), 2});
        CHECK(padded.graph.vertex_count() == 8);
        CHECK(padded.k == 6);
        CHECK(2 * padded.k > padded.graph.vertex_count());
        // the largest clique grows from 2 to 6, no further
        CHECK(brute_clique(cycle4(), 2).has_value());
        CHECK(brute_clique(padded.graph, 6).has_value());
        CHECK_FALSE(brute_clique(padded.graph, 7).has_value());
    }
    SUBCASE("guard not triggered when k is already large") {
        CliqueInstance original{complete(4), 3};
        CliqueInstance padded = pad_clique(original);
        CHECK(padded.graph == original.graph);
        CHECK(padded.k == 3);
    }
    SUBCASE("single vertex") {
        CliqueInstance padded = pad_clique({Graph(1), 1});
        CHECK(padded.graph.vertex_count() == 1);
        CHECK(padded.k == 1);
    }
    SUBCASE("yes/no status is preserved across padding") {
        testgen::Rng rng(5);
        for (int trial = 0; trial < 40; ++trial) {
            int n = rng.uniform(2, 5);
            Graph g = testgen::random_graph(rng, n, rng.uniform(20, 90));
            for (int k = 1; 2 * k <= n; ++k) {
                CliqueInstance padded = pad_clique({g, k});
                CHECK(brute_clique(g, k).has_value() ==
                      brute_clique(padded.graph, padded.k).has_value());
            }
        }
    }
}

TEST_CASE("clique-to-EF reduction") {
    SUBCASE("K4 with k=3 is a yes-instance") {
        Instance inst = reduce_clique_to_ef({complete(4), 3});
        CHECK(inst.n == 12);
        CHECK(inst.capacities == std::vector<int>{6, 6});
        CHECK(decide_ef(inst).has_value());
    }
    SUBCASE("edgeless 4-graph with k=3 is a no-instance") {
        Instance inst = reduce_clique_to_ef({Graph(4), 3});
        CHECK(inst.n == 12);
        CHECK_FALSE(decide_ef(inst).has_value());
    }
    SUBCASE("K2 with k=2") {
        Instance inst = reduce_clique_to_ef({complete(2), 2});
        CHECK(inst.n == 8);
        CHECK(decide_ef(inst).has_value());
    }
    SUBCASE("low targets are rejected") {
        CHECK_THROWS_AS(reduce_clique_to_ef({cycle4(), 2}), PreconditionError);
        CHECK_THROWS_AS(reduce_clique_to_ef({cycle4(), 5}), PreconditionError);
    }
}

TEST_CASE("clique-to-PEF reduction") {
    SUBCASE("K4 with k=3 is a yes-instance") {
        Instance inst = reduce_clique_to_pef({complete(4), 3});
        CHECK(inst.n == 10);
        CHECK(inst.capacities == std::vector<int>{7, 3});
        CHECK(decide_pef(inst).has_value());
    }
    SUBCASE("edgeless 4-graph with k=3 is a no-instance") {
        CHECK_FALSE(decide_pef(reduce_clique_to_pef({Graph(4), 3})).has_value());
    }
    SUBCASE("single vertex with k=1") {
        Instance inst = reduce_clique_to_pef({Graph(1), 1});
        CHECK(inst.n == 3);
        CHECK(inst.capacities == std::vector<int>{2, 1});
        CHECK(decide_pef(inst).has_value());
    }
}

TEST_CASE("size formulas hold for every build") {
    testgen::Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        int n = rng.uniform(1, 5);
        Graph g = testgen::random_graph(rng, n, 50);
        int k_min = n / 2 + 1;
        for (int k = k_min; k <= n; ++k) {
            CHECK(reduce_clique_to_ef({g, k}).n == 4 * k);
            CHECK(reduce_clique_to_pef({g, k}).n == 2 * k + n);
        }
    }
}

TEST_CASE("reduction equivalence on small graphs") {
    // Every labeled graph on up to 3 vertices, every k above |V|/2, plus the
    // padded route for k = 1.
    for (int n = 1; n <= 3; ++n) {
        int cells = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << cells); ++mask) {
            Graph g(n);
            int cell = 0;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v, ++cell) {
                    if (mask & (1u << cell)) {
                        g.add_edge(u, v);
                    }
                }
            }
            for (int k = 1; k <= n; ++k) {
                CliqueInstance ci{g, k};
                if (2 * k <= n) {
                    ci = pad_clique(ci);
                }
                bool has_clique = brute_clique(g, k).has_value();
                CHECK(decide_ef(reduce_clique_to_ef(ci)).has_value() == has_clique);
                CHECK(decide_pef(reduce_clique_to_pef(ci)).has_value() == has_clique);
            }
        }
    }
}
