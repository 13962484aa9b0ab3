#include <doctest.h>

#include <set>

#include "fairshare/matching.hpp"
#include "fairshare/oracle.hpp"
#include "support/testgen.hpp"

using namespace fairshare;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

int surplus_of_set(const Bigraph& b, const std::vector<int>& set) {
    std::set<int> nbr;
    for (int l : set) {
        for (int r : b.left_neighbors(l)) {
            nbr.insert(r);
        }
    }
    return static_cast<int>(nbr.size()) - static_cast<int>(set.size());
}

}  // namespace

TEST_CASE("maximum matching on small graphs matches exhaustive search") {
    CHECK(max_matching(triangle()).size() == 1);
    CHECK(max_matching(Graph(4)).size() == 0);
    CHECK(max_matching(cycle(9)).size() == 4);
    CHECK(brute_max_matching(cycle(9)).size() == 4);

    // blossom-forcing shape: two triangles joined by a bridge
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(max_matching(g).size() == brute_max_matching(g).size());
}

TEST_CASE("matching type enforces its invariants") {
    CHECK_THROWS_AS(Matching({1, -1, 0}), ValidationError);  // asymmetric mate array
    Matching m = Matching::from_edges(4, {{0, 2}});
    CHECK(m.size() == 1);
    CHECK(m.mate(0) == 2);
    CHECK(m.mate(1) == -1);
    CHECK(m.uncovered() == std::vector<int>{1, 3});
    CHECK(m.valid_for(Graph(4, {{0, 2}, {1, 3}})));
    CHECK_FALSE(m.valid_for(Graph(4, {{1, 3}})));
    CHECK_THROWS_AS(Matching::from_edges(4, {{0, 2}, {2, 3}}), ValidationError);
}

TEST_CASE("bipartite maximum matching") {
    CHECK(bipartite_max_matching(Bigraph(1, 1, {{0, 0}})).size() == 1);

    Bigraph complete23(2, 3);
    for (int l = 0; l < 2; ++l) {
        for (int r = 0; r < 3; ++r) {
            complete23.add_edge(l, r);
        }
    }
    CHECK(bipartite_max_matching(complete23).size() == 2);
    CHECK(bipartite_max_matching(Bigraph(2, 2)).size() == 0);
}

TEST_CASE("Gallai-Edmonds decomposition on canonical small graphs") {
    SUBCASE("path on three vertices") {
        GEDecomposition d = gallai_edmonds(path3());
        CHECK(d.d == std::vector<int>{0, 2});
        CHECK(d.a == std::vector<int>{1});
        CHECK(d.c.empty());
        REQUIRE(d.components.size() == 2);
        CHECK(d.components[0].vertices == std::vector<int>{0});
        CHECK(d.components[0].odd);
        CHECK(d.components[1].vertices == std::vector<int>{2});
        CHECK(d.components[1].odd);
    }
    SUBCASE("triangle: every vertex is missable") {
        GEDecomposition d = gallai_edmonds(triangle());
        CHECK(d.d == std::vector<int>{0, 1, 2});
        CHECK(d.a.empty());
        CHECK(d.c.empty());
        REQUIRE(d.components.size() == 1);
        CHECK(d.components[0].odd);
    }
    SUBCASE("single edge: perfectly matchable") {
        Graph g(2, {{0, 1}});
        GEDecomposition d = gallai_edmonds(g);
        CHECK(d.d.empty());
        CHECK(d.a.empty());
        CHECK(d.c == std::vector<int>{0, 1});
        REQUIRE(d.components.size() == 1);
        CHECK_FALSE(d.components[0].odd);
    }
}

TEST_CASE("verify_tutte accepts the canonical decompositions") {
    SUBCASE("path") {
        Graph g = path3();
        CHECK(verify_tutte(g, gallai_edmonds(g), Matching::from_edges(3, {{0, 1}})));
        CHECK(verify_tutte(g, gallai_edmonds(g), Matching::from_edges(3, {{1, 2}})));
    }
    SUBCASE("triangle, any single edge") {
        Graph g = triangle();
        GEDecomposition d = gallai_edmonds(g);
        CHECK(verify_tutte(g, d, Matching::from_edges(3, {{0, 1}})));
        CHECK(verify_tutte(g, d, Matching::from_edges(3, {{0, 2}})));
        CHECK(verify_tutte(g, d, Matching::from_edges(3, {{1, 2}})));
    }
    SUBCASE("single edge") {
        Graph g(2, {{0, 1}});
        CHECK(verify_tutte(g, gallai_edmonds(g), Matching::from_edges(2, {{0, 1}})));
    }
    SUBCASE("a non-maximum matching is a precondition error") {
        Graph g = path3();
        CHECK_THROWS_AS(verify_tutte(g, gallai_edmonds(g), Matching::from_edges(3, {})),
                        PreconditionError);
    }
    SUBCASE("a wrong decomposition is rejected") {
        Graph g = path3();
        GEDecomposition bogus = gallai_edmonds(g);
        bogus.a.clear();  // drop the Tutte set but keep the components
        CHECK_FALSE(verify_tutte(g, bogus, max_matching(g)));
    }
}

TEST_CASE("surplus scans all nonempty subsets") {
    SUBCASE("one left vertex with three neighbors") {
        Bigraph b(1, 3, {{0, 0}, {0, 1}, {0, 2}});
        SurplusResult s = surplus(b);
        CHECK(s.min_surplus == 2);
        CHECK(s.witness == std::vector<int>{0});
    }
    SUBCASE("tight pair") {
        Bigraph b(2, 2, {{0, 0}, {1, 0}, {1, 1}});
        SurplusResult s = surplus(b);
        CHECK(s.min_surplus == 0);
        CHECK(surplus_of_set(b, s.witness) == 0);
    }
    SUBCASE("empty left side is the infinite sentinel") {
        SurplusResult s = surplus(Bigraph(0, 3));
        CHECK(s.min_surplus == SurplusResult::kInfinite);
        CHECK(s.witness.empty());
    }
    SUBCASE("deficient side goes negative") {
        Bigraph b(2, 1, {{0, 0}, {1, 0}});
        SurplusResult s = surplus(b);
        CHECK(s.min_surplus == -1);
        CHECK(surplus_of_set(b, s.witness) == -1);
    }
}

TEST_CASE("tight-set search follows the alternating closure") {
    SUBCASE("single matched pair") {
        Bigraph b(1, 1, {{0, 0}});
        auto m = bipartite_max_matching(b);
        auto s = find_tight_set(b, m);
        REQUIRE(s.has_value());
        CHECK(*s == std::vector<int>{0});
    }
    SUBCASE("surplus two yields nothing") {
        Bigraph b(1, 3, {{0, 0}, {0, 1}, {0, 2}});
        auto s = find_tight_set(b, bipartite_max_matching(b));
        CHECK_FALSE(s.has_value());
    }
    SUBCASE("first closure in the deterministic order wins") {
        Bigraph b(2, 2, {{0, 0}, {1, 1}, {1, 0}});
        auto s = find_tight_set(b, bipartite_max_matching(b));
        REQUIRE(s.has_value());
        CHECK(*s == std::vector<int>{0});
        CHECK(surplus_of_set(b, *s) == 0);
    }
    SUBCASE("unsaturated matchings are rejected") {
        Bigraph b(2, 1, {{0, 0}, {1, 0}});
        CHECK_THROWS_AS(find_tight_set(b, bipartite_max_matching(b)), PreconditionError);
    }
}

TEST_CASE("near-tight search designates the spare neighbor") {
    SUBCASE("one left vertex, two neighbors") {
        Bigraph b(1, 2, {{0, 0}, {0, 1}});
        auto r = find_near_tight_set(b, bipartite_max_matching(b));
        REQUIRE(r.has_value());
        CHECK(r->set == std::vector<int>{0});
        CHECK(r->designated == 1);
    }
    SUBCASE("surplus two yields nothing") {
        Bigraph b(1, 3, {{0, 0}, {0, 1}, {0, 2}});
        CHECK_FALSE(find_near_tight_set(b, bipartite_max_matching(b)).has_value());
    }
    SUBCASE("complete 2x3") {
        Bigraph b(2, 3);
        for (int l = 0; l < 2; ++l) {
            for (int r = 0; r < 3; ++r) {
                b.add_edge(l, r);
            }
        }
        auto r = find_near_tight_set(b, bipartite_max_matching(b));
        REQUIRE(r.has_value());
        CHECK(r->set == std::vector<int>{0, 1});
        CHECK(surplus_of_set(b, r->set) == 1);
    }
}

TEST_CASE("tight/near-tight agree with the surplus value") {
    // Exhaustive over every bigraph on 3 left and up to 3 right vertices,
    // then a randomized sweep at larger sizes.
    for (int nr = 1; nr <= 3; ++nr) {
        int cells = 3 * nr;
        for (unsigned mask = 0; mask < (1u << cells); ++mask) {
            Bigraph b(3, nr);
            for (int c = 0; c < cells; ++c) {
                if (mask & (1u << c)) {
                    b.add_edge(c / nr, c % nr);
                }
            }
            BiMatching m = bipartite_max_matching(b);
            if (!m.saturates_left()) {
                continue;
            }
            int s = surplus(b).min_surplus;
            CHECK(find_tight_set(b, m).has_value() == (s == 0));
            if (s >= 1) {
                CHECK(find_near_tight_set(b, m).has_value() == (s == 1));
            }
        }
    }

    testgen::Rng rng(1234);
    for (int trial = 0; trial < 400; ++trial) {
        int na = rng.uniform(1, 8);
        int nr = rng.uniform(1, 8);
        Bigraph b(na, nr);
        for (int l = 0; l < na; ++l) {
            for (int r = 0; r < nr; ++r) {
                if (rng.chance(2, 5)) {
                    b.add_edge(l, r);
                }
            }
        }
        BiMatching m = bipartite_max_matching(b);
        if (!m.saturates_left()) {
            continue;
        }
        int s = surplus(b).min_surplus;
        auto tight = find_tight_set(b, m);
        CHECK(tight.has_value() == (s == 0));
        if (tight) {
            CHECK(surplus_of_set(b, *tight) == 0);
        }
        if (s >= 1) {
            auto near = find_near_tight_set(b, m);
            CHECK(near.has_value() == (s == 1));
            if (near) {
                CHECK(surplus_of_set(b, near->set) == 1);
            }
        }
    }
}

TEST_CASE("anchored-cut surplus (left side above the subset-scan limit)") {
    // Interval neighborhoods make the minimum analyzable by hand: when left
    // vertex i sees rights {i, ..., i + k_i}, any union of intervals costs
    // at least min k_i, achieved by the singleton with the shortest one.
    testgen::Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        int na = rng.uniform(21, 24);
        int nr = na + 4;
        Bigraph b(na, nr);
        int expected = 4;
        for (int l = 0; l < na; ++l) {
            int k = rng.uniform(0, 3);
            expected = std::min(expected, k);
            for (int r = l; r <= l + k; ++r) {
                b.add_edge(l, r);
            }
        }
        SurplusResult s = surplus(b);
        CHECK(s.min_surplus == expected);
        CHECK(surplus_of_set(b, s.witness) == expected);
    }

    SUBCASE("deficient case: two left vertices pinned to one right") {
        int na = 22;
        Bigraph b(na, na);
        for (int l = 2; l < na; ++l) {
            b.add_edge(l, l);
        }
        b.add_edge(0, 0);
        b.add_edge(1, 0);
        SurplusResult s = surplus(b);
        CHECK(s.min_surplus == -1);
        CHECK(s.witness == std::vector<int>{0, 1});
    }
}

TEST_CASE("matching engine against the exhaustive oracle") {
    testgen::Rng rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        int n = rng.uniform(1, 10);
        Graph g = testgen::random_graph(rng, n, rng.uniform(10, 90));
        Matching blossom = max_matching(g);
        CHECK(blossom.valid_for(g));
        CHECK(blossom.size() == brute_max_matching(g).size());

        GEDecomposition d = gallai_edmonds(g);
        CHECK(d.d == brute_missed_set(g));

        // count of vertices a maximum matching misses = odd components - |A|
        int unmatched = n - 2 * blossom.size();
        CHECK(unmatched == d.odd_component_count() - static_cast<int>(d.a.size()));

        CHECK(verify_tutte(g, d, blossom));
    }
}
