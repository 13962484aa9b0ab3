#include <doctest.h>

#include "fairshare/fairness.hpp"
#include "fairshare/generators.hpp"
#include "fairshare/oracle.hpp"
#include "fairshare/reductions.hpp"

using namespace fairshare;

namespace {

Instance zero_instance(int n, int m, std::vector<int> caps) {
    InstanceData data;
    data.n = n;
    data.m = m;
    data.capacities = std::move(caps);
    data.values.assign(n, std::vector<Rational>(m, Rational(0)));
    data.externalities.assign(n, std::vector<Rational>(n, Rational(0)));
    return validate_instance(data);
}

}  // namespace

TEST_CASE("assignment counts are exact multinomials") {
    CHECK(assignment_count(zero_instance(10, 2, {5, 5})) == 252);
    CHECK(assignment_count(zero_instance(9, 3, {3, 3, 3})) == 1680);
    CHECK(assignment_count(zero_instance(2, 2, {1, 1})) == 2);
    CHECK(assignment_count(zero_instance(12, 6, {2, 2, 2, 2, 2, 2})) == 7484400);
}

TEST_CASE("enumeration is lexicographic in sorted group contents") {
    Instance inst = zero_instance(3, 2, {1, 2});
    std::vector<Assignment> all;
    enumerate_assignments(inst, [&](const Assignment& x) {
        all.push_back(x);
        return true;
    });
    REQUIRE(all.size() == 3);
    CHECK(all[0].groups == std::vector<std::vector<int>>{{0}, {1, 2}});
    CHECK(all[1].groups == std::vector<std::vector<int>>{{1}, {0, 2}});
    CHECK(all[2].groups == std::vector<std::vector<int>>{{2}, {0, 1}});
    for (const auto& x : all) {
        CHECK_NOTHROW(validate_assignment(inst, x));
    }
}

TEST_CASE("enumeration stops early when the visitor says so") {
    Instance inst = zero_instance(9, 3, {3, 3, 3});
    int seen = 0;
    enumerate_assignments(inst, [&](const Assignment&) { return ++seen < 10; });
    CHECK(seen == 10);
}

TEST_CASE("the limit is an explicit refusal carrying the exact count") {
    Instance inst = zero_instance(9, 3, {3, 3, 3});
    try {
        enumerate_assignments(inst, [](const Assignment&) { return true; }, 100);
        FAIL("expected LimitExceededError");
    } catch (const LimitExceededError& e) {
        CHECK(e.count() == 1680);
        CHECK(std::string(e.what()).find("1680") != std::string::npos);
    }
}

TEST_CASE("decide_ef finds witnesses exactly when they exist") {
    SUBCASE("the EF-but-not-PROP instance has an EF assignment") {
        GeneratedInstance g = tight_instance("ef-not-prop", 0, 0, Rational(3));
        auto witness = decide_ef(g.instance);
        REQUIRE(witness.has_value());
        CHECK(check_ef(g.instance, *witness).ef());
    }
    SUBCASE("the reduction from an edgeless 4-graph has none") {
        CliqueInstance ci{Graph(4), 3};
        Instance inst = reduce_clique_to_ef(ci);
        CHECK_FALSE(decide_ef(inst).has_value());
    }
    SUBCASE("all-zero instances take the first enumerated assignment") {
        Instance inst = zero_instance(4, 2, {2, 2});
        auto witness = decide_ef(inst);
        REQUIRE(witness.has_value());
        CHECK(witness->groups == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    }
}

TEST_CASE("decide_pef matches the impossibility results") {
    SUBCASE("two dorms of capacity five") {
        CHECK_FALSE(decide_pef(canned_instance("no-pef-cap5").instance).has_value());
    }
    SUBCASE("three dorms of capacity three") {
        CHECK_FALSE(decide_pef(canned_instance("no-pef-cap3").instance).has_value());
    }
    SUBCASE("capacity-2 dorm instances always have one") {
        for (unsigned long long seed : {1ULL, 2ULL, 3ULL}) {
            Instance inst = random_dorm(seed, 3, 2, Rational(1, 2), 4);
            auto witness = decide_pef(inst);
            REQUIRE(witness.has_value());
            CHECK(check_pef(inst, *witness).pef());
        }
    }
}

TEST_CASE("brute-force matching references") {
    Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(brute_max_matching(k3).size() == 1);
    CHECK(brute_missed_set(k3) == std::vector<int>{0, 1, 2});

    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(brute_max_matching(p3).size() == 1);
    CHECK(brute_missed_set(p3) == std::vector<int>{0, 2});

    Graph empty(4);
    CHECK(brute_max_matching(empty).size() == 0);
    CHECK(brute_missed_set(empty) == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(brute_max_matching(Graph(17)), PreconditionError);
}

TEST_CASE("brute-force clique search") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto clique = brute_clique(k4, 3);
    REQUIRE(clique.has_value());
    CHECK(clique->size() == 3);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(brute_clique(c4, 3).has_value());
    CHECK(brute_clique(c4, 2).has_value());
    CHECK(brute_clique(c4, 1) == std::vector<int>{0});
    CHECK_FALSE(brute_clique(Graph(3), 4).has_value());
    CHECK_THROWS_AS(brute_clique(Graph(21), 2), PreconditionError);
}
