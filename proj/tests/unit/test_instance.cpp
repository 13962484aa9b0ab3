#include <doctest.h>

#include "fairshare/generators.hpp"
#include "fairshare/instance.hpp"

using namespace fairshare;

namespace {

InstanceData zero_instance(int n, int m, std::vector<int> caps) {
    InstanceData data;
    data.n = n;
    data.m = m;
    data.capacities = std::move(caps);
    data.values.assign(n, std::vector<Rational>(m, Rational(0)));
    data.externalities.assign(n, std::vector<Rational>(n, Rational(0)));
    return data;
}

}  // namespace

TEST_CASE("all-zero instance validates") {
    Instance inst = validate_instance(zero_instance(4, 2, {2, 2}));
    CHECK(inst.n == 4);
    CHECK(inst.profile.is_dorm_sharing);
    CHECK(inst.profile.uniform_capacity == 2);
    CHECK(inst.profile.externality_graph->edge_count() == 0);
}

TEST_CASE("capacity sum mismatch is rejected with its own code") {
    auto data = zero_instance(4, 2, {1, 2});
    try {
        validate_instance(data);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationError::Code::CapacitySum);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
}

TEST_CASE("each constraint violation gets a distinct code") {
    auto bad_dims = zero_instance(3, 2, {1, 2});
    bad_dims.values.pop_back();
    CHECK_THROWS_AS(validate_instance(bad_dims), ValidationError);

    auto negative_value = zero_instance(3, 2, {1, 2});
    negative_value.values[0][1] = Rational(-1);
    try {
        validate_instance(negative_value);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationError::Code::NegativeValue);
    }

    auto self_ext = zero_instance(3, 2, {1, 2});
    self_ext.externalities[1][1] = Rational(1);
    try {
        validate_instance(self_ext);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationError::Code::SelfExternality);
    }

    auto negative_ext = zero_instance(3, 2, {1, 2});
    negative_ext.externalities[0][2] = Rational(-1, 2);
    try {
        validate_instance(negative_ext);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationError::Code::NegativeExternality);
    }

    auto bad_cap = zero_instance(3, 2, {0, 3});
    try {
        validate_instance(bad_cap);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationError::Code::BadCapacity);
    }
}

TEST_CASE("the 10-agent two-dorm instance is valid dorm sharing") {
    Instance inst = canned_instance("no-pef-cap5").instance;
    CHECK(inst.n == 10);
    CHECK(inst.m == 2);
    CHECK(inst.profile.is_dorm_sharing);
    CHECK(inst.profile.uniform_capacity == 5);
    CHECK(inst.profile.externality_graph->edge_count() == 15);  // K5 plus 5 pendants
}

TEST_CASE("profile detects non-dichotomous and asymmetric externalities") {
    auto data = zero_instance(3, 3, {1, 1, 1});
    data.externalities[0][1] = Rational(1, 2);
    data.externalities[1][0] = Rational(1, 2);
    Instance inst = validate_instance(data);
    CHECK_FALSE(inst.profile.is_dorm_sharing);
    CHECK_FALSE(inst.profile.externality_graph.has_value());
    CHECK(inst.profile.uniform_capacity == 1);

    auto asym = zero_instance(3, 3, {1, 1, 1});
    asym.externalities[0][1] = Rational(1);
    Instance inst2 = validate_instance(asym);
    CHECK_FALSE(inst2.profile.is_dorm_sharing);
    CHECK_FALSE(inst2.profile.externality_graph.has_value());
}

TEST_CASE("swap exchanges two agents across groups") {
    Assignment x;
    x.groups = {{0, 1}, {2, 3}};
    Assignment swapped = swap(x, 0, 2);
    CHECK(swapped.groups == std::vector<std::vector<int>>{{1, 2}, {0, 3}});

    SUBCASE("swap with oneself is the identity") {
        CHECK(swap(x, 1, 1) == x);
    }
    SUBCASE("swap within a group is the identity") {
        CHECK(swap(x, 0, 1) == x);
    }
    SUBCASE("swap is an involution") {
        CHECK(swap(swap(x, 0, 2), 0, 2) == x);
        CHECK(swap(swap(x, 1, 3), 1, 3) == x);
    }
    SUBCASE("bad indices are rejected") {
        CHECK_THROWS_AS(swap(x, 0, 4), ValidationError);
        CHECK_THROWS_AS(swap(x, -1, 2), ValidationError);
    }
}

TEST_CASE("assignment validation enforces exact capacities and partition") {
    Instance inst = validate_instance(zero_instance(4, 2, {2, 2}));
    Assignment ok;
    ok.groups = {{0, 1}, {2, 3}};
    CHECK_NOTHROW(validate_assignment(inst, ok));

    Assignment wrong_size;
    wrong_size.groups = {{0, 1, 2}, {3}};
    CHECK_THROWS_AS(validate_assignment(inst, wrong_size), ValidationError);

    Assignment duplicate;
    duplicate.groups = {{0, 1}, {1, 3}};
    CHECK_THROWS_AS(validate_assignment(inst, duplicate), ValidationError);

    Assignment missing_group;
    missing_group.groups = {{0, 1, 2, 3}};
    CHECK_THROWS_AS(validate_assignment(inst, missing_group), ValidationError);
}
