#include "fairshare/generators.hpp"

#include <string>

namespace fairshare {

namespace {

/// splitmix64; the draw order (edges in (i, j) lexicographic order, then
/// values row-major) is part of the recorded scheme.
class SplitMix64 {
public:
    explicit SplitMix64(unsigned long long seed) : state_(seed) {}

    unsigned long long next() {
        unsigned long long z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// True with exact probability ceil(p * 2^64) / 2^64.
    bool bernoulli(const Rational& p) {
        unsigned long long u = next();
        return static_cast<unsigned __int128>(u) * p.denominator() <
               static_cast<unsigned __int128>(p.numerator()) << 64;
    }

    long long uniform(long long upper_inclusive) {
        return static_cast<long long>(next() % static_cast<unsigned long long>(upper_inclusive + 1));
    }

private:
    unsigned long long state_;
};

InstanceData blank(int n, int m) {
    InstanceData data;
    data.n = n;
    data.m = m;
    data.values.assign(n, std::vector<Rational>(m, Rational(0)));
    data.externalities.assign(n, std::vector<Rational>(n, Rational(0)));
    return data;
}

void befriend(InstanceData& data, int a, int b) {
    data.externalities[a][b] = Rational(1);
    data.externalities[b][a] = Rational(1);
}

Assignment consecutive_blocks(const std::vector<int>& capacities) {
    Assignment x;
    int next_agent = 0;
    for (int c : capacities) {
        std::vector<int> group;
        group.reserve(c);
        for (int i = 0; i < c; ++i) {
            group.push_back(next_agent++);
        }
        x.groups.push_back(std::move(group));
    }
    return x;
}

GeneratedInstance make_no_pef_cap5() {
    InstanceData data = blank(10, 2);
    data.capacities = {5, 5};
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            befriend(data, i, j);
        }
        befriend(data, i, i + 5);
    }
    for (int i = 0; i < 7; ++i) {
        data.values[i][0] = Rational(1);
    }
    for (int i = 7; i < 10; ++i) {
        data.values[i][1] = Rational(1);
    }
    return {validate_instance(data), std::nullopt};
}

GeneratedInstance make_no_pef_cap3() {
    InstanceData data = blank(9, 3);
    data.capacities = {3, 3, 3};
    for (int i = 0; i < 8; i += 2) {
        befriend(data, i, i + 1);
    }
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 3; ++j) {
            data.values[i][j] = Rational(j + 1);
        }
    }
    return {validate_instance(data), std::nullopt};
}

GeneratedInstance make_pef_not_pprop() {
    InstanceData data = blank(9, 3);
    data.capacities = {3, 3, 3};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            befriend(data, i, j);
        }
    }
    befriend(data, 4, 5);
    befriend(data, 6, 7);
    befriend(data, 6, 8);
    befriend(data, 7, 8);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 3; ++j) {
            data.values[i][j] = Rational(j + 1);
        }
    }
    Assignment x;
    x.groups = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
    return {validate_instance(data), x};
}

GeneratedInstance make_ef_not_prop(const Rational& t) {
    if (!(t > Rational(0))) {
        throw PreconditionError("ef-not-prop requires T > 0");
    }
    InstanceData data = blank(4, 2);
    data.capacities = {1, 3};
    data.externalities[0][3] = t;
    Assignment x;
    x.groups = {{3}, {0, 1, 2}};
    return {validate_instance(data), x};
}

GeneratedInstance make_prop4_tight(int c, int m) {
    if (c < 2 || m < 2) {
        throw PreconditionError("prop4-tight requires c >= 2 and m >= 2");
    }
    const long long big = static_cast<long long>(c - 1) * m * m + 1;
    const long long n = big + static_cast<long long>(c) * (m - 1);
    InstanceData data = blank(static_cast<int>(n), m);
    data.capacities.assign(m, c);
    data.capacities[0] = static_cast<int>(big);
    for (long long l = 1; l < n; ++l) {
        data.externalities[0][l] = l < big ? Rational(1) : Rational(static_cast<long long>(m) * m);
    }
    return {validate_instance(data), consecutive_blocks(data.capacities)};
}

GeneratedInstance make_prop5_tight(int c, int m) {
    if (c < 2 || m < 2) {
        throw PreconditionError("prop5-tight requires c >= 2 and m >= 2");
    }
    const int n = c * m;
    InstanceData data = blank(n, m);
    data.capacities.assign(m, c);
    data.values[0][0] = Rational(c - 1);
    for (int l = c; l < n; ++l) {
        data.externalities[0][l] = Rational(1);
    }
    return {validate_instance(data), consecutive_blocks(data.capacities)};
}

}  // namespace

GeneratedInstance canned_instance(const std::string& name) {
    if (name == "no-pef-cap5") {
        return make_no_pef_cap5();
    }
    if (name == "no-pef-cap3") {
        return make_no_pef_cap3();
    }
    if (name == "pef-not-pprop") {
        return make_pef_not_pprop();
    }
    throw PreconditionError("unknown instance name '" + name + "'");
}

GeneratedInstance tight_instance(const std::string& kind, int c, int m, const Rational& t) {
    if (kind == "ef-not-prop") {
        return make_ef_not_prop(t);
    }
    if (kind == "prop4-tight") {
        return make_prop4_tight(c, m);
    }
    if (kind == "prop5-tight") {
        return make_prop5_tight(c, m);
    }
    throw PreconditionError("unknown tight-instance kind '" + kind + "'");
}

Instance random_dorm(unsigned long long seed, int m, int c, const Rational& edge_prob,
                     int value_max) {
    if (m < 1 || c < 1) {
        throw PreconditionError("random_dorm requires m >= 1 and c >= 1");
    }
    if (edge_prob < Rational(0) || edge_prob > Rational(1)) {
        throw PreconditionError("edge probability must lie in [0, 1]");
    }
    if (value_max < 0) {
        throw PreconditionError("value_max must be nonnegative");
    }
    const int n = c * m;
    SplitMix64 rng(seed);
    InstanceData data = blank(n, m);
    data.capacities.assign(m, c);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng.bernoulli(edge_prob)) {
                befriend(data, i, j);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            data.values[i][j] = Rational(rng.uniform(value_max));
        }
    }
    return validate_instance(data);
}

}  // namespace fairshare
