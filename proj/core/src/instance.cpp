#include "fairshare/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fairshare {

namespace {

DormProfile derive_profile(const Instance& inst) {
    DormProfile profile;

    bool uniform = inst.m > 0;
    for (int j = 1; j < inst.m; ++j) {
        if (inst.capacities[j] != inst.capacities[0]) {
            uniform = false;
            break;
        }
    }
    if (uniform) {
        profile.uniform_capacity = inst.capacities[0];
    }

    bool dichotomous = true;
    for (int i = 0; i < inst.n && dichotomous; ++i) {
        for (int j = 0; j < inst.n; ++j) {
            const Rational& e = inst.externalities[i][j];
            if ((e != Rational(0) && e != Rational(1)) || e != inst.externalities[j][i]) {
                dichotomous = false;
                break;
            }
        }
    }
    if (dichotomous) {
        Graph g(inst.n);
        for (int i = 0; i < inst.n; ++i) {
            for (int j = i + 1; j < inst.n; ++j) {
                if (inst.externalities[i][j] == Rational(1)) {
                    g.add_edge(i, j);
                }
            }
        }
        profile.externality_graph = std::move(g);
    }

    profile.is_dorm_sharing = uniform && dichotomous;
    return profile;
}

}  // namespace

Instance validate_instance(const InstanceData& raw) {
    if (raw.n < 1 || raw.m < 1) {
        throw ValidationError(ValidationError::Code::DimensionMismatch,
                              "instance needs at least one agent and one resource");
    }
    if (static_cast<int>(raw.capacities.size()) != raw.m) {
        throw ValidationError(ValidationError::Code::DimensionMismatch,
                              "capacities has " + std::to_string(raw.capacities.size()) +
                                  " entries, expected m=" + std::to_string(raw.m));
    }
    if (static_cast<int>(raw.values.size()) != raw.n) {
        throw ValidationError(ValidationError::Code::DimensionMismatch,
                              "values has " + std::to_string(raw.values.size()) +
                                  " rows, expected n=" + std::to_string(raw.n));
    }
    for (const auto& row : raw.values) {
        if (static_cast<int>(row.size()) != raw.m) {
            throw ValidationError(ValidationError::Code::DimensionMismatch,
                                  "values row has " + std::to_string(row.size()) +
                                      " entries, expected m=" + std::to_string(raw.m));
        }
    }
    if (static_cast<int>(raw.externalities.size()) != raw.n) {
        throw ValidationError(ValidationError::Code::DimensionMismatch,
                              "externalities has " + std::to_string(raw.externalities.size()) +
                                  " rows, expected n=" + std::to_string(raw.n));
    }
    for (const auto& row : raw.externalities) {
        if (static_cast<int>(row.size()) != raw.n) {
            throw ValidationError(ValidationError::Code::DimensionMismatch,
                                  "externalities row has " + std::to_string(row.size()) +
                                      " entries, expected n=" + std::to_string(raw.n));
        }
    }

    long long capacity_sum = 0;
    for (int j = 0; j < raw.m; ++j) {
        if (raw.capacities[j] < 1) {
            throw ValidationError(ValidationError::Code::BadCapacity,
                                  "capacity of resource " + std::to_string(j) +
                                      " must be positive");
        }
        capacity_sum += raw.capacities[j];
    }
    if (capacity_sum != raw.n) {
        throw ValidationError(ValidationError::Code::CapacitySum,
                              "capacity sum " + std::to_string(capacity_sum) +
                                  " != n=" + std::to_string(raw.n));
    }

    for (int i = 0; i < raw.n; ++i) {
        for (int j = 0; j < raw.m; ++j) {
            if (raw.values[i][j] < Rational(0)) {
                throw ValidationError(ValidationError::Code::NegativeValue,
                                      "negative value v[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "]");
            }
        }
    }
    for (int i = 0; i < raw.n; ++i) {
        if (!raw.externalities[i][i].is_zero()) {
            throw ValidationError(ValidationError::Code::SelfExternality,
                                  "nonzero self-externality e[" + std::to_string(i) + "][" +
                                      std::to_string(i) + "]");
        }
        for (int j = 0; j < raw.n; ++j) {
            if (raw.externalities[i][j] < Rational(0)) {
                throw ValidationError(ValidationError::Code::NegativeExternality,
                                      "negative externality e[" + std::to_string(i) + "][" +
                                          std::to_string(j) + "]");
            }
        }
    }

    Instance inst;
    inst.n = raw.n;
    inst.m = raw.m;
    inst.capacities = raw.capacities;
    inst.values = raw.values;
    inst.externalities = raw.externalities;
    inst.profile = derive_profile(inst);
    return inst;
}

void Assignment::canonicalize() {
    for (auto& group : groups) {
        std::sort(group.begin(), group.end());
    }
}

std::vector<int> Assignment::resource_of(int n) const {
    std::vector<int> result(n, -1);
    for (int j = 0; j < static_cast<int>(groups.size()); ++j) {
        for (int agent : groups[j]) {
            if (agent < 0 || agent >= n || result[agent] != -1) {
                throw ValidationError(ValidationError::Code::BadAssignment,
                                      "assignment does not partition the agents");
            }
            result[agent] = j;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (result[i] == -1) {
            throw ValidationError(ValidationError::Code::BadAssignment,
                                  "agent " + std::to_string(i) + " is unassigned");
        }
    }
    return result;
}

void validate_assignment(const Instance& inst, const Assignment& x) {
    if (static_cast<int>(x.groups.size()) != inst.m) {
        throw ValidationError(ValidationError::Code::BadAssignment,
                              "assignment has " + std::to_string(x.groups.size()) +
                                  " groups, expected m=" + std::to_string(inst.m));
    }
    for (int j = 0; j < inst.m; ++j) {
        if (static_cast<int>(x.groups[j].size()) != inst.capacities[j]) {
            throw ValidationError(ValidationError::Code::BadAssignment,
                                  "group " + std::to_string(j) + " has " +
                                      std::to_string(x.groups[j].size()) + " agents, capacity is " +
                                      std::to_string(inst.capacities[j]));
        }
    }
    x.resource_of(inst.n);  // throws unless the groups partition the agents
}

Assignment swap(const Assignment& x, int i, int j) {
    int n = 0;
    for (const auto& group : x.groups) {
        n += static_cast<int>(group.size());
    }
    if (i < 0 || i >= n || j < 0 || j >= n) {
        throw ValidationError(ValidationError::Code::BadIndex,
                              "swap agent index out of range");
    }
    Assignment result = x;
    if (i == j) {
        return result;
    }
    int ri = -1;
    int rj = -1;
    for (int g = 0; g < static_cast<int>(result.groups.size()); ++g) {
        for (int agent : result.groups[g]) {
            if (agent == i) {
                ri = g;
            }
            if (agent == j) {
                rj = g;
            }
        }
    }
    if (ri == rj) {
        return result;
    }
    auto& gi = result.groups[ri];
    auto& gj = result.groups[rj];
    gi.erase(std::find(gi.begin(), gi.end(), i));
    gj.erase(std::find(gj.begin(), gj.end(), j));
    gi.insert(std::lower_bound(gi.begin(), gi.end(), j), j);
    gj.insert(std::lower_bound(gj.begin(), gj.end(), i), i);
    return result;
}

}  // namespace fairshare
