#include "fairshare/fairness.hpp"

#include <string>

namespace fairshare {

namespace {

std::vector<AgentUtility> all_utilities(const Instance& inst, const Assignment& x,
                                        const std::vector<int>& resource_of) {
    std::vector<AgentUtility> result(inst.n);
    for (int i = 0; i < inst.n; ++i) {
        int r = resource_of[i];
        AgentUtility u;
        u.internal = inst.values[i][r];
        for (int mate : x.groups[r]) {
            if (mate != i) {
                u.external += inst.externalities[i][mate];
            }
        }
        u.total = u.internal + u.external;
        result[i] = u;
    }
    return result;
}

/// Fills the EF and PEF violation lists of `report` in one pass.
/// A swap within the same resource never changes any utility.
void fill_violations(const Instance& inst, const Assignment& x,
                     const std::vector<int>& resource_of, FairnessReport& report) {
    for (int i = 0; i < inst.n; ++i) {
        int ri = resource_of[i];
        for (int j = 0; j < inst.n; ++j) {
            if (j == i || resource_of[j] == ri) {
                continue;
            }
            int rj = resource_of[j];
            Rational swapped_internal = inst.values[i][rj];
            Rational swapped_external;
            for (int mate : x.groups[rj]) {
                if (mate != j) {
                    swapped_external += inst.externalities[i][mate];
                }
            }
            const AgentUtility& now = report.utilities[i];
            bool better_internal = swapped_internal > now.internal;
            bool better_external = swapped_external > now.external;
            if (swapped_internal + swapped_external > now.total) {
                report.ef_violations.emplace_back(i, j);
            }
            if (better_internal && better_external) {
                report.pef_violations.emplace_back(i, j);
            }
        }
    }
    report.has_violations = true;
}

}  // namespace

AgentUtility utility(const Instance& inst, const Assignment& x, int agent) {
    validate_assignment(inst, x);
    if (agent < 0 || agent >= inst.n) {
        throw ValidationError(ValidationError::Code::BadIndex,
                              "agent index " + std::to_string(agent) + " out of range");
    }
    auto resource_of = x.resource_of(inst.n);
    int r = resource_of[agent];
    AgentUtility u;
    u.internal = inst.values[agent][r];
    for (int mate : x.groups[r]) {
        if (mate != agent) {
            u.external += inst.externalities[agent][mate];
        }
    }
    u.total = u.internal + u.external;
    return u;
}

FairnessReport check_ef(const Instance& inst, const Assignment& x) {
    validate_assignment(inst, x);
    auto resource_of = x.resource_of(inst.n);
    FairnessReport report;
    report.utilities = all_utilities(inst, x, resource_of);
    fill_violations(inst, x, resource_of, report);
    return report;
}

FairnessReport check_pef(const Instance& inst, const Assignment& x) {
    return check_ef(inst, x);  // one pass computes both violation lists
}

Rational prop_share(const Instance& inst, int agent) {
    if (agent < 0 || agent >= inst.n) {
        throw ValidationError(ValidationError::Code::BadIndex,
                              "agent index " + std::to_string(agent) + " out of range");
    }
    if (inst.n < 2) {
        throw DegenerateInstanceError("PROP benchmark needs at least two agents");
    }
    Rational value_sum;
    for (int j = 0; j < inst.m; ++j) {
        value_sum += inst.values[agent][j];
    }
    Rational externality_sum;
    for (int l = 0; l < inst.n; ++l) {
        externality_sum += inst.externalities[agent][l];
    }
    Rational avg_mates = Rational(inst.n, inst.m) - Rational(1);  // n/m - 1
    return value_sum / Rational(inst.m) +
           avg_mates * externality_sum / Rational(inst.n - 1);
}

FairnessReport check_prop(const Instance& inst, const Assignment& x) {
    validate_assignment(inst, x);
    auto resource_of = x.resource_of(inst.n);
    FairnessReport report;
    report.utilities = all_utilities(inst, x, resource_of);
    report.prop.resize(inst.n);
    for (int i = 0; i < inst.n; ++i) {
        PropEntry entry;
        entry.share = prop_share(inst, i);
        if (entry.share.is_zero()) {
            entry.satisfied = true;  // u_i >= 0 = PROP_i always
        } else {
            entry.ratio = report.utilities[i].total / entry.share;
            entry.satisfied = *entry.ratio >= Rational(1);
            if (!report.min_prop_ratio || *entry.ratio < *report.min_prop_ratio) {
                report.min_prop_ratio = entry.ratio;
            }
        }
        report.prop[i] = entry;
    }
    report.has_prop = true;
    return report;
}

ParetoPropResult check_pareto_prop(const Instance& inst, const Assignment& x, int agent) {
    if (!inst.profile.is_dorm_sharing) {
        throw PreconditionError(
            "Pareto-PROP conditions are defined for dorm-sharing instances only");
    }
    validate_assignment(inst, x);
    if (agent < 0 || agent >= inst.n) {
        throw ValidationError(ValidationError::Code::BadIndex,
                              "agent index " + std::to_string(agent) + " out of range");
    }
    auto resource_of = x.resource_of(inst.n);
    int r = resource_of[agent];

    ParetoPropResult result;
    for (int j = 0; j < inst.m; ++j) {
        if (inst.values[agent][r] >= inst.values[agent][j]) {
            ++result.cond1_count;
        }
    }
    result.cond1 = 2 * result.cond1_count >= inst.m;

    int c = *inst.profile.uniform_capacity;
    Rational externality_sum;
    for (int l = 0; l < inst.n; ++l) {
        externality_sum += inst.externalities[agent][l];
    }
    result.cond2_threshold =
        inst.n > 1 ? nearest_int(Rational(c - 1, inst.n - 1) * externality_sum) : 0;

    Rational external_now;
    for (int mate : x.groups[r]) {
        if (mate != agent) {
            external_now += inst.externalities[agent][mate];
        }
    }
    result.cond2 = external_now >= Rational(result.cond2_threshold);
    return result;
}

}  // namespace fairshare
