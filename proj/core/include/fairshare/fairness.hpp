#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairshare/instance.hpp"

namespace fairshare {

struct AgentUtility {
    Rational internal;
    Rational external;
    Rational total;

    friend bool operator==(const AgentUtility& a, const AgentUtility& b) = default;
};

/// Per-agent proportionality data. `ratio` is u_i / PROP_i; it is absent
/// when PROP_i = 0, in which case the agent counts as satisfied outright
/// (u_i >= 0 = PROP_i always holds in this model).
struct PropEntry {
    Rational share;
    std::optional<Rational> ratio;
    bool satisfied = false;

    friend bool operator==(const PropEntry& a, const PropEntry& b) = default;
};

/// Result of the EF/PEF/PROP checkers. Violation lists hold ordered pairs
/// (i, j) in lexicographic order; the PEF list is always a subset of the
/// EF list. The prop section is populated by check_prop only.
struct FairnessReport {
    std::vector<AgentUtility> utilities;
    std::vector<std::pair<int, int>> ef_violations;
    std::vector<std::pair<int, int>> pef_violations;
    std::vector<PropEntry> prop;
    std::optional<Rational> min_prop_ratio;  // absent when every PROP_i = 0
    bool has_violations = false;             // EF/PEF sections populated
    bool has_prop = false;                   // prop section populated

    bool ef() const { return ef_violations.empty(); }
    bool pef() const { return pef_violations.empty(); }
    bool is_prop() const {
        return !min_prop_ratio.has_value() || *min_prop_ratio >= Rational(1);
    }

    friend bool operator==(const FairnessReport& a, const FairnessReport& b) = default;
};

/// (internal, external, total) utility of one agent, all exact.
AgentUtility utility(const Instance& inst, const Assignment& x, int agent);

/// Pair (i, j) is EF-violating iff u_i strictly improves after the swap.
FairnessReport check_ef(const Instance& inst, const Assignment& x);

/// Pair (i, j) is PEF-violating iff BOTH v_i and e_i strictly improve after
/// the swap. Every PEF violation is also an EF violation.
FairnessReport check_pef(const Instance& inst, const Assignment& x);

/// Proportional benchmark of one agent:
///   PROP_i = (1/m) sum_j v_ij + (n/m - 1) * (1/(n-1)) sum_l e_il.
/// Raises DegenerateInstanceError when n = 1.
Rational prop_share(const Instance& inst, int agent);

/// Per-agent PROP shares and ratios plus the minimum ratio over agents.
/// min ratio >= 1 means the assignment is PROP.
FairnessReport check_prop(const Instance& inst, const Assignment& x);

/// The two per-agent conditions behind the Pareto-style PROP guarantee for
/// dorm-sharing instances, evaluated literally:
///   cond1: the agent's resource is weakly preferred to at least half of
///          all resources (2 * count >= m);
///   cond2: e_i(X) >= nearest_int((c-1)/(n-1) * sum_l e_il).
struct ParetoPropResult {
    bool cond1 = false;
    bool cond2 = false;
    int cond1_count = 0;          // |{j : v_{i r_i(X)} >= v_ij}|
    long long cond2_threshold = 0;
};

/// Requires a dorm-sharing instance; raises PreconditionError otherwise.
ParetoPropResult check_pareto_prop(const Instance& inst, const Assignment& x, int agent);

}  // namespace fairshare
