#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairshare/instance.hpp"

namespace fairshare {

/// Identifier of the pseudorandom scheme used by random_dorm, recorded in
/// generated-file metadata so fixtures stay valid across toolchains.
inline constexpr std::string_view kRandomScheme = "splitmix64-v1";

struct GeneratedInstance {
    Instance instance;
    std::optional<Assignment> assignment;  // reference assignment, when the family defines one
};

/// Canned instances. Known names:
///   no-pef-cap5   : 10 agents, 2 dorms of capacity 5; K5 on agents 0..4
///                   plus pendant edges {i, i+5}; dorm 0 worth 1 to agents
///                   0..6, dorm 1 worth 1 to agents 7..9. No PEF assignment
///                   exists.
///   no-pef-cap3   : 9 agents, 3 dorms of capacity 3; friend pairs
///                   {0,1},{2,3},{4,5},{6,7}, agent 8 isolated; dorm j worth
///                   j+1 to everyone. No PEF assignment exists.
///   pef-not-pprop : 9 agents, 3 dorms of capacity 3; K4 on 0..3, edge
///                   {4,5}, triangle {6,7,8}; dorm j worth j+1. Ships with
///                   the reference assignment ({0,1,2},{3,4,5},{6,7,8}).
/// Unknown names raise PreconditionError.
GeneratedInstance canned_instance(const std::string& name);

/// Tightness families, each with the assignment whose ratio is analyzed:
///   ef-not-prop  : c = [1, 3], agent 0 values only sharing with agent 3
///                  (externality T > 0); the reference assignment is EF
///                  while agent 0's utility is 0 against PROP_0 = T/3.
///   prop4-tight  : capacities [(c-1)m^2+1, c, ..., c]; agent 0's PROP
///                  ratio is exactly (c-1)m^2 / PROP_0, approaching 1-1/c.
///   prop5-tight  : uniform capacity c, n = c*m; agent 0's ratio is exactly
///                  (n^2-n)/(n^2-c), approaching 1-1/n.
/// Requires c >= 2 and m >= 2 for the tight families, T > 0 for ef-not-prop.
GeneratedInstance tight_instance(const std::string& kind, int c, int m, const Rational& t);

/// Seeded random dorm-sharing instance: n = c*m agents, each unordered pair
/// befriended independently with probability edge_prob, values uniform
/// integers in [0, value_max]. Fully determined by the seed (scheme
/// kRandomScheme).
Instance random_dorm(unsigned long long seed, int m, int c, const Rational& edge_prob,
                     int value_max);

}  // namespace fairshare
