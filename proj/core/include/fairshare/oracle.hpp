#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fairshare/graph.hpp"
#include "fairshare/instance.hpp"

namespace fairshare {

inline constexpr unsigned long long kDefaultEnumerationLimit = 10'000'000ULL;

/// Exact number of full assignments, n! / prod_j c_j!, saturating at
/// 2^128 - 1. Resources are distinguishable, so nothing is divided out
/// beyond the within-group orderings.
unsigned __int128 assignment_count(const Instance& inst);

std::string count_to_string(unsigned __int128 count);

/// Visits every assignment in lexicographic order of the sorted group
/// contents. The visitor returns false to stop early. The Assignment passed
/// to the visitor is a reused workspace; copy it if you need to keep it.
/// Raises LimitExceededError (with the exact count) when the search space
/// exceeds `limit`.
void enumerate_assignments(const Instance& inst,
                           const std::function<bool(const Assignment&)>& visit,
                           unsigned long long limit = kDefaultEnumerationLimit);

/// First EF assignment in enumeration order, or nullopt when none exists.
std::optional<Assignment> decide_ef(const Instance& inst,
                                    unsigned long long limit = kDefaultEnumerationLimit);

/// First PEF assignment in enumeration order, or nullopt when none exists.
std::optional<Assignment> decide_pef(const Instance& inst,
                                     unsigned long long limit = kDefaultEnumerationLimit);

/// Exhaustive maximum matching, |V| <= 16. Deterministic: the first optimum
/// in the fixed recursion order.
Matching brute_max_matching(const Graph& g);

/// Vertices missed by at least one maximum matching, by exhausting all
/// matchings. |V| <= 16.
std::vector<int> brute_missed_set(const Graph& g);

/// Some k-clique (lexicographically first) or nullopt. |V| <= 20.
std::optional<std::vector<int>> brute_clique(const Graph& g, int k);

}  // namespace fairshare
