#pragma once

#include <optional>
#include <vector>

#include "fairshare/graph.hpp"
#include "fairshare/rational.hpp"

namespace fairshare {

/// Derived classification of an instance. An instance is dorm-sharing when
/// all capacities are equal and the externalities are a symmetric 0/1
/// relation, in which case they form an undirected friendship graph.
struct DormProfile {
    bool is_dorm_sharing = false;
    std::optional<int> uniform_capacity;       // present iff all c_j equal
    std::optional<Graph> externality_graph;    // present iff e is symmetric 0/1

    friend bool operator==(const DormProfile& a, const DormProfile& b) = default;
};

/// Unvalidated instance data, as parsed from JSON or built by a generator.
struct InstanceData {
    int n = 0;
    int m = 0;
    std::vector<int> capacities;
    std::vector<std::vector<Rational>> values;         // n x m
    std::vector<std::vector<Rational>> externalities;  // n x n
};

/// A validated resource-sharing instance: n agents, m resources with
/// capacities summing to n, value matrix v (n x m) and externality matrix
/// e (n x n) with zero diagonal and nonnegative entries.
struct Instance {
    int n = 0;
    int m = 0;
    std::vector<int> capacities;
    std::vector<std::vector<Rational>> values;
    std::vector<std::vector<Rational>> externalities;
    DormProfile profile;

    const Rational& value(int agent, int resource) const { return values[agent][resource]; }
    const Rational& externality(int agent, int other) const { return externalities[agent][other]; }

    friend bool operator==(const Instance& a, const Instance& b) = default;
};

/// Checks every model constraint and derives the DormProfile.
/// Raises ValidationError with a distinct code per violated constraint.
Instance validate_instance(const InstanceData& raw);

/// Full assignment: groups[j] is the sorted set of agents on resource j.
/// A valid assignment partitions the agents with |groups[j]| == c_j.
struct Assignment {
    std::vector<std::vector<int>> groups;

    /// groups sorted in place; call after constructing by hand.
    void canonicalize();

    /// agent -> resource index lookup table.
    std::vector<int> resource_of(int n) const;

    friend bool operator==(const Assignment& a, const Assignment& b) = default;
};

/// Raises ValidationError(BadAssignment) unless X is valid for inst.
void validate_assignment(const Instance& inst, const Assignment& x);

/// The assignment with agents i and j exchanged; everyone else unchanged.
/// Swapping two agents on the same resource is a no-op.
Assignment swap(const Assignment& x, int i, int j);

}  // namespace fairshare
