#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairshare/instance.hpp"
#include "fairshare/matching.hpp"

namespace fairshare {

/// Machine-readable record of one solver run: the Tutte set and maximum
/// matching of the externality graph, the pair placements of the component
/// steps, and one record per Step-4 round.
struct SolveTrace {
    struct PairAssign {
        int first_agent = -1;
        int second_agent = -1;
        int dorm = -1;

        friend bool operator==(const PairAssign&, const PairAssign&) = default;
    };

    struct OddComponentRecord {
        std::vector<int> component;
        int leftover = -1;          // joins L
        std::vector<PairAssign> pairs;

        friend bool operator==(const OddComponentRecord&, const OddComponentRecord&) = default;
    };

    /// One Step-4 round. Cases 1 and 4 assign a single pair of L-agents;
    /// cases 2 and 3 assign one pair per member of the witness set S.
    /// Case 3 additionally designates the agent whose least-preferred dorms
    /// receive the pairs; that agent stays in L.
    struct Round {
        int index = 0;    // 1-based
        int case_id = 0;  // 1..4
        std::vector<PairAssign> pairs;
        std::vector<int> witness;        // S (agent ids), cases 2-3
        std::optional<int> designated;   // case 3 only
        int remaining_a = 0;             // |A| at round start
        int remaining_l = 0;             // |L| at round start

        friend bool operator==(const Round&, const Round&) = default;
    };

    std::vector<int> tutte_set;                     // A
    std::vector<std::pair<int, int>> matching;      // M, as sorted edges
    std::vector<int> initial_unmatched;             // L right after Step 3
    std::vector<PairAssign> step2;                  // even components
    std::vector<OddComponentRecord> step3;          // odd components
    std::vector<Round> rounds;

    friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

/// An internal invariant of the solve loop failed (e.g. the bipartite
/// matching stopped saturating the Tutte side). Carries the partial trace
/// for diagnosis.
class SolverInvariantError : public Error {
public:
    SolverInvariantError(const std::string& what, SolveTrace trace)
        : Error(what), trace_(std::move(trace)) {}
    const SolveTrace& trace() const { return trace_; }

private:
    SolveTrace trace_;
};

struct SolveResult {
    Assignment assignment;
    SolveTrace trace;
};

/// Computes a Pareto-envy-free assignment for a dorm-sharing instance with
/// uniform capacity 2. Pairs covered by a maximum matching of the
/// friendship graph share dorms; everyone else is placed by the four-case
/// loop over the Tutte set A and the leftover agents L, steering the dorms
/// each leftover agent likes least toward the agents they might envy.
/// Deterministic: "arbitrary dorm" always means the lowest-index unassigned
/// dorm, and preference ties break toward lower dorm indices.
SolveResult solve_pef_cap2(const Instance& inst);

}  // namespace fairshare
