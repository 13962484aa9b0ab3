#include "fairshare/oracle.hpp"

#include <algorithm>
#include <string>

#include "fairshare/fairness.hpp"

namespace fairshare {

namespace {

using uint128 = unsigned __int128;

constexpr uint128 kSaturated = ~static_cast<uint128>(0);

uint128 saturating_mul(uint128 a, uint128 b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    if (a > kSaturated / b) {
        return kSaturated;
    }
    return a * b;
}

/// Reused state while streaming assignments: groups are built left to
/// right, each group's members chosen in ascending order from the agents
/// still free, which yields lexicographic order of sorted group contents.
class Enumerator {
public:
    Enumerator(const Instance& inst, const std::function<bool(const Assignment&)>& visit)
        : inst_(inst), visit_(visit), taken_(inst.n, false) {
        workspace_.groups.resize(inst.m);
        for (int j = 0; j < inst.m; ++j) {
            workspace_.groups[j].reserve(inst.capacities[j]);
        }
    }

    void run() { fill_group(0); }

private:
    /// True to keep enumerating.
    bool fill_group(int group) {
        if (group == inst_.m) {
            return visit_(workspace_);
        }
        return choose(group, 0, inst_.capacities[group]);
    }

    bool choose(int group, int min_agent, int needed) {
        if (needed == 0) {
            return fill_group(group + 1);
        }
        for (int agent = min_agent; agent <= inst_.n - needed; ++agent) {
            if (taken_[agent]) {
                continue;
            }
            taken_[agent] = true;
            workspace_.groups[group].push_back(agent);
            bool keep_going = choose(group, agent + 1, needed - 1);
            workspace_.groups[group].pop_back();
            taken_[agent] = false;
            if (!keep_going) {
                return false;
            }
        }
        return true;
    }

    const Instance& inst_;
    const std::function<bool(const Assignment&)>& visit_;
    std::vector<char> taken_;
    Assignment workspace_;
};

/// Early-exit fairness checks over the enumerator workspace. Group-level
/// externality sums make each candidate swap O(1).
class FastChecker {
public:
    explicit FastChecker(const Instance& inst) : inst_(inst), resource_of_(inst.n) {}

    void load(const Assignment& x) {
        for (int j = 0; j < inst_.m; ++j) {
            for (int agent : x.groups[j]) {
                resource_of_[agent] = j;
            }
        }
        groups_ = &x.groups;
    }

    bool is_ef() const {
        for (int i = 0; i < inst_.n; ++i) {
            int ri = resource_of_[i];
            Rational now = inst_.values[i][ri] + group_externality(i, ri, i);
            for (int g = 0; g < inst_.m; ++g) {
                if (g == ri) {
                    continue;
                }
                Rational base = inst_.values[i][g] + group_externality(i, g, -1);
                for (int j : (*groups_)[g]) {
                    if (base - inst_.externalities[i][j] > now) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    bool is_pef() const {
        for (int i = 0; i < inst_.n; ++i) {
            int ri = resource_of_[i];
            const Rational& internal_now = inst_.values[i][ri];
            Rational external_now = group_externality(i, ri, i);
            for (int g = 0; g < inst_.m; ++g) {
                if (g == ri || inst_.values[i][g] <= internal_now) {
                    continue;
                }
                Rational base = group_externality(i, g, -1);
                for (int j : (*groups_)[g]) {
                    if (base - inst_.externalities[i][j] > external_now) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

private:
    Rational group_externality(int agent, int group, int skip) const {
        Rational sum;
        for (int member : (*groups_)[group]) {
            if (member != skip) {
                sum += inst_.externalities[agent][member];
            }
        }
        return sum;
    }

    const Instance& inst_;
    std::vector<int> resource_of_;
    const std::vector<std::vector<int>>* groups_ = nullptr;
};

std::optional<Assignment> decide(const Instance& inst, unsigned long long limit, bool pef) {
    FastChecker checker(inst);
    std::optional<Assignment> witness;
    enumerate_assignments(
        inst,
        [&](const Assignment& x) {
            checker.load(x);
            bool ok = pef ? checker.is_pef() : checker.is_ef();
            if (ok) {
                witness = x;
                return false;
            }
            return true;
        },
        limit);
    return witness;
}

}  // namespace

uint128 assignment_count(const Instance& inst) {
    // n! / prod c_j! == prod_j binom(remaining_j, c_j)
    uint128 total = 1;
    int remaining = inst.n;
    for (int c : inst.capacities) {
        // binom(remaining, c) built incrementally; exact at every step
        uint128 binom = 1;
        for (int i = 1; i <= c; ++i) {
            binom = saturating_mul(binom, static_cast<uint128>(remaining - c + i));
            if (binom != kSaturated) {
                binom /= i;
            }
        }
        total = saturating_mul(total, binom);
        remaining -= c;
    }
    return total;
}

std::string count_to_string(uint128 count) {
    if (count == kSaturated) {
        return "more than 10^38";
    }
    if (count == 0) {
        return "0";
    }
    std::string digits;
    while (count > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(count % 10)));
        count /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

void enumerate_assignments(const Instance& inst,
                           const std::function<bool(const Assignment&)>& visit,
                           unsigned long long limit) {
    uint128 count = assignment_count(inst);
    if (count > static_cast<uint128>(limit)) {
        throw LimitExceededError("assignment count " + count_to_string(count) +
                                     " exceeds enumeration limit " + std::to_string(limit),
                                 count);
    }
    Enumerator enumerator(inst, visit);
    enumerator.run();
}

std::optional<Assignment> decide_ef(const Instance& inst, unsigned long long limit) {
    return decide(inst, limit, /*pef=*/false);
}

std::optional<Assignment> decide_pef(const Instance& inst, unsigned long long limit) {
    return decide(inst, limit, /*pef=*/true);
}

namespace {

constexpr int kMatchingVertexLimit = 16;
constexpr int kCliqueVertexLimit = 20;

/// Walks every matching once (branch: leave the lowest free vertex single,
/// or pair it with each free neighbor). Tracks the first maximum matching
/// and the union of uncovered vertices over all maximum matchings.
class MatchingEnumerator {
public:
    explicit MatchingEnumerator(const Graph& g) : g_(g), n_(g.vertex_count()), mate_(n_, -1) {}

    void run() { recurse(0, 0); }

    int best_size() const { return best_size_; }
    const std::vector<int>& best_mate() const { return best_mate_; }
    unsigned missed_mask() const { return missed_mask_; }

private:
    void recurse(int v, int size) {
        while (v < n_ && mate_[v] != -1) {
            ++v;
        }
        if (size + (n_ - v) / 2 < best_size_) {
            return;  // cannot reach the optimum from here
        }
        if (v == n_) {
            unsigned uncovered = 0;
            for (int i = 0; i < n_; ++i) {
                if (mate_[i] == -1) {
                    uncovered |= 1u << i;
                }
            }
            if (size > best_size_) {
                best_size_ = size;
                best_mate_ = mate_;
                missed_mask_ = uncovered;
            } else if (size == best_size_) {
                missed_mask_ |= uncovered;
            }
            return;
        }
        recurse(v + 1, size);  // v stays single
        for (int to : g_.neighbors(v)) {
            if (mate_[to] == -1 && to > v) {
                mate_[v] = to;
                mate_[to] = v;
                recurse(v + 1, size + 1);
                mate_[v] = -1;
                mate_[to] = -1;
            }
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_;
    int best_size_ = -1;
    std::vector<int> best_mate_;
    unsigned missed_mask_ = 0;
};

}  // namespace

Matching brute_max_matching(const Graph& g) {
    if (g.vertex_count() > kMatchingVertexLimit) {
        throw PreconditionError("brute_max_matching supports at most 16 vertices");
    }
    MatchingEnumerator enumerator(g);
    enumerator.run();
    return Matching(enumerator.best_mate());
}

std::vector<int> brute_missed_set(const Graph& g) {
    if (g.vertex_count() > kMatchingVertexLimit) {
        throw PreconditionError("brute_missed_set supports at most 16 vertices");
    }
    MatchingEnumerator enumerator(g);
    enumerator.run();
    std::vector<int> missed;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (enumerator.missed_mask() & (1u << v)) {
            missed.push_back(v);
        }
    }
    return missed;
}

std::optional<std::vector<int>> brute_clique(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n > kCliqueVertexLimit) {
        throw PreconditionError("brute_clique supports at most 20 vertices");
    }
    if (k < 1 || k > n) {
        return std::nullopt;
    }
    std::vector<unsigned> adj_mask(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj_mask[u] |= 1u << v;
        adj_mask[v] |= 1u << u;
    }
    std::vector<int> chosen;
    auto extend = [&](auto&& self, int start, unsigned candidates) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            return true;
        }
        int need = k - static_cast<int>(chosen.size());
        for (int v = start; v <= n - need; ++v) {
            if (!(candidates & (1u << v))) {
                continue;
            }
            chosen.push_back(v);
            if (self(self, v + 1, candidates & adj_mask[v])) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    unsigned all = n == 32 ? ~0u : (1u << n) - 1;
    if (extend(extend, 0, all)) {
        return chosen;
    }
    return std::nullopt;
}

}  // namespace fairshare
