#include "fairshare/solver.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace fairshare {

namespace {

class Solver {
public:
    explicit Solver(const Instance& inst)
        : inst_(inst), graph_(*inst.profile.externality_graph) {
        result_.groups.assign(inst_.m, {});
        for (int j = 0; j < inst_.m; ++j) {
            unassigned_.insert(j);
        }
    }

    SolveResult run() {
        step1();
        step2();
        step3();
        step4();
        finish();
        return {std::move(result_), std::move(trace_)};
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw SolverInvariantError(what, trace_);
    }

    /// Dorm a preferred over dorm b by `agent`: higher value, ties toward
    /// the lower index.
    bool prefers(int agent, int a, int b) const {
        const Rational& va = inst_.values[agent][a];
        const Rational& vb = inst_.values[agent][b];
        if (va != vb) {
            return va > vb;
        }
        return a < b;
    }

    /// The k dorms of M~ the agent likes least, worst first.
    std::vector<int> least_preferred(int agent, int k) {
        std::vector<int> dorms(unassigned_.begin(), unassigned_.end());
        if (k > static_cast<int>(dorms.size())) {
            fail("fewer unassigned dorms than pairs to place");
        }
        std::sort(dorms.begin(), dorms.end(),
                  [&](int a, int b) { return prefers(agent, a, b); });
        std::vector<int> out(dorms.end() - k, dorms.end());
        std::reverse(out.begin(), out.end());
        return out;
    }

    int most_preferred(int agent) const {
        int best = -1;
        for (int dorm : unassigned_) {
            if (best == -1 || prefers(agent, dorm, best)) {
                best = dorm;
            }
        }
        return best;
    }

    int lowest_unassigned() const { return *unassigned_.begin(); }

    SolveTrace::PairAssign place_pair(int a, int b, int dorm) {
        if (!unassigned_.count(dorm)) {
            fail("dorm " + std::to_string(dorm) + " assigned twice");
        }
        unassigned_.erase(dorm);
        result_.groups[dorm] = {std::min(a, b), std::max(a, b)};
        return {std::min(a, b), std::max(a, b), dorm};
    }

    void step1() {
        decomp_ = gallai_edmonds(graph_);
        matching_ = max_matching(graph_);
        trace_.tutte_set = decomp_.a;
        trace_.matching = matching_.edges();
    }

    void step2() {
        for (const auto& comp : decomp_.components) {
            if (comp.odd) {
                continue;
            }
            for (int v : comp.vertices) {
                int mate = matching_.mate(v);
                if (mate == -1 || !std::binary_search(comp.vertices.begin(),
                                                      comp.vertices.end(), mate)) {
                    fail("even component is not perfectly matched inside itself");
                }
                if (mate < v) {
                    continue;  // each pair emitted once, at its smaller endpoint
                }
                trace_.step2.push_back(place_pair(v, mate, lowest_unassigned()));
            }
        }
    }

    void step3() {
        for (const auto& comp : decomp_.components) {
            if (!comp.odd) {
                continue;
            }
            SolveTrace::OddComponentRecord record;
            record.component = comp.vertices;
            std::vector<std::pair<int, int>> pairs;
            for (int v : comp.vertices) {
                int mate = matching_.mate(v);
                bool internal = mate != -1 && std::binary_search(comp.vertices.begin(),
                                                                 comp.vertices.end(), mate);
                if (!internal) {
                    if (record.leftover != -1) {
                        fail("odd component has two internally unmatched agents");
                    }
                    record.leftover = v;
                } else if (mate > v) {
                    pairs.emplace_back(v, mate);
                }
            }
            if (record.leftover == -1) {
                fail("odd component has no internally unmatched agent");
            }
            auto dorms = least_preferred(record.leftover, static_cast<int>(pairs.size()));
            for (size_t p = 0; p < pairs.size(); ++p) {
                record.pairs.push_back(place_pair(pairs[p].first, pairs[p].second, dorms[p]));
            }
            leftovers_.push_back(record.leftover);
            trace_.step3.push_back(std::move(record));
        }
        std::sort(leftovers_.begin(), leftovers_.end());
        trace_.initial_unmatched = leftovers_;
    }

    void step4() {
        std::vector<int> a_set = decomp_.a;
        std::vector<int>& l_set = leftovers_;
        int round = 0;

        while (!a_set.empty() || !l_set.empty()) {
            if (++round > inst_.n + 1) {
                fail("assignment loop did not terminate");
            }
            SolveTrace::Round rec;
            rec.index = round;
            rec.remaining_a = static_cast<int>(a_set.size());
            rec.remaining_l = static_cast<int>(l_set.size());

            // G* between the remaining Tutte agents and leftover agents.
            Bigraph gstar(static_cast<int>(a_set.size()), static_cast<int>(l_set.size()));
            for (size_t ai = 0; ai < a_set.size(); ++ai) {
                for (size_t li = 0; li < l_set.size(); ++li) {
                    if (graph_.has_edge(a_set[ai], l_set[li])) {
                        gstar.add_edge(static_cast<int>(ai), static_cast<int>(li));
                    }
                }
            }

            std::vector<char> assigned_a(a_set.size(), false);
            std::vector<char> assigned_l(l_set.size(), false);

            // Case 1: two leftover agents untouched by every G* edge.
            std::vector<int> isolated;
            for (size_t li = 0; li < l_set.size(); ++li) {
                if (gstar.right_neighbors(static_cast<int>(li)).empty()) {
                    isolated.push_back(static_cast<int>(li));
                }
            }
            if (isolated.size() >= 2) {
                rec.case_id = 1;
                int i = isolated[0];
                int j = isolated[1];
                rec.pairs.push_back(place_pair(l_set[i], l_set[j], lowest_unassigned()));
                assigned_l[i] = assigned_l[j] = true;
            } else {
                BiMatching bm = bipartite_max_matching(gstar);
                if (!bm.saturates_left()) {
                    fail("Hall condition failed: G* no longer matches every Tutte agent");
                }
                if (auto tight = find_tight_set(gstar, bm)) {
                    rec.case_id = 2;
                    run_case_2_or_3(gstar, *tight, std::nullopt, a_set, l_set, assigned_a,
                                    assigned_l, rec);
                } else if (auto near = find_near_tight_set(gstar, bm)) {
                    rec.case_id = 3;
                    run_case_2_or_3(gstar, near->set, near->designated, a_set, l_set,
                                    assigned_a, assigned_l, rec);
                } else {
                    rec.case_id = 4;
                    run_case_4(l_set, assigned_l, rec);
                }
            }

            prune(a_set, assigned_a);
            prune(l_set, assigned_l);
            trace_.rounds.push_back(std::move(rec));
        }
    }

    /// Cases 2 and 3 share the machinery: match the witness set S into its
    /// neighborhood and place the matched pairs. Case 2 (no designated
    /// agent) uses the lowest-index unassigned dorms; Case 3 keeps the one
    /// agent its restricted matching leaves out and uses that agent's |S|
    /// least-preferred dorms.
    void run_case_2_or_3(const Bigraph& gstar, const std::vector<int>& witness,
                         std::optional<int> hint_designated, const std::vector<int>& a_set,
                         const std::vector<int>& l_set, std::vector<char>& assigned_a,
                         std::vector<char>& assigned_l, SolveTrace::Round& rec) {
        (void)hint_designated;  // the restricted matching picks the final leftover

        std::vector<char> in_s(gstar.left_count(), false);
        for (int ai : witness) {
            in_s[ai] = true;
        }
        std::vector<int> nbr;  // N(S), ascending
        {
            std::vector<char> seen(gstar.right_count(), false);
            for (int ai : witness) {
                for (int li : gstar.left_neighbors(ai)) {
                    seen[li] = true;
                }
            }
            for (int li = 0; li < gstar.right_count(); ++li) {
                if (seen[li]) {
                    nbr.push_back(li);
                }
            }
        }

        // Restriction of G* to S x N(S), then a fresh maximum matching.
        Bigraph sub(static_cast<int>(witness.size()), static_cast<int>(nbr.size()));
        std::vector<int> right_pos(gstar.right_count(), -1);
        for (size_t p = 0; p < nbr.size(); ++p) {
            right_pos[nbr[p]] = static_cast<int>(p);
        }
        for (size_t p = 0; p < witness.size(); ++p) {
            for (int li : gstar.left_neighbors(witness[p])) {
                sub.add_edge(static_cast<int>(p), right_pos[li]);
            }
        }
        BiMatching sub_matching = bipartite_max_matching(sub);
        if (!sub_matching.saturates_left()) {
            fail("witness set cannot be matched into its neighborhood");
        }

        bool is_case3 = rec.case_id == 3;
        int leftover_li = -1;
        if (is_case3) {
            for (size_t p = 0; p < nbr.size(); ++p) {
                if (sub_matching.right_mate[static_cast<int>(p)] == -1) {
                    leftover_li = nbr[p];
                    break;
                }
            }
            if (leftover_li == -1 || nbr.size() != witness.size() + 1) {
                fail("near-tight witness does not leave exactly one agent over");
            }
            rec.designated = l_set[leftover_li];
        } else if (nbr.size() != witness.size()) {
            fail("tight witness has a neighborhood of different size");
        }

        std::vector<int> dorms;
        if (is_case3) {
            dorms = least_preferred(rec.designated.value(), static_cast<int>(witness.size()));
        }
        for (size_t p = 0; p < witness.size(); ++p) {
            int agent_a = a_set[witness[p]];
            int li = nbr[sub_matching.left_mate[static_cast<int>(p)]];
            int agent_l = l_set[li];
            int dorm = is_case3 ? dorms[p] : lowest_unassigned();
            rec.pairs.push_back(place_pair(agent_a, agent_l, dorm));
            assigned_a[witness[p]] = true;
            assigned_l[li] = true;
            rec.witness.push_back(agent_a);
        }
        std::sort(rec.witness.begin(), rec.witness.end());
    }

    /// Case 4: some two leftover agents share a most-preferred unassigned
    /// dorm (pigeonhole: |L| exceeds |M~| here). First such pair in
    /// lexicographic order wins.
    void run_case_4(const std::vector<int>& l_set, std::vector<char>& assigned_l,
                    SolveTrace::Round& rec) {
        std::vector<int> favorite(l_set.size());
        for (size_t li = 0; li < l_set.size(); ++li) {
            favorite[li] = most_preferred(l_set[li]);
        }
        for (size_t i = 0; i < l_set.size(); ++i) {
            for (size_t j = i + 1; j < l_set.size(); ++j) {
                if (favorite[i] == favorite[j]) {
                    rec.pairs.push_back(place_pair(l_set[i], l_set[j], favorite[i]));
                    assigned_l[i] = assigned_l[j] = true;
                    return;
                }
            }
        }
        fail("no two leftover agents share a most preferred dorm");
    }

    static void prune(std::vector<int>& items, const std::vector<char>& remove) {
        std::vector<int> kept;
        for (size_t i = 0; i < items.size(); ++i) {
            if (!remove[i]) {
                kept.push_back(items[i]);
            }
        }
        items = std::move(kept);
    }

    void finish() {
        if (!unassigned_.empty()) {
            fail("solver finished with unassigned dorms");
        }
        try {
            validate_assignment(inst_, result_);
        } catch (const ValidationError& e) {
            fail(std::string("solver produced an invalid assignment: ") + e.what());
        }
    }

    const Instance& inst_;
    const Graph& graph_;
    GEDecomposition decomp_;
    Matching matching_;
    Assignment result_;
    SolveTrace trace_;
    std::set<int> unassigned_;
    std::vector<int> leftovers_;
};

}  // namespace

SolveResult solve_pef_cap2(const Instance& inst) {
    if (!inst.profile.is_dorm_sharing) {
        throw PreconditionError(
            "solver requires a dorm-sharing instance "
            "(uniform capacities, symmetric 0/1 externalities)");
    }
    if (*inst.profile.uniform_capacity != 2) {
        throw PreconditionError("solver requires capacity exactly 2, got " +
                                std::to_string(*inst.profile.uniform_capacity));
    }
    return Solver(inst).run();
}

}  // namespace fairshare
