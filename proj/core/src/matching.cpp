#include "fairshare/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace fairshare {

namespace {

/// Edmonds' augmenting-path search with blossom contraction, array based.
/// An optional excluded vertex is treated as deleted, which lets the
/// Gallai-Edmonds construction re-run searches on G - v cheaply.
class BlossomSearch {
public:
    explicit BlossomSearch(const Graph& g, int excluded = -1)
        : g_(g),
          n_(g.vertex_count()),
          excluded_(excluded),
          mate_(n_, -1),
          parent_(n_),
          base_(n_),
          used_(n_),
          blossom_(n_),
          lca_used_(n_) {}

    /// Starts from an existing matching; the excluded vertex and its mate
    /// (if any) are unmatched first.
    void seed(const std::vector<int>& mate) {
        mate_ = mate;
        if (excluded_ >= 0 && mate_[excluded_] != -1) {
            mate_[mate_[excluded_]] = -1;
            mate_[excluded_] = -1;
        }
    }

    void greedy_init() {
        for (int v = 0; v < n_; ++v) {
            if (v == excluded_ || mate_[v] != -1) {
                continue;
            }
            for (int to : g_.neighbors(v)) {
                if (to != excluded_ && mate_[to] == -1) {
                    mate_[v] = to;
                    mate_[to] = v;
                    break;
                }
            }
        }
    }

    /// One augmentation attempt from every currently unmatched vertex.
    /// Returns true as soon as one augmentation succeeds. If it returns
    /// false, the current matching is maximum.
    bool augment_once() {
        for (int v = 0; v < n_; ++v) {
            if (v == excluded_ || mate_[v] != -1) {
                continue;
            }
            int finish = find_path(v);
            if (finish != -1) {
                augment(finish);
                return true;
            }
        }
        return false;
    }

    /// Full maximum matching: greedy start, then one root pass. A root with
    /// no augmenting path now never gains one from later augmentations.
    void solve() {
        greedy_init();
        for (int v = 0; v < n_; ++v) {
            if (v == excluded_ || mate_[v] != -1) {
                continue;
            }
            int finish = find_path(v);
            if (finish != -1) {
                augment(finish);
            }
        }
    }

    const std::vector<int>& mates() const { return mate_; }

private:
    int lca(int a, int b) {
        std::fill(lca_used_.begin(), lca_used_.end(), false);
        int cur = a;
        for (;;) {
            cur = base_[cur];
            lca_used_[cur] = true;
            if (mate_[cur] == -1) {
                break;
            }
            cur = parent_[mate_[cur]];
        }
        cur = b;
        for (;;) {
            cur = base_[cur];
            if (lca_used_[cur]) {
                return cur;
            }
            cur = parent_[mate_[cur]];
        }
    }

    void mark_path(int v, int stop_base, int child) {
        while (base_[v] != stop_base) {
            blossom_[base_[v]] = true;
            blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);

        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (to == excluded_ || base_[v] == base_[to] || mate_[v] == to) {
                    continue;
                }
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (i != excluded_ && blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) {
                        return to;
                    }
                    used_[mate_[to]] = true;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int finish) {
        int v = finish;
        while (v != -1) {
            int pv = parent_[v];
            int ppv = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = ppv;
        }
    }

    const Graph& g_;
    int n_;
    int excluded_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;
    std::vector<char> lca_used_;
};

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// Neighborhood of a left set on a Bigraph, as a flag vector over rights.
std::vector<char> neighborhood_flags(const Bigraph& b, const std::vector<char>& in_s) {
    std::vector<char> result(b.right_count(), false);
    for (int l = 0; l < b.left_count(); ++l) {
        if (!in_s[l]) {
            continue;
        }
        for (int r : b.left_neighbors(l)) {
            result[r] = true;
        }
    }
    return result;
}

/// Alternating closure of {seed_left}: repeatedly add the mate of every
/// neighbor of the current set. `excluded_right` (if >= 0) never
/// contributes its mate.
std::vector<char> alternating_closure(const Bigraph& b, const BiMatching& m, int seed_left,
                                      int excluded_right) {
    std::vector<char> in_s(b.left_count(), false);
    std::vector<char> seen(b.right_count(), false);
    std::vector<int> stack{seed_left};
    in_s[seed_left] = true;
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : b.left_neighbors(l)) {
            if (r == excluded_right || seen[r]) {
                continue;
            }
            seen[r] = true;
            int mate = m.right_mate[r];
            if (mate != -1 && !in_s[mate]) {
                in_s[mate] = true;
                stack.push_back(mate);
            }
        }
    }
    return in_s;
}

void require_left_saturated(const BiMatching& m) {
    if (!m.saturates_left()) {
        throw PreconditionError("matching does not saturate the left side");
    }
}

/// Max-flow network for the anchored-surplus computation on large left
/// sides: minimizing |N(S)| - |S| over sets S containing a fixed vertex is
/// a min-cut (project-selection) problem.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count) : head_(node_count, -1) {}

    void add_edge(int from, int to, long long cap) {
        edges_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(edges_.size()) - 1;
    }

    long long max_flow(int source, int sink) {
        long long total = 0;
        for (;;) {
            auto parent_edge = bfs(source, sink);
            if (parent_edge[sink] == -1) {
                break;
            }
            long long bottleneck = std::numeric_limits<long long>::max();
            for (int v = sink; v != source;) {
                int e = parent_edge[v];
                bottleneck = std::min(bottleneck, edges_[e].cap);
                v = edges_[e ^ 1].to;
            }
            for (int v = sink; v != source;) {
                int e = parent_edge[v];
                edges_[e].cap -= bottleneck;
                edges_[e ^ 1].cap += bottleneck;
                v = edges_[e ^ 1].to;
            }
            total += bottleneck;
        }
        return total;
    }

    /// Vertices reachable from `source` in the residual network.
    std::vector<char> reachable(int source) const {
        std::vector<char> seen(head_.size(), false);
        std::vector<int> stack{source};
        seen[source] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = head_[v]; e != -1; e = edges_[e].next) {
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = true;
                    stack.push_back(edges_[e].to);
                }
            }
        }
        return seen;
    }

private:
    struct Edge {
        int to;
        int next;
        long long cap;
    };

    std::vector<int> bfs(int source, int sink) const {
        std::vector<int> parent_edge(head_.size(), -1);
        std::vector<char> seen(head_.size(), false);
        std::queue<int> q;
        q.push(source);
        seen[source] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (v == sink) {
                break;
            }
            for (int e = head_[v]; e != -1; e = edges_[e].next) {
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = true;
                    parent_edge[edges_[e].to] = e;
                    q.push(edges_[e].to);
                }
            }
        }
        return parent_edge;
    }

    std::vector<int> head_;
    std::vector<Edge> edges_;
};

SurplusResult surplus_by_subsets(const Bigraph& b) {
    const int na = b.left_count();
    const int blocks = (b.right_count() + 63) / 64;
    std::vector<std::vector<unsigned long long>> nbr(na,
                                                     std::vector<unsigned long long>(blocks, 0));
    for (int l = 0; l < na; ++l) {
        for (int r : b.left_neighbors(l)) {
            nbr[l][r / 64] |= 1ULL << (r % 64);
        }
    }
    SurplusResult best;
    std::vector<unsigned long long> acc(blocks);
    for (unsigned mask = 1; mask < (1u << na); ++mask) {
        std::fill(acc.begin(), acc.end(), 0);
        int size = 0;
        for (int l = 0; l < na; ++l) {
            if (mask & (1u << l)) {
                ++size;
                for (int w = 0; w < blocks; ++w) {
                    acc[w] |= nbr[l][w];
                }
            }
        }
        int nsize = 0;
        for (unsigned long long word : acc) {
            nsize += __builtin_popcountll(word);
        }
        int value = nsize - size;
        if (value < best.min_surplus) {
            best.min_surplus = value;
            best.witness.clear();
            for (int l = 0; l < na; ++l) {
                if (mask & (1u << l)) {
                    best.witness.push_back(l);
                }
            }
        }
    }
    return best;
}

SurplusResult surplus_by_cuts(const Bigraph& b) {
    const int na = b.left_count();
    const int nr = b.right_count();
    const int source = 0;
    const int sink = 1 + na + nr;
    const long long inf = std::numeric_limits<long long>::max() / 4;

    SurplusResult best;
    for (int anchor = 0; anchor < na; ++anchor) {
        FlowNetwork net(na + nr + 2);
        for (int l = 0; l < na; ++l) {
            net.add_edge(source, 1 + l, l == anchor ? inf : 1);
            for (int r : b.left_neighbors(l)) {
                net.add_edge(1 + l, 1 + na + r, inf);
            }
        }
        for (int r = 0; r < nr; ++r) {
            net.add_edge(1 + na + r, sink, 1);
        }
        net.max_flow(source, sink);
        auto reach = net.reachable(source);
        std::vector<char> in_s(na, false);
        for (int l = 0; l < na; ++l) {
            in_s[l] = reach[1 + l];
        }
        auto nbr = neighborhood_flags(b, in_s);
        int size = static_cast<int>(std::count(in_s.begin(), in_s.end(), true));
        int nsize = static_cast<int>(std::count(nbr.begin(), nbr.end(), true));
        int value = nsize - size;
        if (value < best.min_surplus) {
            best.min_surplus = value;
            best.witness.clear();
            for (int l = 0; l < na; ++l) {
                if (in_s[l]) {
                    best.witness.push_back(l);
                }
            }
        }
    }
    return best;
}

}  // namespace

Matching max_matching(const Graph& g) {
    BlossomSearch search(g);
    search.solve();
    return Matching(search.mates());
}

BiMatching bipartite_max_matching(const Bigraph& b) {
    BiMatching m{std::vector<int>(b.left_count(), -1), std::vector<int>(b.right_count(), -1)};
    std::vector<char> visited(b.right_count());

    auto try_augment = [&](auto&& self, int l) -> bool {
        for (int r : b.left_neighbors(l)) {
            if (visited[r]) {
                continue;
            }
            visited[r] = true;
            if (m.right_mate[r] == -1 || self(self, m.right_mate[r])) {
                m.left_mate[l] = r;
                m.right_mate[r] = l;
                return true;
            }
        }
        return false;
    };

    for (int l = 0; l < b.left_count(); ++l) {
        std::fill(visited.begin(), visited.end(), false);
        try_augment(try_augment, l);
    }
    return m;
}

int GEDecomposition::odd_component_count() const {
    int count = 0;
    for (const auto& comp : components) {
        if (comp.odd) {
            ++count;
        }
    }
    return count;
}

GEDecomposition gallai_edmonds(const Graph& g) {
    const int n = g.vertex_count();
    Matching mm = max_matching(g);

    // D = vertices whose removal does not shrink the maximum matching,
    // i.e. vertices missed by some maximum matching. A vertex already
    // missed by mm qualifies outright; otherwise drop its edge from mm
    // and look for one augmentation in G - v.
    std::vector<char> in_d(n, false);
    for (int v = 0; v < n; ++v) {
        if (!mm.covers(v)) {
            in_d[v] = true;
            continue;
        }
        BlossomSearch search(g, v);
        search.seed(mm.mates());
        if (search.augment_once()) {
            in_d[v] = true;
        }
    }

    std::vector<char> in_a(n, false);
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) {
            continue;
        }
        for (int to : g.neighbors(v)) {
            if (in_d[to]) {
                in_a[v] = true;
                break;
            }
        }
    }

    GEDecomposition decomp;
    for (int v = 0; v < n; ++v) {
        if (in_d[v]) {
            decomp.d.push_back(v);
        } else if (in_a[v]) {
            decomp.a.push_back(v);
        } else {
            decomp.c.push_back(v);
        }
    }

    // Connected components of G \ A, discovered lowest vertex first.
    std::vector<char> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (in_a[start] || seen[start]) {
            continue;
        }
        GEDecomposition::Component comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (int to : g.neighbors(v)) {
                if (!in_a[to] && !seen[to]) {
                    seen[to] = true;
                    stack.push_back(to);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.odd = comp.vertices.size() % 2 == 1;
        decomp.components.push_back(std::move(comp));
    }
    return decomp;
}

bool verify_tutte(const Graph& g, const GEDecomposition& decomp, const Matching& m) {
    if (!m.valid_for(g)) {
        throw PreconditionError("matching is not a matching of the graph");
    }
    if (m.size() != max_matching(g).size()) {
        throw PreconditionError("matching is not maximum");
    }

    const int n = g.vertex_count();
    std::vector<int> comp_of(n, -1);
    std::vector<char> in_a(n, false);
    for (int v : decomp.a) {
        if (v < 0 || v >= n) {
            return false;
        }
        in_a[v] = true;
    }
    for (int ci = 0; ci < static_cast<int>(decomp.components.size()); ++ci) {
        for (int v : decomp.components[ci].vertices) {
            if (v < 0 || v >= n || in_a[v] || comp_of[v] != -1) {
                return false;
            }
            comp_of[v] = ci;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!in_a[v] && comp_of[v] == -1) {
            return false;
        }
    }

    std::vector<int> internal_covered(decomp.components.size(), 0);
    std::vector<int> a_edges_into(decomp.components.size(), 0);
    for (const auto& [u, v] : m.edges()) {
        if (in_a[u] && in_a[v]) {
            return false;
        }
        if (in_a[u] || in_a[v]) {
            int w = in_a[u] ? v : u;
            int cw = comp_of[w];
            if (!decomp.components[cw].odd) {
                return false;
            }
            if (++a_edges_into[cw] > 1) {
                return false;  // two A-vertices matched into one component
            }
        } else {
            if (comp_of[u] != comp_of[v]) {
                return false;
            }
            internal_covered[comp_of[u]] += 2;
        }
    }
    for (int v : decomp.a) {
        if (!m.covers(v)) {
            return false;
        }
    }
    for (int ci = 0; ci < static_cast<int>(decomp.components.size()); ++ci) {
        int size = static_cast<int>(decomp.components[ci].vertices.size());
        int expected = decomp.components[ci].odd ? size - 1 : size;
        if (internal_covered[ci] != expected) {
            return false;
        }
    }
    return true;
}

SurplusResult surplus(const Bigraph& b) {
    if (b.left_count() == 0) {
        return {};
    }
    if (b.left_count() <= 20) {
        return surplus_by_subsets(b);
    }
    return surplus_by_cuts(b);
}

std::optional<std::vector<int>> find_tight_set(const Bigraph& b, const BiMatching& m) {
    require_left_saturated(m);
    for (int l = 0; l < b.right_count(); ++l) {
        if (m.right_mate[l] == -1) {
            continue;
        }
        auto in_s = alternating_closure(b, m, m.right_mate[l], -1);
        auto nbr = neighborhood_flags(b, in_s);
        bool tight = true;
        for (int r = 0; r < b.right_count(); ++r) {
            if (nbr[r] && (m.right_mate[r] == -1 || !in_s[m.right_mate[r]])) {
                tight = false;
                break;
            }
        }
        if (tight) {
            std::vector<int> set;
            for (int a = 0; a < b.left_count(); ++a) {
                if (in_s[a]) {
                    set.push_back(a);
                }
            }
            return sorted(std::move(set));
        }
    }
    return std::nullopt;
}

std::optional<NearTightSet> find_near_tight_set(const Bigraph& b, const BiMatching& m) {
    require_left_saturated(m);
    for (int l = 0; l < b.right_count(); ++l) {
        if (m.right_mate[l] == -1) {
            continue;
        }
        for (int l_star = 0; l_star < b.right_count(); ++l_star) {
            if (l_star == l) {
                continue;
            }
            auto in_s = alternating_closure(b, m, m.right_mate[l], l_star);
            auto nbr = neighborhood_flags(b, in_s);
            if (!nbr[l_star]) {
                continue;
            }
            if (m.right_mate[l_star] != -1 && in_s[m.right_mate[l_star]]) {
                continue;
            }
            bool good = true;
            for (int r = 0; r < b.right_count(); ++r) {
                if (r == l_star || !nbr[r]) {
                    continue;
                }
                if (m.right_mate[r] == -1 || !in_s[m.right_mate[r]]) {
                    good = false;
                    break;
                }
            }
            if (!good) {
                continue;
            }
            NearTightSet result;
            for (int a = 0; a < b.left_count(); ++a) {
                if (in_s[a]) {
                    result.set.push_back(a);
                }
            }
            result.designated = l_star;
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace fairshare
