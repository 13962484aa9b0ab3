#include "fairshare/reductions.hpp"

#include <cassert>
#include <string>

namespace fairshare {

namespace {

void require_high_target(const CliqueInstance& ci) {
    int v = ci.graph.vertex_count();
    if (ci.k < 1 || ci.k > v) {
        throw PreconditionError("clique target k=" + std::to_string(ci.k) +
                                " out of range 1.." + std::to_string(v));
    }
    if (2 * ci.k <= v) {
        throw PreconditionError("reduction requires k > |V|/2; apply pad_clique first");
    }
}

InstanceData blank(int n, int m) {
    InstanceData data;
    data.n = n;
    data.m = m;
    data.values.assign(n, std::vector<Rational>(m, Rational(0)));
    data.externalities.assign(n, std::vector<Rational>(n, Rational(0)));
    return data;
}

void befriend(InstanceData& data, int a, int b) {
    data.externalities[a][b] = Rational(1);
    data.externalities[b][a] = Rational(1);
}

}  // namespace

CliqueInstance pad_clique(const CliqueInstance& ci) {
    const int v = ci.graph.vertex_count();
    if (ci.k < 1 || ci.k > v) {
        throw PreconditionError("clique target k=" + std::to_string(ci.k) +
                                " out of range 1.." + std::to_string(v));
    }
    if (2 * ci.k > v) {
        return ci;
    }
    CliqueInstance padded;
    padded.graph = Graph(2 * v, ci.graph.edges());
    for (int d = v; d < 2 * v; ++d) {
        for (int e = d + 1; e < 2 * v; ++e) {
            padded.graph.add_edge(d, e);
        }
        for (int original = 0; original < v; ++original) {
            padded.graph.add_edge(d, original);
        }
    }
    padded.k = ci.k + v;
    return padded;
}

Instance reduce_clique_to_ef(const CliqueInstance& ci) {
    require_high_target(ci);
    const int v = ci.graph.vertex_count();
    const int k = ci.k;
    const int n = 4 * k;

    // Agent layout: vertex agents 0..v-1, twin agents v..2v-1,
    // filler agents 2v..4k-1.
    InstanceData data = blank(n, 2);
    data.capacities = {2 * k, 2 * k};

    for (int i = 0; i < v; ++i) {
        int degree = ci.graph.degree(i);
        data.values[i][0] = Rational(2 * k - degree - 1);
        for (int j : ci.graph.neighbors(i)) {
            befriend(data, i, j);
        }
        befriend(data, i, v + i);
    }
    for (int filler = 2 * v; filler < n; ++filler) {
        data.values[filler][0] = Rational(1);
    }

    Instance inst = validate_instance(data);
    assert(inst.n == 4 * k);
    return inst;
}

Instance reduce_clique_to_pef(const CliqueInstance& ci) {
    require_high_target(ci);
    const int v = ci.graph.vertex_count();
    const int k = ci.k;
    const int n = 2 * k + v;

    // Agent layout: vertex agents 0..v-1, block agents v..v+2k-1.
    InstanceData data = blank(n, 2);
    data.capacities = {k + v, k};

    for (int i = 0; i < n; ++i) {
        data.values[i][0] = Rational(1);
    }
    for (int a = v; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            befriend(data, a, b);
        }
    }
    for (int i = 0; i < v; ++i) {
        for (int j : ci.graph.neighbors(i)) {
            befriend(data, i, j);
        }
        // 2k - d_i - 2 block friends give vertex agent i exactly 2k - 2
        // friends overall. With a k-clique on resource 2, a clique member
        // then keeps k - 1 friends next to it and k - 1 across, so no swap
        // improves both coordinates; one more block friend would hand every
        // clique member a strictly improving swap and void the equivalence.
        int block_friends = 2 * k - ci.graph.degree(i) - 2;
        for (int b = 0; b < block_friends; ++b) {
            befriend(data, i, v + b);
        }
    }

    Instance inst = validate_instance(data);
    assert(inst.n == 2 * k + v);
    return inst;
}

}  // namespace fairshare
