#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fairshare/graph.hpp"

namespace fairshare {

/// Maximum-cardinality matching on a general graph (augmenting paths with
/// blossom contraction). Deterministic: vertices are processed lowest index
/// first, so a fixed input always yields the same matching.
Matching max_matching(const Graph& g);

/// Maximum-cardinality matching on a bipartite graph, deterministic.
BiMatching bipartite_max_matching(const Bigraph& b);

/// Gallai-Edmonds decomposition. D holds the vertices missed by at least one
/// maximum matching, A = N(D) \ D is the Tutte set, C is the rest.
/// Components of G \ A are listed with their parity, ordered by smallest
/// vertex; all vertex lists are sorted.
struct GEDecomposition {
    std::vector<int> d;
    std::vector<int> a;
    std::vector<int> c;

    struct Component {
        std::vector<int> vertices;
        bool odd = false;
    };
    std::vector<Component> components;

    int odd_component_count() const;
};

GEDecomposition gallai_edmonds(const Graph& g);

/// True iff `m` decomposes per the Tutte-set structure: a near-perfect
/// matching inside each odd component of G \ A, a perfect matching inside
/// each even component, and a matching of every A-vertex into a distinct
/// odd component. Raises PreconditionError unless m is a maximum matching.
bool verify_tutte(const Graph& g, const GEDecomposition& decomp, const Matching& m);

/// surplus(b) = min over nonempty S subsets of the left side of
/// |N(S)| - |S|, together with a minimizing witness. An empty left side has
/// no nonempty subset; the minimum is then the +infinity sentinel.
struct SurplusResult {
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    int min_surplus = kInfinite;
    std::vector<int> witness;  // empty iff min_surplus == kInfinite
};

SurplusResult surplus(const Bigraph& b);

/// Searches for a tight set: nonempty S in the left side with |S| = |N(S)|.
/// For each matched right vertex l (ascending), grows the alternating
/// closure S = {mate(l)}, repeatedly adding mate(i) for i in N(S), and
/// returns the first closure whose neighborhood is fully matched into it.
/// Requires m to saturate the left side.
std::optional<std::vector<int>> find_tight_set(const Bigraph& b, const BiMatching& m);

/// Searches for a near-tight set: S with |S| = |N(S)| - 1 whose designated
/// neighbor i* is not matched into S while every other neighbor is.
/// Enumerates ordered pairs (l, l*) of distinct right vertices and grows the
/// closure of {mate(l)} with l* barred from contributing its mate.
/// Meaningful when no tight set exists (Hall surplus >= 1).
struct NearTightSet {
    std::vector<int> set;    // S, sorted
    int designated = -1;     // i* in N(S), not matched into S
};

std::optional<NearTightSet> find_near_tight_set(const Bigraph& b, const BiMatching& m);

}  // namespace fairshare
