#pragma once

#include "fairshare/graph.hpp"
#include "fairshare/instance.hpp"

namespace fairshare {

/// A clique decision instance: does `graph` contain a clique of size k?
struct CliqueInstance {
    Graph graph;
    int k = 0;
};

/// Preprocessing that lifts the target above |V|/2, the regime the
/// assignment reductions need. When k <= |V|/2, adds |V| dummy vertices
/// forming a clique, each connected to every original vertex, and raises
/// the target to k + |V|; a clique of the new size must use all dummies
/// plus a k-clique of the original graph, so yes/no status is preserved.
/// When k > |V|/2 already, returns the input unchanged.
CliqueInstance pad_clique(const CliqueInstance& ci);

/// Clique -> EF-existence. Builds an instance with 4k agents on two
/// resources of capacity 2k: one vertex agent a_i per vertex (value
/// 2k - d_i - 1 on resource 1, friends per the graph), one twin agent per
/// vertex (mutual externality 1 with its a_i), and 4k - 2|V| filler agents
/// who only want resource 1. The instance admits an EF assignment iff the
/// graph has a k-clique. Requires k > |V|/2.
Instance reduce_clique_to_ef(const CliqueInstance& ci);

/// Clique -> PEF-existence. Builds an instance with 2k + |V| agents on two
/// resources with capacities k + |V| and k: every agent values resource 1
/// at 1 and resource 2 at 0; a block of 2k mutually-friendly agents anchors
/// resource 1; vertex agent a_i is friends with its graph neighbors and
/// with the first 2k - d_i - 2 block agents, for 2k - 2 friends total.
/// The instance admits a PEF assignment iff the graph has a k-clique.
/// Requires k > |V|/2.
Instance reduce_clique_to_pef(const CliqueInstance& ci);

}  // namespace fairshare
