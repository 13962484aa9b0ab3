#pragma once

#include <map>
#include <optional>
#include <string>

#include "fairshare/fairness.hpp"
#include "fairshare/graph.hpp"
#include "fairshare/instance.hpp"
#include "fairshare/solver.hpp"

namespace fairshare {

// File formats. Rationals are encoded as JSON integers when integral and
// as "p/q" strings otherwise; floating-point numbers are rejected.
// Instance files carry either a full "externalities" matrix or a "graph"
// object ({"edges": [[i, j]]}), the latter implying symmetric 0/1
// externalities. Unknown keys are ignored everywhere, so one file can
// bundle an instance with a reference assignment and generator metadata.

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string assignment_to_json(const Assignment& x);
Assignment assignment_from_json(const std::string& text);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string report_to_json(const FairnessReport& report);
FairnessReport report_from_json(const std::string& text);

std::string trace_to_json(const SolveTrace& trace);
SolveTrace trace_from_json(const std::string& text);

/// Instance plus optional embedded reference assignment and metadata, in
/// one document that instance_from_json and assignment_from_json both read.
std::string bundle_to_json(const Instance& inst, const std::optional<Assignment>& assignment,
                           const std::map<std::string, std::string>& meta);

/// The embedded "assignment" of a bundle, when present.
std::optional<Assignment> embedded_assignment_from_json(const std::string& text);

}  // namespace fairshare
