#pragma once

#include <vector>

#include "netperturb/graph.hpp"

namespace netperturb {

struct ForestResult {
  bool feasible = false;
  std::vector<int> edge_ids;  // sorted; every non-root has exactly one in-edge
  Rational cost;
};

// Minimum-cost set of edges forming vertex-disjoint arborescences rooted in
// `roots` that together reach every vertex. Self-loops are ignored. Infeasible
// when some non-root vertex cannot be reached. Missing costs count as zero.
ForestResult min_cost_spanning_forest(const Digraph& g, const std::vector<int>& roots);

}  // namespace netperturb
