#pragma once

#include <vector>

#include "netperturb/graph.hpp"

namespace netperturb {

// Maximum-cardinality matching; returns the matched edge ids, sorted.
std::vector<int> max_matching(const BipartiteGraph& b);

inline int matching_number(const BipartiteGraph& b) {
  return static_cast<int>(max_matching(b).size());
}

struct MatchingResult {
  bool feasible = false;  // meaningful when right saturation was required
  std::vector<int> edge_ids;
  Rational cost;
};

// Minimum-cost matching among maximum matchings (successive shortest
// augmenting paths). With require_right_saturating, feasible is false unless
// every right vertex is matched; the partial maximum matching is still
// returned. Missing costs are treated as zero.
MatchingResult min_cost_max_matching(const BipartiteGraph& b,
                                     bool require_right_saturating);

}  // namespace netperturb
