#pragma once

#include <vector>

#include "netperturb/graph.hpp"

namespace netperturb {

struct CutResult {
  Rational value;
  // Every original edge crossing the source-side/sink-side partition,
  // zero-capacity ones included: removing the set disconnects source from sink.
  std::vector<int> cut_edge_ids;
};

// Edmonds-Karp. Deterministic: BFS follows edge insertion order.
CutResult min_cut(const FlowNetwork& net);

}  // namespace netperturb
