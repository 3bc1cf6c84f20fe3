#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "netperturb/subset_search.hpp"
#include "netperturb/system.hpp"

namespace netperturb {

enum class BreakMechanism { reachability, rank };

struct ActuatorAnalysis {
  PerturbStatus status = PerturbStatus::infeasible;
  std::vector<int> removed_inputs;  // ascending input indices
  Rational total_cost;
  BreakMechanism mechanism = BreakMechanism::reachability;
  Method method = Method::exact;
  // Per source SCC: member states and the cost of its feeding inputs.
  // Filled by the fast path.
  std::vector<std::pair<std::vector<int>, Rational>> scc_costs;
};

// Missing input costs default to 1 per input.
std::vector<Rational> input_cost_vector(const StructuredSystem& s, const CostModel& c);

// Every state carries a self-loop, so rank never breaks; the optimum is the
// cheapest way to starve one source SCC of the state digraph. O(n^2)-ish.
// Throws when a state lacks a self-loop or the system is uncontrollable.
ActuatorAnalysis actuator_fastpath_selfloops(const StructuredSystem& s, const CostModel& c);

// Cost-ordered exhaustive search over input subsets. Default cap: 16 inputs.
ActuatorAnalysis exact_actuator(const StructuredSystem& s, const CostModel& c,
                                SearchMode mode = SearchMode::ordered_heap);

struct PatternMatrix {
  int rows = 0, cols = 0;
  std::vector<Edge> support;  // from = row, to = col
};

// Smallest column set whose generic rank falls short of its size; nullopt when
// no such set exists (full spark). Default cap: 16 columns.
std::optional<int> pattern_girth(const PatternMatrix& m,
                                 SearchMode mode = SearchMode::ordered_heap);

// For systems where each input actuates exactly one state: does deleting the
// inputs in J break generic rank? Decided on the rows that lose actuation;
// agrees with the direct rank of the surviving [A B] pattern.
bool rank_drop_check(const StructuredSystem& s, const std::vector<int>& J);

}  // namespace netperturb
