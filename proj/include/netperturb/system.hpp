#pragma once

#include <vector>

#include "netperturb/graph.hpp"

namespace netperturb {

// Sparsity pattern of a pair (A, B). a_edges[i] = {from: state j, to: state i}
// records a nonzero A(i,j); b_edges[i] = {from: input j, to: state i} records
// a nonzero B(i,j). A nonzero input pattern is recorded, not enforced.
struct StructuredSystem {
  int state_count = 0;
  int input_count = 0;
  std::vector<Edge> a_edges;
  std::vector<Edge> b_edges;
};

struct CostModel {
  std::vector<Rational> a_costs;      // aligned with a_edges
  std::vector<Rational> b_costs;      // aligned with b_edges
  std::vector<Rational> input_costs;  // per input; empty unless actuator costs given
};

// Combined edge id space used everywhere: a_edges first, then b_edges.
inline int edge_count(const StructuredSystem& s) {
  return static_cast<int>(s.a_edges.size() + s.b_edges.size());
}

// Vertices: 0..n-1 states, n..n+q-1 inputs. Edge ids follow the combined space.
Digraph system_digraph(const StructuredSystem& s);
Digraph system_digraph(const StructuredSystem& s, const CostModel& c);

std::vector<int> input_vertex_ids(const StructuredSystem& s);

// Bipartite pattern of [A B]: left 0..n-1 states then n..n+q-1 inputs,
// right 0..n-1 states. Edge ids follow the combined space.
BipartiteGraph system_bipartite(const StructuredSystem& s);
BipartiteGraph system_bipartite(const StructuredSystem& s, const CostModel& c);

// Maximum matching number of the [A B] pattern.
int generic_rank_AB(const StructuredSystem& s);

// Copy without the given combined edge ids (ascending or not; duplicates ok).
StructuredSystem remove_edges(const StructuredSystem& s, const std::vector<int>& ids);

// Copy without the given input columns; remaining inputs are renumbered.
StructuredSystem remove_inputs(const StructuredSystem& s, const std::vector<int>& inputs);

enum class PerturbStatus { ok, infeasible };
enum class Method { exact, approx_alg1, formula, cut };

// Shared result shape for the perturbation solvers. `chosen` holds ids in the
// problem's own space: candidate ids, combined edge ids, or input indices.
struct PerturbationResult {
  PerturbStatus status = PerturbStatus::infeasible;
  std::vector<int> chosen;
  Rational total_cost;
  Method method = Method::exact;
  // Filled by the insertion approximation; the improvement pass perturbs these.
  std::vector<int> forest_ids, matching_ids;
};

}  // namespace netperturb
