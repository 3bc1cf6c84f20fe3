#pragma once

#include <vector>

#include "netperturb/subset_search.hpp"
#include "netperturb/system.hpp"

namespace netperturb {

struct Candidate {
  bool is_input = false;  // input->state edge rather than state->state
  Edge edge;
  Rational cost;
};

// Normalized form: base edges reappear as zero-cost candidates, so a solution
// is any candidate subset that is structurally controllable on its own.
struct InsertionProblem {
  int state_count = 0;
  int input_count = 0;
  std::vector<Candidate> candidates;
};

// Candidate order: base a-edges, base b-edges, then the offered a- and
// b-candidates. A candidate duplicating a base edge is absorbed at cost zero;
// two candidates for the same edge with different costs are an error.
InsertionProblem normalize(const StructuredSystem& base,
                           const std::vector<Edge>& a_cand,
                           const std::vector<Rational>& a_cand_costs,
                           const std::vector<Edge>& b_cand,
                           const std::vector<Rational>& b_cand_costs);

StructuredSystem induced_system(const InsertionProblem& p, const std::vector<int>& chosen);
StructuredSystem full_system(const InsertionProblem& p);

// True iff the system using every candidate is structurally controllable.
bool insertion_feasible(const InsertionProblem& p);

// Forest / matching / forest-again pipeline; 2-approximation. Cost is
// reported under the original candidate costs.
PerturbationResult approx_alg1(const InsertionProblem& p);

// Repeatedly forbids one forest edge of the current solution, reruns the
// pipeline, and keeps the variant with the largest cost decrease.
PerturbationResult improve_iterative(const InsertionProblem& p,
                                     const PerturbationResult& start, int max_rounds);

// Cost-ordered exhaustive search. Default cap: 20 candidates.
PerturbationResult exact_insertion(const InsertionProblem& p,
                                   SearchMode mode = SearchMode::ordered_heap);

}  // namespace netperturb
