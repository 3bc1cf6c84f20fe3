#include "netperturb/insertion.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "netperturb/arborescence.hpp"
#include "netperturb/controllability.hpp"
#include "netperturb/matching.hpp"

namespace netperturb {

namespace {

std::string describe(bool is_input, const Edge& e) {
  return std::string(is_input ? "input" : "state") + " edge (" + std::to_string(e.from) +
         "," + std::to_string(e.to) + ")";
}

}  // namespace

InsertionProblem normalize(const StructuredSystem& base,
                           const std::vector<Edge>& a_cand,
                           const std::vector<Rational>& a_cand_costs,
                           const std::vector<Edge>& b_cand,
                           const std::vector<Rational>& b_cand_costs) {
  InsertionProblem p;
  p.state_count = base.state_count;
  p.input_count = base.input_count;
  std::map<std::tuple<bool, int, int>, int> index;  // -> candidate id
  std::vector<char> base_flag;
  auto add = [&](bool is_input, const Edge& e, const Rational& cost, bool from_base) {
    auto key = std::make_tuple(is_input, e.from, e.to);
    auto it = index.find(key);
    if (it == index.end()) {
      index[key] = static_cast<int>(p.candidates.size());
      p.candidates.push_back({is_input, e, from_base ? Rational(0) : cost});
      base_flag.push_back(from_base);
      return;
    }
    // A base edge absorbs any offer of the same edge; repeated offers must agree.
    if (!base_flag[it->second] && p.candidates[it->second].cost != cost)
      throw std::invalid_argument("normalize: " + describe(is_input, e) +
                                  " offered twice with conflicting costs");
  };
  for (size_t i = 0; i < base.a_edges.size(); ++i) add(false, base.a_edges[i], 0, true);
  for (size_t i = 0; i < base.b_edges.size(); ++i) add(true, base.b_edges[i], 0, true);
  for (size_t i = 0; i < a_cand.size(); ++i) add(false, a_cand[i], a_cand_costs[i], false);
  for (size_t i = 0; i < b_cand.size(); ++i) add(true, b_cand[i], b_cand_costs[i], false);
  return p;
}

StructuredSystem induced_system(const InsertionProblem& p, const std::vector<int>& chosen) {
  StructuredSystem s;
  s.state_count = p.state_count;
  s.input_count = p.input_count;
  for (int id : chosen) {
    const Candidate& c = p.candidates[id];
    (c.is_input ? s.b_edges : s.a_edges).push_back(c.edge);
  }
  return s;
}

StructuredSystem full_system(const InsertionProblem& p) {
  std::vector<int> all(p.candidates.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return induced_system(p, all);
}

bool insertion_feasible(const InsertionProblem& p) {
  return is_structurally_controllable(full_system(p)).controllable;
}

namespace {

// The pipeline, with some candidates barred. Used directly by approx_alg1
// (nothing barred) and by the improvement rounds.
PerturbationResult run_pipeline(const InsertionProblem& p, const std::vector<char>& barred) {
  PerturbationResult out;
  out.method = Method::approx_alg1;
  int n = p.state_count, q = p.input_count;
  int k = static_cast<int>(p.candidates.size());

  std::vector<int> active;  // candidate ids in play
  for (int i = 0; i < k; ++i)
    if (!barred[i]) active.push_back(i);

  {
    StructuredSystem all = induced_system(p, active);
    if (!is_structurally_controllable(all).controllable) return out;  // infeasible
  }

  // Step 1: cheapest forest rooted in the inputs over every candidate.
  Digraph d;
  d.vertex_count = n + q;
  for (int id : active) {
    const Candidate& c = p.candidates[id];
    d.edges.push_back({c.is_input ? n + c.edge.from : c.edge.from, c.edge.to});
    d.costs.push_back(c.cost);
  }
  std::vector<int> roots(q);
  for (int j = 0; j < q; ++j) roots[j] = n + j;
  ForestResult forest = min_cost_spanning_forest(d, roots);
  if (!forest.feasible) return out;
  std::vector<char> in_forest(k, 0);
  for (int di : forest.edge_ids) in_forest[active[di]] = 1;

  // Step 2: cheapest right-saturating matching with forest edges free.
  BipartiteGraph b;
  b.left_count = n + q;
  b.right_count = n;
  for (int id : active) {
    const Candidate& c = p.candidates[id];
    b.edges.push_back({c.is_input ? n + c.edge.from : c.edge.from, c.edge.to});
    b.costs.push_back(in_forest[id] ? Rational(0) : c.cost);
  }
  MatchingResult matching = min_cost_max_matching(b, true);
  if (!matching.feasible) return out;
  std::vector<char> in_matching(k, 0);
  for (int bi : matching.edge_ids) in_matching[active[bi]] = 1;

  // Step 3: rebuild the forest over forest-or-matching edges, matching free.
  Digraph d2;
  d2.vertex_count = n + q;
  std::vector<int> d2_ids;
  for (int id : active)
    if (in_forest[id] || in_matching[id]) {
      const Candidate& c = p.candidates[id];
      d2.edges.push_back({c.is_input ? n + c.edge.from : c.edge.from, c.edge.to});
      d2.costs.push_back(in_matching[id] ? Rational(0) : c.cost);
      d2_ids.push_back(id);
    }
  ForestResult forest2 = min_cost_spanning_forest(d2, roots);
  if (!forest2.feasible) return out;

  // Step 4: the union, priced at original costs.
  std::vector<char> in_result(k, 0);
  out.forest_ids.clear();
  for (int di : forest2.edge_ids) {
    out.forest_ids.push_back(d2_ids[di]);
    in_result[d2_ids[di]] = 1;
  }
  std::sort(out.forest_ids.begin(), out.forest_ids.end());
  for (int id = 0; id < k; ++id)
    if (in_matching[id]) {
      out.matching_ids.push_back(id);
      in_result[id] = 1;
    }
  for (int id = 0; id < k; ++id)
    if (in_result[id]) {
      out.chosen.push_back(id);
      out.total_cost += p.candidates[id].cost;
    }
  out.status = PerturbStatus::ok;
  return out;
}

}  // namespace

PerturbationResult approx_alg1(const InsertionProblem& p) {
  return run_pipeline(p, std::vector<char>(p.candidates.size(), 0));
}

PerturbationResult improve_iterative(const InsertionProblem& p,
                                     const PerturbationResult& start, int max_rounds) {
  PerturbationResult current = start;
  std::vector<char> excluded(p.candidates.size(), 0);
  for (int round = 0; round < max_rounds; ++round) {
    if (current.status != PerturbStatus::ok) break;
    PerturbationResult best;
    int best_edge = -1;
    for (int e : current.forest_ids) {
      std::vector<char> barred = excluded;
      barred[e] = 1;
      PerturbationResult variant = run_pipeline(p, barred);
      if (variant.status != PerturbStatus::ok) continue;
      if (best_edge == -1 || variant.total_cost < best.total_cost) {
        best = variant;
        best_edge = e;
      }
    }
    if (best_edge == -1 || !(best.total_cost < current.total_cost)) break;
    current = best;
    excluded[best_edge] = 1;
  }
  return current;
}

PerturbationResult exact_insertion(const InsertionProblem& p, SearchMode mode) {
  int cap = brute_force_cap(20);
  int k = static_cast<int>(p.candidates.size());
  if (k > cap)
    throw std::invalid_argument("exact_insertion: " + std::to_string(k) +
                                " candidates exceed the cap of " + std::to_string(cap));
  std::vector<Rational> costs(k);
  for (int i = 0; i < k; ++i) costs[i] = p.candidates[i].cost;
  auto controllable = [&p](const std::vector<int>& chosen) {
    return is_structurally_controllable(induced_system(p, chosen)).controllable;
  };
  SubsetSearchResult found = min_cost_subset(costs, controllable, mode);
  PerturbationResult out;
  out.method = Method::exact;
  if (found.found) {
    out.status = PerturbStatus::ok;
    out.chosen = found.chosen;
    out.total_cost = found.cost;
  }
  return out;
}

}  // namespace netperturb
