#include "netperturb/actuator.hpp"

#include <algorithm>
#include <stdexcept>

#include "netperturb/controllability.hpp"
#include "netperturb/matching.hpp"

namespace netperturb {

std::vector<Rational> input_cost_vector(const StructuredSystem& s, const CostModel& c) {
  if (c.input_costs.empty()) return std::vector<Rational>(s.input_count, Rational(1));
  if (static_cast<int>(c.input_costs.size()) != s.input_count)
    throw std::invalid_argument("input cost vector length does not match input count");
  return c.input_costs;
}

ActuatorAnalysis actuator_fastpath_selfloops(const StructuredSystem& s, const CostModel& c) {
  std::vector<char> has_loop(s.state_count, 0);
  for (const Edge& e : s.a_edges)
    if (e.from == e.to) has_loop[e.from] = 1;
  for (int v = 0; v < s.state_count; ++v)
    if (!has_loop[v])
      throw std::invalid_argument("self-loop fast path needs a self-loop on every state; state " +
                                  std::to_string(v) + " has none");
  if (!is_structurally_controllable(s).controllable)
    throw std::invalid_argument("self-loop fast path needs a structurally controllable system");

  std::vector<Rational> cost = input_cost_vector(s, c);
  // With a loop on every state, rank cannot break: the optimum starves one
  // source SCC. Source SCCs have no incoming state links, so the inputs that
  // reach one are exactly those with a direct link into it.
  auto sources = source_sccs(s);
  std::vector<int> scc_of(s.state_count, -1);
  for (int k = 0; k < static_cast<int>(sources.size()); ++k)
    for (int v : sources[k].first) scc_of[v] = k;

  std::vector<std::vector<char>> feeds(sources.size(),
                                       std::vector<char>(s.input_count, 0));
  for (const Edge& e : s.b_edges)
    if (scc_of[e.to] >= 0) feeds[scc_of[e.to]][e.from] = 1;

  ActuatorAnalysis res;
  res.method = Method::formula;
  res.mechanism = BreakMechanism::reachability;
  int best = -1;
  for (int k = 0; k < static_cast<int>(sources.size()); ++k) {
    Rational total = 0;
    for (int j = 0; j < s.input_count; ++j)
      if (feeds[k][j]) total += cost[j];
    res.scc_costs.emplace_back(sources[k].first, total);
    if (best < 0 || total < res.total_cost) {
      best = k;
      res.total_cost = total;
    }
  }
  for (int j = 0; j < s.input_count; ++j)
    if (feeds[best][j]) res.removed_inputs.push_back(j);
  res.status = PerturbStatus::ok;
  return res;
}

ActuatorAnalysis exact_actuator(const StructuredSystem& s, const CostModel& c,
                                SearchMode mode) {
  if (!is_structurally_controllable(s).controllable)
    throw std::invalid_argument("actuator deletion needs a structurally controllable system");
  int cap = brute_force_cap(16);
  if (s.input_count > cap)
    throw std::invalid_argument("too many inputs for exhaustive search (" +
                                std::to_string(s.input_count) + " > " + std::to_string(cap) + ")");

  std::vector<Rational> cost = input_cost_vector(s, c);
  auto search = min_cost_subset(
      cost,
      [&](const std::vector<int>& J) {
        return !is_structurally_controllable(remove_inputs(s, J)).controllable;
      },
      mode);

  ActuatorAnalysis res;
  res.method = Method::exact;
  if (!search.found) return res;  // unreachable: removing every input breaks n >= 1
  res.status = PerturbStatus::ok;
  res.removed_inputs = search.chosen;
  res.total_cost = search.cost;
  CtrlReport after = is_structurally_controllable(remove_inputs(s, search.chosen));
  res.mechanism = after.unreachable_states.empty() ? BreakMechanism::rank
                                                  : BreakMechanism::reachability;
  return res;
}

std::optional<int> pattern_girth(const PatternMatrix& m, SearchMode mode) {
  int cap = brute_force_cap(16);
  if (m.cols > cap)
    throw std::invalid_argument("too many columns for exhaustive search (" +
                                std::to_string(m.cols) + " > " + std::to_string(cap) + ")");
  for (const Edge& e : m.support)
    if (e.from < 0 || e.from >= m.rows || e.to < 0 || e.to >= m.cols)
      throw std::invalid_argument("pattern entry out of range");

  std::vector<Rational> unit(m.cols, Rational(1));
  auto search = min_cost_subset(
      unit,
      [&](const std::vector<int>& J) {
        if (J.empty()) return false;
        std::vector<int> pos(m.cols, -1);
        for (int i = 0; i < static_cast<int>(J.size()); ++i) pos[J[i]] = i;
        BipartiteGraph bg;
        bg.left_count = static_cast<int>(J.size());
        bg.right_count = m.rows;
        for (const Edge& e : m.support)
          if (pos[e.to] >= 0) bg.edges.push_back({pos[e.to], e.from});
        return matching_number(bg) < static_cast<int>(J.size());
      },
      mode);
  if (!search.found) return std::nullopt;
  return static_cast<int>(search.chosen.size());
}

bool rank_drop_check(const StructuredSystem& s, const std::vector<int>& J) {
  std::vector<int> target(s.input_count, -1);
  for (const Edge& e : s.b_edges) {
    if (target[e.from] >= 0)
      throw std::invalid_argument("rank drop check needs exactly one link per input; input " +
                                  std::to_string(e.from) + " has several");
    target[e.from] = e.to;
  }
  for (int j = 0; j < s.input_count; ++j)
    if (target[j] < 0)
      throw std::invalid_argument("rank drop check needs exactly one link per input; input " +
                                  std::to_string(j) + " has none");

  std::vector<char> removed(s.input_count, 0);
  for (int j : J) removed[j] = 1;
  std::vector<char> still_fed(s.state_count, 0);
  for (int j = 0; j < s.input_count; ++j)
    if (!removed[j]) still_fed[target[j]] = 1;

  // Rows that keep a direct input can always be saturated through it; the rank
  // survives iff the uncovered rows can all be matched inside the state pattern.
  std::vector<int> uncovered;
  for (int v = 0; v < s.state_count; ++v)
    if (!still_fed[v]) uncovered.push_back(v);
  std::vector<int> row_pos(s.state_count, -1);
  for (int i = 0; i < static_cast<int>(uncovered.size()); ++i) row_pos[uncovered[i]] = i;

  BipartiteGraph bg;
  bg.left_count = s.state_count;  // columns of the state pattern
  bg.right_count = static_cast<int>(uncovered.size());
  for (const Edge& e : s.a_edges)
    if (row_pos[e.to] >= 0) bg.edges.push_back({e.from, row_pos[e.to]});
  return matching_number(bg) < static_cast<int>(uncovered.size());
}

}  // namespace netperturb
