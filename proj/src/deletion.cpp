#include "netperturb/deletion.hpp"

#include <algorithm>
#include <stdexcept>

#include "netperturb/controllability.hpp"
#include "netperturb/matching.hpp"
#include "netperturb/maxflow.hpp"

namespace netperturb {

namespace {

void require_controllable(const StructuredSystem& s, const char* who) {
  if (!is_structurally_controllable(s).controllable)
    throw std::invalid_argument(std::string(who) + ": system is not structurally controllable");
}

std::vector<Rational> combined_costs(const StructuredSystem& s, const CostModel& c) {
  std::vector<Rational> costs;
  costs.reserve(edge_count(s));
  costs.insert(costs.end(), c.a_costs.begin(), c.a_costs.end());
  costs.insert(costs.end(), c.b_costs.begin(), c.b_costs.end());
  return costs;
}

}  // namespace

CutSide t_cut(const StructuredSystem& s, const CostModel& c, Exec exec) {
  require_controllable(s, "t_cut");
  int n = s.state_count, q = s.input_count;
  int m = edge_count(s);
  int na = static_cast<int>(s.a_edges.size());
  int source = n + q;

  FlowNetwork net;
  net.vertex_count = n + q + 1;
  net.source = source;
  Digraph d = system_digraph(s);
  net.edges = d.edges;
  net.capacities = combined_costs(s, c);
  std::vector<Rational> input_total(q);
  for (int i = 0; i < static_cast<int>(s.b_edges.size()); ++i)
    input_total[s.b_edges[i].from] += c.b_costs[i];
  for (int j = 0; j < q; ++j) {
    net.edges.push_back({source, n + j});  // stands for all of input j's edges
    net.capacities.push_back(input_total[j]);
  }

  std::vector<CutResult> per_state(n);
  auto solve_state = [&](int x) {
    FlowNetwork local = net;
    local.sink = x;
    per_state[x] = min_cut(local);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int x = 0; x < n; ++x) solve_state(x);
  } else {
    for (int x = 0; x < n; ++x) solve_state(x);
  }

  int best = 0;
  for (int x = 1; x < n; ++x)
    if (per_state[x].value < per_state[best].value) best = x;

  CutSide out;
  out.critical_state = best;
  out.value = per_state[best].value;
  for (int id : per_state[best].cut_edge_ids) {
    if (id < m) {
      out.edge_ids.push_back(id);
    } else {
      int j = id - m;  // virtual edge: expand to input j's real edges
      for (int i = 0; i < static_cast<int>(s.b_edges.size()); ++i)
        if (s.b_edges[i].from == j) out.edge_ids.push_back(na + i);
    }
  }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

BlockerSide t_bl_exact(const StructuredSystem& s, const CostModel& c, SearchMode mode) {
  int n = s.state_count;
  if (generic_rank_AB(s) != n)
    throw std::invalid_argument("t_bl_exact: [A B] pattern does not right-saturate the states");
  int cap = brute_force_cap(20);
  int m = edge_count(s);
  if (m > cap)
    throw std::invalid_argument("t_bl_exact: " + std::to_string(m) +
                                " edges exceed the cap of " + std::to_string(cap));
  auto drops_rank = [&s, n](const std::vector<int>& chosen) {
    return generic_rank_AB(remove_edges(s, chosen)) < n;
  };
  SubsetSearchResult found = min_cost_subset(combined_costs(s, c), drops_rank, mode);
  BlockerSide out;
  out.exact = true;
  out.value = found.cost;
  out.edge_ids = found.chosen;
  return out;
}

BlockerSide heuristic_blocker(const StructuredSystem& s, const CostModel& c) {
  int n = s.state_count;
  int na = static_cast<int>(s.a_edges.size());
  std::vector<Rational> costs = combined_costs(s, c);

  BlockerSide out;
  bool have = false;
  auto offer = [&](const std::vector<int>& ids) {
    Rational total;
    for (int id : ids) total += costs[id];
    if (!have || total < out.value) {
      out.value = total;
      out.edge_ids = ids;
      have = true;
    }
  };

  // All in-edges of one state: that state becomes unmatchable.
  for (int x = 0; x < n; ++x) {
    std::vector<int> bundle;
    for (int i = 0; i < na; ++i)
      if (s.a_edges[i].to == x) bundle.push_back(i);
    for (int i = 0; i < static_cast<int>(s.b_edges.size()); ++i)
      if (s.b_edges[i].to == x) bundle.push_back(na + i);
    if (!bundle.empty()) offer(bundle);
  }
  // Single edges that every maximum matching needs.
  for (int id = 0; id < edge_count(s); ++id)
    if (generic_rank_AB(remove_edges(s, {id})) < n) offer({id});

  out.exact = false;
  return out;
}

namespace {

DeletionAnalysis combine(CutSide cut, BlockerSide blocker) {
  DeletionAnalysis out;
  out.cut = std::move(cut);
  out.blocker = std::move(blocker);
  out.cut_branch = out.cut.value <= out.blocker.value;
  if (out.cut_branch) {
    out.value = out.cut.value;
    out.edge_ids = out.cut.edge_ids;
  } else {
    out.value = out.blocker.value;
    out.edge_ids = out.blocker.edge_ids;
  }
  return out;
}

}  // namespace

DeletionAnalysis d_c(const StructuredSystem& s, const CostModel& c, bool exact_blocker,
                     Exec exec) {
  require_controllable(s, "d_c");
  return combine(t_cut(s, c, exec),
                 exact_blocker ? t_bl_exact(s, c) : heuristic_blocker(s, c));
}

DeletionAnalysis approx_wrap(const StructuredSystem& s, const CostModel& c,
                             const BlockerFn& blocker, Exec exec) {
  require_controllable(s, "approx_wrap");
  return combine(t_cut(s, c, exec), blocker(s, c));
}

DeletionAnalysis input_links_only_d_c(const StructuredSystem& s, const CostModel& c,
                                      bool exact_blocker, Exec exec) {
  require_controllable(s, "input_links_only_d_c");
  Rational sentinel(1);
  for (const Rational& x : c.a_costs) sentinel += x;
  for (const Rational& x : c.b_costs) sentinel += x;
  CostModel restricted = c;
  for (Rational& x : restricted.a_costs) x = sentinel;
  return combine(t_cut(s, restricted, exec), exact_blocker
                                                 ? t_bl_exact(s, restricted)
                                                 : heuristic_blocker(s, restricted));
}

}  // namespace netperturb
