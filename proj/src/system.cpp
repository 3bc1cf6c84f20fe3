#include "netperturb/system.hpp"

#include <algorithm>

#include "netperturb/matching.hpp"

namespace netperturb {

Digraph system_digraph(const StructuredSystem& s) {
  Digraph g;
  g.vertex_count = s.state_count + s.input_count;
  g.edges.reserve(edge_count(s));
  for (const Edge& e : s.a_edges) g.edges.push_back({e.from, e.to});
  for (const Edge& e : s.b_edges) g.edges.push_back({s.state_count + e.from, e.to});
  return g;
}

Digraph system_digraph(const StructuredSystem& s, const CostModel& c) {
  Digraph g = system_digraph(s);
  g.costs.reserve(g.edges.size());
  g.costs.insert(g.costs.end(), c.a_costs.begin(), c.a_costs.end());
  g.costs.insert(g.costs.end(), c.b_costs.begin(), c.b_costs.end());
  return g;
}

std::vector<int> input_vertex_ids(const StructuredSystem& s) {
  std::vector<int> ids(s.input_count);
  for (int j = 0; j < s.input_count; ++j) ids[j] = s.state_count + j;
  return ids;
}

BipartiteGraph system_bipartite(const StructuredSystem& s) {
  BipartiteGraph b;
  b.left_count = s.state_count + s.input_count;
  b.right_count = s.state_count;
  b.edges.reserve(edge_count(s));
  for (const Edge& e : s.a_edges) b.edges.push_back({e.from, e.to});
  for (const Edge& e : s.b_edges) b.edges.push_back({s.state_count + e.from, e.to});
  return b;
}

BipartiteGraph system_bipartite(const StructuredSystem& s, const CostModel& c) {
  BipartiteGraph b = system_bipartite(s);
  b.costs.reserve(b.edges.size());
  b.costs.insert(b.costs.end(), c.a_costs.begin(), c.a_costs.end());
  b.costs.insert(b.costs.end(), c.b_costs.begin(), c.b_costs.end());
  return b;
}

int generic_rank_AB(const StructuredSystem& s) {
  return matching_number(system_bipartite(s));
}

StructuredSystem remove_edges(const StructuredSystem& s, const std::vector<int>& ids) {
  std::vector<char> drop(edge_count(s), 0);
  for (int id : ids) drop[id] = 1;
  StructuredSystem out;
  out.state_count = s.state_count;
  out.input_count = s.input_count;
  int na = static_cast<int>(s.a_edges.size());
  for (int i = 0; i < na; ++i)
    if (!drop[i]) out.a_edges.push_back(s.a_edges[i]);
  for (int i = 0; i < static_cast<int>(s.b_edges.size()); ++i)
    if (!drop[na + i]) out.b_edges.push_back(s.b_edges[i]);
  return out;
}

StructuredSystem remove_inputs(const StructuredSystem& s, const std::vector<int>& inputs) {
  std::vector<char> drop(s.input_count, 0);
  for (int j : inputs) drop[j] = 1;
  std::vector<int> renumber(s.input_count, -1);
  int next = 0;
  for (int j = 0; j < s.input_count; ++j)
    if (!drop[j]) renumber[j] = next++;
  StructuredSystem out;
  out.state_count = s.state_count;
  out.input_count = next;
  out.a_edges = s.a_edges;
  for (const Edge& e : s.b_edges)
    if (!drop[e.from]) out.b_edges.push_back({renumber[e.from], e.to});
  return out;
}

}  // namespace netperturb
