#include "netperturb/controllability.hpp"

#include "netperturb/matching.hpp"

namespace netperturb {

std::vector<std::pair<std::vector<int>, bool>> source_sccs(const StructuredSystem& s) {
  Digraph states;
  states.vertex_count = s.state_count;
  states.edges = s.a_edges;
  SccDecomposition scc = scc_decompose(states);
  std::vector<char> reach = reachable_from(system_digraph(s), input_vertex_ids(s));
  std::vector<std::pair<std::vector<int>, bool>> out;
  for (size_t c = 0; c < scc.components.size(); ++c) {
    if (!scc.is_source[c]) continue;
    bool fed = false;
    for (int v : scc.components[c])
      if (reach[v]) fed = true;
    out.emplace_back(scc.components[c], fed);
  }
  return out;
}

CtrlReport is_structurally_controllable(const StructuredSystem& s) {
  CtrlReport report;
  std::vector<char> reach = reachable_from(system_digraph(s), input_vertex_ids(s));
  for (int v = 0; v < s.state_count; ++v)
    if (!reach[v]) report.unreachable_states.push_back(v);
  report.rank_deficiency = s.state_count - generic_rank_AB(s);
  report.source_sccs = source_sccs(s);
  report.controllable = report.unreachable_states.empty() && report.rank_deficiency == 0;
  return report;
}

}  // namespace netperturb
