#include "netperturb/arborescence.hpp"

#include <algorithm>

namespace netperturb {

namespace {

struct ArbEdge {
  int from, to;
  Rational w;
};

// Chu-Liu/Edmonds by recursive cycle contraction. Returns indices into
// `edges`; ties go to the earlier edge, so callers order preferred edges first.
bool solve(int node_count, int root, const std::vector<ArbEdge>& edges,
           std::vector<int>& chosen) {
  std::vector<int> best(node_count, -1);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const ArbEdge& e = edges[i];
    if (e.to == root || e.from == e.to) continue;
    if (best[e.to] == -1 || e.w < edges[best[e.to]].w) best[e.to] = i;
  }
  for (int v = 0; v < node_count; ++v)
    if (v != root && best[v] == -1) return false;

  // Find a cycle among the chosen in-edges, if any.
  std::vector<int> color(node_count, 0);
  std::vector<int> cycle;
  color[root] = 2;
  for (int v = 0; v < node_count && cycle.empty(); ++v) {
    if (color[v]) continue;
    std::vector<int> path;
    int u = v;
    while (color[u] == 0) {
      color[u] = 1;
      path.push_back(u);
      u = edges[best[u]].from;
    }
    if (color[u] == 1) {
      auto it = std::find(path.begin(), path.end(), u);
      cycle.assign(it, path.end());
    }
    for (int w : path) color[w] = 2;
  }

  if (cycle.empty()) {
    chosen.clear();
    for (int v = 0; v < node_count; ++v)
      if (v != root) chosen.push_back(best[v]);
    return true;
  }

  // Contract the cycle into one node and recurse on reduced costs.
  std::vector<char> in_cycle(node_count, 0);
  for (int v : cycle) in_cycle[v] = 1;
  std::vector<int> label(node_count, -1);
  int m = 0;
  for (int v = 0; v < node_count; ++v)
    if (!in_cycle[v]) label[v] = m++;
  int contracted = m++;
  for (int v : cycle) label[v] = contracted;

  std::vector<ArbEdge> sub;
  std::vector<int> parent_index;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const ArbEdge& e = edges[i];
    int f = label[e.from], t = label[e.to];
    if (f == t) continue;
    Rational w = e.w;
    if (t == contracted) w -= edges[best[e.to]].w;
    sub.push_back({f, t, w});
    parent_index.push_back(i);
  }

  std::vector<int> sub_chosen;
  if (!solve(m, label[root], sub, sub_chosen)) return false;

  chosen.clear();
  int entering = -1;
  for (int si : sub_chosen) {
    int pi = parent_index[si];
    chosen.push_back(pi);
    if (label[edges[pi].to] == contracted) entering = pi;
  }
  int broken = edges[entering].to;
  for (int v : cycle)
    if (v != broken) chosen.push_back(best[v]);
  return true;
}

}  // namespace

ForestResult min_cost_spanning_forest(const Digraph& g, const std::vector<int>& roots) {
  int n = g.vertex_count;
  int super = n;
  std::vector<ArbEdge> edges;
  std::vector<int> orig;  // original edge id, -1 for virtual root edges
  for (int r : roots) {
    edges.push_back({super, r, Rational(0)});
    orig.push_back(-1);
  }
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (g.edges[i].from == g.edges[i].to) continue;
    Rational w = g.costs.empty() ? Rational(0) : g.costs[i];
    edges.push_back({g.edges[i].from, g.edges[i].to, w});
    orig.push_back(i);
  }

  ForestResult out;
  std::vector<int> chosen;
  if (!solve(n + 1, super, edges, chosen)) return out;
  out.feasible = true;
  for (int ci : chosen)
    if (orig[ci] >= 0) {
      out.edge_ids.push_back(orig[ci]);
      if (!g.costs.empty()) out.cost += g.costs[orig[ci]];
    }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

}  // namespace netperturb
