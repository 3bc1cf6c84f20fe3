#include "netperturb/graph.hpp"

#include <algorithm>
#include <deque>

namespace netperturb {

std::vector<std::vector<std::pair<int, int>>> out_adjacency(const Digraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
    adj[g.edges[i].from].emplace_back(g.edges[i].to, i);
  return adj;
}

SccDecomposition scc_decompose(const Digraph& g) {
  int n = g.vertex_count;
  auto adj = out_adjacency(g);
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  struct Frame {
    int v;
    size_t ei;
  };
  std::vector<Frame> call;
  for (int r = 0; r < n; ++r) {
    if (index[r] != -1) continue;
    index[r] = low[r] = next_index++;
    stack.push_back(r);
    on_stack[r] = 1;
    call.push_back({r, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.ei < adj[f.v].size()) {
        int w = adj[f.v][f.ei++].first;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w] && index[w] < low[f.v]) {
          low[f.v] = index[w];
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty() && low[v] < low[call.back().v]) low[call.back().v] = low[v];
        if (low[v] == index[v]) {
          comps.emplace_back();
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = static_cast<int>(comps.size()) - 1;
            comps.back().push_back(w);
            if (w == v) break;
          }
        }
      }
    }
  }

  // Tarjan pops components in reverse topological order.
  SccDecomposition out;
  int k = static_cast<int>(comps.size());
  out.components.resize(k);
  out.component_of.assign(n, -1);
  for (int c = 0; c < k; ++c) {
    out.components[c] = std::move(comps[k - 1 - c]);
    std::sort(out.components[c].begin(), out.components[c].end());
    for (int v : out.components[c]) out.component_of[v] = c;
  }
  out.is_source.assign(k, 1);
  for (const Edge& e : g.edges)
    if (out.component_of[e.from] != out.component_of[e.to])
      out.is_source[out.component_of[e.to]] = 0;
  return out;
}

std::vector<char> reachable_from(const Digraph& g, const std::vector<int>& roots) {
  auto adj = out_adjacency(g);
  std::vector<char> seen(g.vertex_count, 0);
  std::deque<int> queue;
  for (int r : roots)
    if (!seen[r]) {
      seen[r] = 1;
      queue.push_back(r);
    }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [w, id] : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  return seen;
}

}  // namespace netperturb
