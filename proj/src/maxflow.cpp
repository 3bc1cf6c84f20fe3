#include "netperturb/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace netperturb {

CutResult min_cut(const FlowNetwork& net) {
  if (net.source == net.sink) throw std::invalid_argument("min_cut: source equals sink");
  int n = net.vertex_count;
  int m = static_cast<int>(net.edges.size());

  // Residual arcs: 2*i forward for edge i, 2*i+1 its reverse.
  std::vector<int> head(2 * m);
  std::vector<Rational> residual(2 * m);
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < m; ++i) {
    head[2 * i] = net.edges[i].to;
    head[2 * i + 1] = net.edges[i].from;
    residual[2 * i] = net.capacities[i];
    residual[2 * i + 1] = 0;
    adj[net.edges[i].from].push_back(2 * i);
    adj[net.edges[i].to].push_back(2 * i + 1);
  }

  Rational flow = 0;
  std::vector<int> parent_arc(n);
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    parent_arc[net.source] = -2;
    std::deque<int> q{net.source};
    while (!q.empty() && parent_arc[net.sink] == -1) {
      int v = q.front();
      q.pop_front();
      for (int a : adj[v]) {
        int w = head[a];
        if (parent_arc[w] == -1 && residual[a] > 0) {
          parent_arc[w] = a;
          q.push_back(w);
        }
      }
    }
    if (parent_arc[net.sink] == -1) break;

    Rational bottleneck;
    bool first = true;
    for (int v = net.sink; v != net.source;) {
      int a = parent_arc[v];
      if (first || residual[a] < bottleneck) bottleneck = residual[a];
      first = false;
      v = head[a ^ 1];
    }
    for (int v = net.sink; v != net.source;) {
      int a = parent_arc[v];
      residual[a] -= bottleneck;
      residual[a ^ 1] += bottleneck;
      v = head[a ^ 1];
    }
    flow += bottleneck;
  }

  // Source side of the final residual graph.
  std::vector<char> side(n, 0);
  side[net.source] = 1;
  std::deque<int> q{net.source};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int a : adj[v]) {
      int w = head[a];
      if (!side[w] && residual[a] > 0) {
        side[w] = 1;
        q.push_back(w);
      }
    }
  }

  CutResult out;
  out.value = flow;
  for (int i = 0; i < m; ++i)
    if (side[net.edges[i].from] && !side[net.edges[i].to]) out.cut_edge_ids.push_back(i);
  return out;
}

}  // namespace netperturb
