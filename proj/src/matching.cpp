#include "netperturb/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace netperturb {

namespace {

std::vector<std::vector<std::pair<int, int>>> left_adjacency(const BipartiteGraph& b) {
  std::vector<std::vector<std::pair<int, int>>> adj(b.left_count);
  for (int i = 0; i < static_cast<int>(b.edges.size()); ++i)
    adj[b.edges[i].from].emplace_back(b.edges[i].to, i);
  return adj;
}

}  // namespace

std::vector<int> max_matching(const BipartiteGraph& b) {
  int nl = b.left_count, nr = b.right_count;
  auto adj = left_adjacency(b);
  std::vector<int> match_l(nl, -1), match_r(nr, -1), match_edge_r(nr, -1);
  const int INF = std::numeric_limits<int>::max();
  std::vector<int> dist(nl);

  auto bfs = [&]() {
    std::deque<int> q;
    for (int l = 0; l < nl; ++l) {
      dist[l] = match_l[l] == -1 ? 0 : INF;
      if (dist[l] == 0) q.push_back(l);
    }
    bool found = false;
    while (!q.empty()) {
      int l = q.front();
      q.pop_front();
      for (auto [r, id] : adj[l]) {
        int l2 = match_r[r];
        if (l2 == -1)
          found = true;
        else if (dist[l2] == INF) {
          dist[l2] = dist[l] + 1;
          q.push_back(l2);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, int l) -> bool {
    for (auto [r, id] : adj[l]) {
      int l2 = match_r[r];
      if (l2 == -1 || (dist[l2] == dist[l] + 1 && self(self, l2))) {
        match_l[l] = r;
        match_r[r] = l;
        match_edge_r[r] = id;
        return true;
      }
    }
    dist[l] = INF;
    return false;
  };

  while (bfs())
    for (int l = 0; l < nl; ++l)
      if (match_l[l] == -1) dfs(dfs, l);

  std::vector<int> ids;
  for (int r = 0; r < nr; ++r)
    if (match_edge_r[r] != -1) ids.push_back(match_edge_r[r]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

MatchingResult min_cost_max_matching(const BipartiteGraph& b,
                                     bool require_right_saturating) {
  int nl = b.left_count, nr = b.right_count;
  int m = static_cast<int>(b.edges.size());
  auto cost = [&](int i) { return b.costs.empty() ? Rational(0) : b.costs[i]; };

  std::vector<int> match_l(nl, -1), match_r(nr, -1), match_edge_r(nr, -1);

  // Successive shortest augmenting paths: after k augmentations the matching
  // is a min-cost matching of size k. Bellman-Ford on the alternating
  // residual; strict-improvement parents cannot cycle.
  while (true) {
    std::vector<char> has_l(nl, 0), has_r(nr, 0);
    std::vector<Rational> dl(nl), dr(nr);
    std::vector<int> par_r(nr, -1);
    for (int l = 0; l < nl; ++l)
      if (match_l[l] == -1) has_l[l] = 1;

    bool changed = true;
    for (int sweep = 0; changed && sweep <= nl + nr + 1; ++sweep) {
      changed = false;
      for (int i = 0; i < m; ++i) {
        int l = b.edges[i].from, r = b.edges[i].to;
        if (match_edge_r[r] == i) {
          if (has_r[r]) {
            Rational nd = dr[r] - cost(i);
            if (!has_l[l] || nd < dl[l]) {
              dl[l] = nd;
              has_l[l] = 1;
              changed = true;
            }
          }
        } else if (has_l[l]) {
          Rational nd = dl[l] + cost(i);
          if (!has_r[r] || nd < dr[r]) {
            dr[r] = nd;
            has_r[r] = 1;
            par_r[r] = i;
            changed = true;
          }
        }
      }
    }

    int best = -1;
    for (int r = 0; r < nr; ++r)
      if (match_r[r] == -1 && has_r[r] && (best == -1 || dr[r] < dr[best])) best = r;
    if (best == -1) break;

    int r = best;
    while (r != -1) {
      int i = par_r[r];
      int l = b.edges[i].from;
      int prev = match_l[l];
      match_l[l] = r;
      match_r[r] = l;
      match_edge_r[r] = i;
      r = prev;
    }
  }

  MatchingResult out;
  int matched = 0;
  for (int r = 0; r < nr; ++r)
    if (match_edge_r[r] != -1) {
      ++matched;
      out.edge_ids.push_back(match_edge_r[r]);
      out.cost += cost(match_edge_r[r]);
    }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  out.feasible = !require_right_saturating || matched == nr;
  return out;
}

}  // namespace netperturb
