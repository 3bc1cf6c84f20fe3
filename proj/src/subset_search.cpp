#include "netperturb/subset_search.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

namespace netperturb {

namespace {

std::vector<int> mask_items(std::uint32_t mask) {
  std::vector<int> items;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) items.push_back(i);
  return items;
}

}  // namespace

bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  std::uint32_t d = a ^ b;
  std::uint32_t low = d & (~d + 1);
  std::uint32_t above = ~((low << 1) - 1);
  // Elements below `low` coincide. Whoever holds `low` speaks next; it wins
  // iff the other side still has a later (larger) element coming.
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

SubsetSearchResult min_cost_subset(
    const std::vector<Rational>& item_costs,
    const std::function<bool(const std::vector<int>&)>& predicate,
    SearchMode mode) {
  int k = static_cast<int>(item_costs.size());
  if (k > 30) throw std::invalid_argument("min_cost_subset: more than 30 items");

  SubsetSearchResult out;

  if (mode == SearchMode::ordered_heap) {
    struct Node {
      Rational cost;
      std::uint32_t mask;
    };
    auto later = [](const Node& a, const Node& b) {
      if (a.cost != b.cost) return a.cost > b.cost;
      return subset_lex_less(b.mask, a.mask);
    };
    std::priority_queue<Node, std::vector<Node>, decltype(later)> heap(later);
    heap.push({Rational(0), 0});
    while (!heap.empty()) {
      Node node = heap.top();
      heap.pop();
      ++out.tested;
      auto items = mask_items(node.mask);
      if (predicate(items)) {
        out.found = true;
        out.chosen = std::move(items);
        out.cost = node.cost;
        return out;
      }
      int start = items.empty() ? 0 : items.back() + 1;
      for (int i = start; i < k; ++i)
        heap.push({node.cost + item_costs[i], node.mask | (1u << i)});
    }
    return out;
  }

  // Scan modes: full ordering up front, then a block-wise sweep.
  std::uint64_t total = 1ull << k;
  std::vector<Rational> cost(total);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::uint32_t low = static_cast<std::uint32_t>(mask & (~mask + 1));
    int idx = 0;
    while (!(low & (1u << idx))) ++idx;
    cost[mask] = cost[mask & (mask - 1)] + item_costs[idx];
  }
  std::vector<std::uint32_t> order(total);
  for (std::uint64_t i = 0; i < total; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (cost[a] != cost[b]) return cost[a] < cost[b];
    return subset_lex_less(a, b);
  });

  const std::uint64_t block = 4096;
  std::int64_t hit = -1;
  for (std::uint64_t base = 0; base < total && hit < 0; base += block) {
    std::uint64_t end = std::min(base + block, total);
    std::int64_t best = -1;
    if (mode == SearchMode::scan_parallel) {
#pragma omp parallel
      {
        std::int64_t local = -1;
#pragma omp for schedule(static)
        for (std::int64_t i = static_cast<std::int64_t>(base);
             i < static_cast<std::int64_t>(end); ++i)
          if (local < 0 && predicate(mask_items(order[i]))) local = i;
#pragma omp critical
        if (local >= 0 && (best < 0 || local < best)) best = local;
      }
    } else {
      for (std::uint64_t i = base; i < end; ++i)
        if (best < 0 && predicate(mask_items(order[i]))) best = static_cast<std::int64_t>(i);
    }
    out.tested += end - base;
    hit = best;
  }

  if (hit >= 0) {
    out.found = true;
    out.chosen = mask_items(order[hit]);
    out.cost = cost[order[hit]];
  }
  return out;
}

int brute_force_cap(int default_cap) {
  const char* env = std::getenv("NETPERTURB_CAP");
  if (!env || !*env) return default_cap;
  try {
    return std::stoi(env);
  } catch (...) {
    return default_cap;
  }
}

}  // namespace netperturb
