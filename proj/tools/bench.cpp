#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include <CLI11.hpp>

#include "netperturb/actuator.hpp"
#include "netperturb/controllability.hpp"
#include "netperturb/deletion.hpp"
#include "netperturb/subset_search.hpp"

using namespace netperturb;

namespace {

// Milliseconds for the best of `repeat` runs.
template <class F>
double best_ms(int repeat, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

// Stem plus random chords: controllable by construction.
StructuredSystem random_system(int n, int extra, std::mt19937_64& rng) {
  StructuredSystem s;
  s.state_count = n;
  s.input_count = 2;
  s.b_edges.push_back({0, 0});
  s.b_edges.push_back({1, n / 2});
  for (int i = 0; i + 1 < n; ++i) s.a_edges.push_back({i, i + 1});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i + 1 < n; ++i) seen.insert({i, i + 1});
  while (extra > 0) {
    int a = pick(rng), b = pick(rng);
    if (a == b || !seen.insert({a, b}).second) continue;
    s.a_edges.push_back({a, b});
    --extra;
  }
  return s;
}

CostModel unit_costs(const StructuredSystem& s) {
  CostModel c;
  c.a_costs.assign(s.a_edges.size(), Rational(1));
  c.b_costs.assign(s.b_edges.size(), Rational(1));
  return c;
}

StructuredSystem selfloop_system(int n, int q, std::mt19937_64& rng) {
  StructuredSystem s;
  s.state_count = n;
  s.input_count = q;
  for (int i = 0; i < n; ++i) {
    s.a_edges.push_back({i, i});
    s.a_edges.push_back({i, (i + 1) % n});
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : s.a_edges) seen.insert({e.from, e.to});
  for (int i = 0; i < 3 * n; ++i) {
    int a = pick(rng), b = pick(rng);
    if (a == b || !seen.insert({a, b}).second) continue;
    s.a_edges.push_back({a, b});
  }
  for (int j = 0; j < q; ++j) s.b_edges.push_back({j, pick(rng)});
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel timings: serial reference vs parallel"};
  std::uint64_t seed = 0;
  int repeat = 5, cut_n = 150;
  app.add_option("--seed", seed, "rng seed");
  app.add_option("--repeat", repeat, "runs per measurement (best kept)");
  app.add_option("--cut-n", cut_n, "state count for the cut benchmark");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);

  {
    StructuredSystem s = random_system(cut_n, 4 * cut_n, rng);
    CostModel c = unit_costs(s);
    CutSide serial, parallel;
    double ts = best_ms(repeat, [&] { serial = t_cut(s, c, Exec::serial); });
    double tp = best_ms(repeat, [&] { parallel = t_cut(s, c, Exec::parallel); });
    std::printf("per-state cuts   n=%-5d serial %9.2f ms   parallel %9.2f ms   x%.2f%s\n",
                cut_n, ts, tp, ts / tp,
                serial.value == parallel.value ? "" : "   VALUES DIFFER");
  }

  {
    const int k = 18;
    std::uniform_int_distribution<int> cost(1, 100);
    std::vector<Rational> costs;
    std::vector<long long> weight;
    long long total = 0;
    for (int i = 0; i < k; ++i) {
      costs.emplace_back(cost(rng));
      weight.push_back(cost(rng));
      total += weight.back();
    }
    long long target = (6 * total) / 10;
    auto pred = [&](const std::vector<int>& chosen) {
      long long w = 0;
      for (int i : chosen) w += weight[i];
      return w >= target;
    };
    SubsetSearchResult a, b, c;
    double t_serial = best_ms(repeat, [&] { a = min_cost_subset(costs, pred, SearchMode::scan_serial); });
    double t_par = best_ms(repeat, [&] { b = min_cost_subset(costs, pred, SearchMode::scan_parallel); });
    double t_heap = best_ms(repeat, [&] { c = min_cost_subset(costs, pred, SearchMode::ordered_heap); });
    bool agree = a.cost == b.cost && b.cost == c.cost;
    std::printf("subset search    k=%-5d scan   %9.2f ms   parallel %9.2f ms   x%.2f   heap %9.2f ms%s\n",
                k, t_serial, t_par, t_serial / t_par, t_heap,
                agree ? "" : "   VALUES DIFFER");
  }

  for (int n : {50, 100, 200, 400}) {
    StructuredSystem s = selfloop_system(n, 6, rng);
    CostModel c = unit_costs(s);
    double t = best_ms(repeat, [&] { (void)actuator_fastpath_selfloops(s, c); });
    std::printf("actuator formula n=%-5d %9.3f ms\n", n, t);
  }
  return 0;
}
