#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "netperturb/controllability.hpp"
#include "oracles.hpp"

using namespace netperturb;

TEST_CASE("a stem is controllable") {
  StructuredSystem s;
  s.state_count = 3;
  s.input_count = 1;
  s.b_edges = {{0, 0}};
  s.a_edges = {{0, 1}, {1, 2}};
  CtrlReport r = is_structurally_controllable(s);
  CHECK(r.controllable);
  CHECK(r.unreachable_states.empty());
  CHECK(r.rank_deficiency == 0);
}

TEST_CASE("an isolated state is reported as unreachable") {
  StructuredSystem s;
  s.state_count = 2;
  s.input_count = 1;
  s.b_edges = {{0, 0}};
  CtrlReport r = is_structurally_controllable(s);
  CHECK(!r.controllable);
  CHECK(r.unreachable_states == std::vector<int>{1});
  CHECK(r.rank_deficiency == 1);  // nothing saturates state 1 either
}

TEST_CASE("a dilation fails on rank while fully reachable") {
  StructuredSystem s;
  s.state_count = 3;
  s.input_count = 1;
  s.b_edges = {{0, 0}};
  s.a_edges = {{0, 1}, {0, 2}};  // one feeder, two dependents
  CtrlReport r = is_structurally_controllable(s);
  CHECK(!r.controllable);
  CHECK(r.unreachable_states.empty());
  CHECK(r.rank_deficiency == 1);
}

TEST_CASE("no inputs means nothing is reachable") {
  StructuredSystem s;
  s.state_count = 1;
  s.input_count = 0;
  s.a_edges = {{0, 0}};
  CtrlReport r = is_structurally_controllable(s);
  CHECK(!r.controllable);
  CHECK(r.unreachable_states == std::vector<int>{0});
}

TEST_CASE("exhaustive agreement with the closure definition, two states") {
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      StructuredSystem s;
      s.state_count = 2;
      s.input_count = 1;
      for (int i = 0; i < 4; ++i)
        if (a >> i & 1u) s.a_edges.push_back({i / 2, i % 2});
      for (int i = 0; i < 2; ++i)
        if (b >> i & 1u) s.b_edges.push_back({0, i});
      CAPTURE(a);
      CAPTURE(b);
      CHECK(is_structurally_controllable(s).controllable == oracle::controllable_brute(s));
    }
}

TEST_CASE("random agreement with the closure definition") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 400; ++it) {
    StructuredSystem s = oracle::random_system(1 + it % 4, it % 3, 0.25 + (it % 3) * 0.2, rng);
    CHECK(is_structurally_controllable(s).controllable == oracle::controllable_brute(s));
  }
}

TEST_CASE("agreement with the numeric rank test") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 150; ++it) {
    StructuredSystem s = oracle::random_system(1 + it % 4, it % 3, 0.35, rng);
    bool structural = is_structurally_controllable(s).controllable;
    bool numeric = oracle::kalman_controllable(s, rng);
    CAPTURE(it);
    CHECK(structural == numeric);
  }
}

TEST_CASE("adding links never destroys controllability") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int it = 0; it < 150; ++it) {
    StructuredSystem s = oracle::random_controllable(3, 1, 0.4, 20, rng);
    StructuredSystem bigger = s;
    bigger.a_edges.push_back(
        {pick(rng) % bigger.state_count, pick(rng) % bigger.state_count});
    CHECK(is_structurally_controllable(bigger).controllable);
  }
}

TEST_CASE("report internals match first principles") {
  std::mt19937_64 rng(44);
  for (int it = 0; it < 200; ++it) {
    StructuredSystem s = oracle::random_system(2 + it % 4, it % 3, 0.3, rng);
    int n = s.state_count, q = s.input_count;
    CtrlReport r = is_structurally_controllable(s);

    std::vector<Edge> all = s.a_edges;
    for (const Edge& e : s.b_edges) all.push_back({n + e.from, e.to});
    auto reach = oracle::closure(n + q, all);
    std::vector<int> unreachable;
    for (int v = 0; v < n; ++v) {
      bool ok = false;
      for (int u = 0; u < q; ++u) ok = ok || reach[n + u][v];
      if (!ok) unreachable.push_back(v);
    }
    CHECK(r.unreachable_states == unreachable);

    BipartiteGraph bg;
    bg.left_count = n + q;
    bg.right_count = n;
    for (const Edge& e : s.a_edges) bg.edges.push_back({e.from, e.to});
    for (const Edge& e : s.b_edges) bg.edges.push_back({n + e.from, e.to});
    CHECK(r.rank_deficiency == n - oracle::matching_brute(bg));

    // every source component of the state graph must be flagged by whether an
    // input link lands inside it
    for (const auto& [states, fed] : r.source_sccs) {
      bool direct = false;
      for (const Edge& e : s.b_edges)
        for (int v : states) direct = direct || e.to == v;
      CHECK(static_cast<bool>(fed) == direct);
    }
  }
}

TEST_CASE("uncontrollable iff some source component is starved or rank falls short") {
  std::mt19937_64 rng(45);
  for (int it = 0; it < 200; ++it) {
    StructuredSystem s = oracle::random_system(2 + it % 4, 1 + it % 2, 0.3, rng);
    CtrlReport r = is_structurally_controllable(s);
    bool starved = false;
    for (const auto& [states, fed] : r.source_sccs) starved = starved || !fed;
    CHECK(r.unreachable_states.empty() == !starved);
    CHECK(r.controllable == (!starved && r.rank_deficiency == 0));
  }
}
