// Release gate for the toolkit: ten self-contained checks, one line each.
// Exit status is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "netperturb/actuator.hpp"
#include "netperturb/controllability.hpp"
#include "netperturb/deletion.hpp"
#include "netperturb/insertion.hpp"
#include "netperturb/matching.hpp"
#include "netperturb/reduction.hpp"
#include "netperturb/system_io.hpp"
#include "oracles.hpp"

using namespace netperturb;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int idx, bool ok, const std::string& what) {
  std::printf("[%s] %d: %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
  std::fflush(stdout);
  failures += !ok;
}

StructuredSystem empty_system(int n, int q) {
  StructuredSystem s;
  s.state_count = n;
  s.input_count = q;
  return s;
}

InsertionProblem random_insertion(std::mt19937_64& rng, int max_candidates) {
  std::bernoulli_distribution a_coin(0.3), b_coin(0.4);
  for (;;) {
    int n = 2 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 2);
    std::vector<Edge> a, b;
    std::vector<Rational> ac, bc;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a_coin(rng)) {
          a.push_back({i, j});
          ac.push_back(oracle::random_cost(rng));
        }
    for (int j = 0; j < q; ++j)
      for (int i = 0; i < n; ++i)
        if (b_coin(rng)) {
          b.push_back({j, i});
          bc.push_back(oracle::random_cost(rng));
        }
    InsertionProblem p = normalize(empty_system(n, q), a, ac, b, bc);
    if (static_cast<int>(p.candidates.size()) > max_candidates) continue;
    if (!insertion_feasible(p)) continue;
    return p;
  }
}

InsertionProblem chain_star(int n) {
  std::vector<Edge> a, b;
  std::vector<Rational> ac, bc;
  for (int i = 0; i + 1 < n; ++i) {
    a.push_back({i, i + 1});
    ac.emplace_back(1);
  }
  for (int i = 0; i < n; ++i) {
    b.push_back({0, i});
    bc.emplace_back(1);
  }
  return normalize(empty_system(n, 1), a, ac, b, bc);
}

// criterion 1: the combinatorial test against randomized numeric rank
void check_1() {
  Clock::time_point t0 = Clock::now();
  std::mt19937_64 rng(1001);
  int disagree = 0;
  for (int it = 0; it < 200; ++it) {
    StructuredSystem s = oracle::random_system(1 + static_cast<int>(rng() % 5),
                                               static_cast<int>(rng() % 4), 0.4, rng);
    bool graph_says = is_structurally_controllable(s).controllable;
    bool kalman_says = oracle::kalman_controllable(s, rng);
    disagree += graph_says != kalman_says;
  }
  double dt = seconds_since(t0);
  std::ostringstream line;
  line << "structural test vs 200 randomized Kalman ranks: " << disagree
       << " disagreements (" << dt << "s, limit 10s)";
  report(1, disagree == 0 && dt < 10.0, line.str());
}

// criterion 2: the pipeline stays within its factor-two guarantee
void check_2() {
  Clock::time_point t0 = Clock::now();
  std::mt19937_64 rng(1002);
  int bad = 0;
  for (int it = 0; it < 100; ++it) {
    InsertionProblem p = random_insertion(rng, 10);
    PerturbationResult approx = approx_alg1(p);
    PerturbationResult exact = exact_insertion(p);
    bool ok = approx.status == PerturbStatus::ok && exact.status == PerturbStatus::ok &&
              exact.total_cost <= approx.total_cost &&
              approx.total_cost <= 2 * exact.total_cost;
    bad += !ok;
  }
  double dt = seconds_since(t0);
  std::ostringstream line;
  line << "pipeline within [optimum, 2x optimum] on 100 feasible instances: " << bad
       << " violations (" << dt << "s, limit 60s)";
  report(2, bad == 0 && dt < 60.0, line.str());
}

// criterion 3: chain-and-star family, optimum n, near-double witness
void check_3() {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    InsertionProblem p = chain_star(n);
    oracle::BruteBest best = oracle::min_controllable_candidates(p);
    ok = ok && best.found && best.cost == Rational(n);
    std::vector<int> witness;
    for (int i = 0; i + 1 < n; ++i) witness.push_back(i);
    for (int i = 0; i + 1 < n; ++i) witness.push_back(n - 1 + i);
    ok = ok && is_structurally_controllable(induced_system(p, witness)).controllable;
  }
  report(3, ok, "chain-and-star n=3..8: exhaustive optimum n, 2n-2 witness controllable");
}

// criterion 4: the two scene families where the pipeline is provably exact
void check_4() {
  std::mt19937_64 rng(1004);
  int bad = 0;
  for (int it = 0; it < 50;) {  // free self-loop on every state
    InsertionProblem seed = random_insertion(rng, 9);
    std::vector<Edge> a, b;
    std::vector<Rational> ac, bc;
    for (const Candidate& c : seed.candidates) {
      if (!c.is_input && c.edge.from == c.edge.to) continue;
      (c.is_input ? b : a).push_back(c.edge);
      (c.is_input ? bc : ac).push_back(c.cost);
    }
    for (int v = 0; v < seed.state_count; ++v) {
      a.push_back({v, v});
      ac.emplace_back(0);
    }
    InsertionProblem p = normalize(empty_system(seed.state_count, seed.input_count), a, ac, b, bc);
    if (!insertion_feasible(p)) continue;
    ++it;
    bad += approx_alg1(p).total_cost != exact_insertion(p).total_cost;
  }
  std::bernoulli_distribution coin(0.35);
  for (int it = 0; it < 50;) {  // free strongly connected cover
    int n = 2 + static_cast<int>(rng() % 3), q = 1 + static_cast<int>(rng() % 2);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> a, b;
    std::vector<Rational> ac, bc;
    for (int i = 0; i < n; ++i) {
      a.push_back({perm[i], perm[(i + 1) % n]});
      ac.emplace_back(0);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !coin(rng)) continue;
        bool dup = false;
        for (const Edge& e : a) dup = dup || (e == Edge{i, j});
        if (!dup) {
          a.push_back({i, j});
          ac.push_back(oracle::random_cost(rng));
        }
      }
    for (int j = 0; j < q; ++j)
      for (int i = 0; i < n; ++i)
        if (coin(rng)) {
          b.push_back({j, i});
          bc.push_back(oracle::random_cost(rng));
        }
    InsertionProblem p = normalize(empty_system(n, q), a, ac, b, bc);
    if (static_cast<int>(p.candidates.size()) > 13 || !insertion_feasible(p)) continue;
    ++it;
    bad += approx_alg1(p).total_cost != exact_insertion(p).total_cost;
  }
  std::ostringstream line;
  line << "pipeline exact on 50 free-self-loop and 50 free-cover scenes: " << bad
       << " misses";
  report(4, bad == 0, line.str());
}

// criterion 5: link deletion against the exhaustive subset oracle
void check_5() {
  Clock::time_point t0 = Clock::now();
  std::mt19937_64 rng(1005);
  int bad = 0;
  for (int it = 0; it < 100; ++it) {
    StructuredSystem s = oracle::random_controllable(2 + it % 3, 1 + it % 2, 0.45, 12, rng);
    CostModel c = oracle::random_costs(s, rng);
    DeletionAnalysis got = d_c(s, c, true);
    oracle::BruteBest want = oracle::min_breaking_edge_set(s, c);
    bad += !(want.found && got.value == want.cost);
  }
  double dt = seconds_since(t0);
  std::ostringstream line;
  line << "exact link deletion vs subset oracle on 100 systems: " << bad
       << " mismatches (" << dt << "s, limit 120s)";
  report(5, bad == 0 && dt < 120.0, line.str());
}

// criterion 6: the link-deletion gadget computes matching preclusion
void check_6() {
  std::mt19937_64 rng(1006);
  int bad = 0, cases = 0;
  for (int n = 1; n <= 3; ++n) {  // every bipartite pattern with a perfect matching
    int cells = n * n;
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
      SourceBipartite b;
      b.n = n;
      for (int i = 0; i < cells; ++i)
        if (mask >> i & 1u) b.edges.push_back({i / n, i % n});
      BipartiteGraph bg;
      bg.left_count = bg.right_count = n;
      bg.edges = b.edges;
      if (matching_number(bg) < n) continue;
      ++cases;
      ReductionInstance r = gadget_preclusion(b, n);
      DeletionAnalysis del = d_c(r.problem.system, r.problem.costs, true);
      bad += del.value != Rational(oracle::matching_preclusion_brute(b));
    }
  }
  for (int it = 0; it < 50; ++it) {
    SourceBipartite b = oracle::random_pm_bipartite(4, 1 + static_cast<int>(rng() % 6), rng);
    ++cases;
    ReductionInstance r = gadget_preclusion(b, b.n);
    DeletionAnalysis del = d_c(r.problem.system, r.problem.costs, true);
    bad += del.value != Rational(oracle::matching_preclusion_brute(b));
  }
  std::ostringstream line;
  line << "deletion gadget equals matching preclusion on " << cases << " sources: " << bad
       << " mismatches";
  report(6, bad == 0, line.str());
}

// criterion 7: the insertion gadget decides Hamiltonian path
void check_7() {
  std::mt19937_64 rng(1007);
  int bad = 0;
  const Edge pairs[6] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    SourceDigraph g;
    g.n = 3;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1u) g.edges.push_back(pairs[i]);
    EquivalenceCertificate cert = verify_equivalence(gadget_ham(g));
    bad += !(cert.pass && cert.target_property == oracle::has_ham_path_brute(3, g.edges));
  }
  for (int it = 0; it < 50; ++it) {
    SourceDigraph g = oracle::random_digraph(4 + it % 3, 0.4, rng);
    EquivalenceCertificate cert = verify_equivalence(gadget_ham(g));
    bad += !(cert.pass && cert.target_property == oracle::has_ham_path_brute(g.n, g.edges));
  }
  std::ostringstream line;
  line << "gadget threshold decision == Hamiltonian path on 64 + 50 digraphs: " << bad
       << " mismatches";
  report(7, bad == 0, line.str());
}

// criterion 8: the clique gadget optimum on the complete five-vertex graph
void check_8() {
  Clock::time_point t0 = Clock::now();
  SourceUndirected k5;
  k5.n = 5;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.edges.push_back({i, j});
  ReductionInstance r = gadget_clique(k5, 5);
  ActuatorAnalysis act = exact_actuator(r.problem.system, r.problem.costs);
  bool ok = act.status == PerturbStatus::ok && act.total_cost == Rational(10);
  for (int j : act.removed_inputs) ok = ok && j < 10;
  double dt = seconds_since(t0);
  std::ostringstream line;
  line << "clique gadget on K5: optimum 10 avoiding the priced input (" << dt
       << "s, limit 60s)";
  report(8, ok && dt < 60.0, line.str());
}

// criterion 9: fast path correctness plus near-quadratic scaling
void check_9() {
  std::mt19937_64 rng(1009);
  std::bernoulli_distribution extra(0.25), feed(0.45);
  int bad = 0;
  for (int it = 0; it < 100; ++it) {
    int n = 2 + static_cast<int>(rng() % 5), q = 1 + static_cast<int>(rng() % 8);
    StructuredSystem s;
    for (;;) {
      s = empty_system(n, q);
      for (int v = 0; v < n; ++v) s.a_edges.push_back({v, v});
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && extra(rng)) s.a_edges.push_back({i, j});
      for (int j = 0; j < q; ++j)
        for (int i = 0; i < n; ++i)
          if (feed(rng)) s.b_edges.push_back({j, i});
      if (oracle::controllable_brute(s)) break;
    }
    CostModel c;
    for (int j = 0; j < q; ++j) c.input_costs.push_back(oracle::random_cost(rng));
    bad += actuator_fastpath_selfloops(s, c).total_cost != exact_actuator(s, c).total_cost;
  }

  std::vector<int> sizes = {50, 100, 200};
  std::vector<double> best_t;
  for (int n : sizes) {
    StructuredSystem s = empty_system(n, 6);
    for (int v = 0; v < n; ++v) s.a_edges.push_back({v, v});
    for (int v = 0; v < n; ++v) s.a_edges.push_back({v, (v + 1) % n});
    for (int i = 0; i < 3 * n; ++i)
      s.a_edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    for (int j = 0; j < 6; ++j) s.b_edges.push_back({j, static_cast<int>(rng() % n)});
    CostModel c;
    double best = 1e18;
    for (int rep = 0; rep < 20; ++rep) {
      Clock::time_point t0 = Clock::now();
      for (int k = 0; k < 10; ++k) actuator_fastpath_selfloops(s, c);
      best = std::min(best, seconds_since(t0) / 10.0);
    }
    best_t.push_back(std::max(best, 1e-9));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < sizes.size(); ++i) {
    double x = std::log(sizes[i]), y = std::log(best_t[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(sizes.size());
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  std::ostringstream line;
  line << "fast path == exhaustive on 100 systems (" << bad
       << " mismatches); scaling exponent " << slope << " (limit 2.5)";
  report(9, bad == 0 && slope <= 2.5, line.str());
}

// criterion 10: the command line is deterministic, byte for byte
std::pair<int, std::string> run_capture(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return {127, ""};
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return {pclose(pipe), out};
}

void check_10() {
  const char* cli = std::getenv("NETPERTURB_CLI");
  if (!cli) {
    report(10, false, "command binary path not provided in NETPERTURB_CLI");
    return;
  }
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "netperturb_accept";
  fs::create_directories(dir);

  ParsedInput sys;
  sys.system.state_count = 3;
  sys.system.input_count = 1;
  sys.system.a_edges = {{0, 1}, {1, 2}};
  sys.system.b_edges = {{0, 0}};
  sys.costs.a_costs = {Rational(1), Rational(2)};
  sys.costs.b_costs = {Rational(3)};
  write_file_atomic((dir / "sys.json").string(), render_system_text(sys));

  ParsedInput ins;
  ins.system.state_count = 3;
  ins.system.input_count = 1;
  ins.has_candidates = true;
  ins.a_candidates = {{0, 1}, {1, 2}, {2, 0}};
  ins.a_candidate_costs = {Rational(1), Rational(1), Rational(4)};
  ins.b_candidates = {{0, 0}, {0, 1}, {0, 2}};
  ins.b_candidate_costs = {Rational(1), Rational(2), Rational(3)};
  write_file_atomic((dir / "ins.json").string(), render_system_text(ins));

  write_file_atomic((dir / "src.json").string(),
                    "{\"n\": 3, \"edges\": [[0, 1], [1, 2]]}\n");
  write_file_atomic((dir / "srcb.json").string(),
                    "{\"n\": 2, \"edges\": [[0, 0], [0, 1], [1, 0], [1, 1]]}\n");
  std::string k5 = "{\"n\": 5, \"edges\": [";
  bool first = true;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (!first) k5 += ", ";
      first = false;
      k5 += "[" + std::to_string(i) + ", " + std::to_string(j) + "]";
    }
  k5 += "]}\n";
  write_file_atomic((dir / "srck5.json").string(), k5);

  std::string base = std::string(cli) + " ";
  std::string d = dir.string() + "/";
  std::vector<std::string> commands = {
      base + "check " + d + "sys.json --out json",
      base + "check " + d + "sys.json --out text",
      base + "insert " + d + "ins.json --out json",
      base + "insert " + d + "ins.json --exact --out json",
      base + "insert " + d + "ins.json --improve 2 --out json",
      base + "delete-links " + d + "sys.json --out json",
      base + "delete-links " + d + "sys.json --exact-blocker --parallel --out json",
      base + "delete-links " + d + "sys.json --input-links-only --out json",
      base + "delete-actuators " + d + "sys.json --out json",
      base + "delete-actuators " + d + "sys.json --exact --out json",
      base + "reduce ham " + d + "src.json -o " + d + "ham.json --out json",
      base + "reduce ham-fixed " + d + "src.json -o " + d + "hamf.json --out json",
      base + "reduce preclusion " + d + "srcb.json -o " + d + "prec.json --out json",
      base + "reduce clique " + d + "srck5.json -k 5 -o " + d + "clq.json --out json",
      base + "verify " + d + "ham.json --out json",
      base + "verify " + d + "prec.json --out json",
      base + "gen fig2 --n 5 -o " + d + "fig.json --out json",
  };
  int bad = 0;
  for (const std::string& cmd : commands) {
    std::pair<int, std::string> a = run_capture(cmd);
    std::pair<int, std::string> b = run_capture(cmd);
    bool same = a.first == b.first && a.second == b.second && !a.second.empty();
    bad += !same;
  }
  std::ostringstream line;
  line << "command line deterministic across " << commands.size() << " invocation pairs: "
       << bad << " diffs";
  report(10, bad == 0, line.str());
}

}  // namespace

int main() {
  check_1();
  check_2();
  check_3();
  check_4();
  check_5();
  check_6();
  check_7();
  check_8();
  check_9();
  check_10();
  return failures;
}
