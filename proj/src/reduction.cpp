#include "netperturb/reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "netperturb/actuator.hpp"
#include "netperturb/controllability.hpp"
#include "netperturb/deletion.hpp"
#include "netperturb/matching.hpp"

namespace netperturb {

namespace {

using json = nlohmann::ordered_json;

void add_candidate(ParsedInput& p, bool is_input, int from, int to, const Rational& cost) {
  if (is_input) {
    p.b_candidates.push_back({from, to});
    p.b_candidate_costs.push_back(cost);
  } else {
    p.a_candidates.push_back({from, to});
    p.a_candidate_costs.push_back(cost);
  }
}

// Cycle pair and inherited links shared by both Hamiltonian gadgets.
// v1 = 2v collects incoming links, v2 = 2v + 1 emits outgoing ones.
void add_split_vertices(ParsedInput& p, const SourceDigraph& g) {
  for (int v = 0; v < g.n; ++v) {
    add_candidate(p, false, 2 * v, 2 * v + 1, 1);
    add_candidate(p, false, 2 * v + 1, 2 * v, 1);
  }
  for (const Edge& e : g.edges)
    if (e.from != e.to)  // a source self-loop collapses onto the cycle pair
      add_candidate(p, false, 2 * e.from + 1, 2 * e.to, 1);
}

}  // namespace

std::string reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::ham: return "ham";
    case ReductionKind::ham_fixed: return "ham-fixed";
    case ReductionKind::preclusion: return "preclusion";
    case ReductionKind::clique: return "clique";
  }
  return "?";
}

ReductionKind reduction_kind_from(const std::string& name) {
  if (name == "ham") return ReductionKind::ham;
  if (name == "ham-fixed") return ReductionKind::ham_fixed;
  if (name == "preclusion") return ReductionKind::preclusion;
  if (name == "clique") return ReductionKind::clique;
  throw ParseError("unknown reduction kind \"" + name + "\"");
}

ReductionInstance gadget_ham(const SourceDigraph& g) {
  ReductionInstance r;
  r.kind = ReductionKind::ham;
  r.src_digraph = g;
  r.threshold = 2LL * g.n;
  ParsedInput& p = r.problem;
  p.system.state_count = 2 * g.n;
  p.system.input_count = 1;
  p.has_candidates = true;
  add_split_vertices(p, g);
  for (int v = 0; v < g.n; ++v) add_candidate(p, true, 0, 2 * v, 1);
  return r;
}

ReductionInstance gadget_ham_fixed_input(const SourceDigraph& g) {
  ReductionInstance r;
  r.kind = ReductionKind::ham_fixed;
  r.src_digraph = g;
  r.threshold = 2LL * g.n;
  ParsedInput& p = r.problem;
  int hub = 2 * g.n;  // the former input, now a state
  p.system.state_count = 2 * g.n + 1;
  p.system.input_count = 1;
  p.has_candidates = true;
  add_split_vertices(p, g);
  for (int v = 0; v < g.n; ++v) add_candidate(p, false, hub, 2 * v, 1);
  add_candidate(p, true, 0, hub, 0);
  return r;
}

ReductionInstance gadget_preclusion(const SourceBipartite& b, long long want) {
  BipartiteGraph bg;
  bg.left_count = b.n;
  bg.right_count = b.n;
  bg.edges = b.edges;
  if (matching_number(bg) < b.n)
    throw std::invalid_argument(
        "gadget precondition violated: the bipartite source has no perfect matching");
  ReductionInstance r;
  r.kind = ReductionKind::preclusion;
  r.src_bipartite = b;
  r.threshold = want;
  ParsedInput& p = r.problem;
  p.system.state_count = b.n;
  p.system.input_count = b.n;
  for (const Edge& e : b.edges) {
    p.system.b_edges.push_back({e.from, e.to});
    p.costs.b_costs.emplace_back(1);
  }
  return r;
}

ReductionInstance gadget_clique(const SourceUndirected& g, int k) {
  int n = g.n, m = static_cast<int>(g.edges.size());
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t h = 0; h < queue.size(); ++h)
    for (int w : adj[queue[h]])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  if (static_cast<int>(queue.size()) != n)
    throw std::invalid_argument("clique gadget needs a connected source graph");
  if (k <= 4)
    throw std::invalid_argument("clique gadget needs k > 4 (got " + std::to_string(k) + ")");
  long long pairs = static_cast<long long>(k) * (k - 1) / 2;
  if (pairs + n - k > m)
    throw std::invalid_argument("clique gadget needs C(k,2) + n - k <= edge count (" +
                                std::to_string(pairs) + " + " + std::to_string(n) + " - " +
                                std::to_string(k) + " > " + std::to_string(m) + ")");

  std::vector<Edge> cols = g.edges;  // column c is the c-th edge by endpoint pair
  std::sort(cols.begin(), cols.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });

  int zero_rows = static_cast<int>(m + 2 + k - n - pairs);
  int ones_rows = static_cast<int>(pairs - k - 1);
  ReductionInstance r;
  r.kind = ReductionKind::clique;
  r.src_graph = g;
  r.clique_k = k;
  r.threshold = pairs;
  ParsedInput& p = r.problem;
  p.system.state_count = m + 1;
  p.system.input_count = m + 1;

  // Pattern rows become out-stars: entry (row, col) is the link row -> col.
  std::vector<std::vector<char>> pattern(m + 1, std::vector<char>(m + 1, 0));
  for (int c = 0; c < m; ++c) {
    pattern[cols[c].from][c] = 1;
    pattern[cols[c].to][c] = 1;
  }
  for (int i = 0; i < ones_rows; ++i) {
    int row = n + zero_rows + i;
    for (int c = 0; c < m; ++c) pattern[row][c] = 1;
  }
  pattern[m][m] = 1;
  for (int row = 0; row <= m; ++row)
    for (int c = 0; c <= m; ++c)
      if (pattern[row][c]) {
        p.system.a_edges.push_back({row, c});
        p.costs.a_costs.emplace_back(1);
      }
  for (int i = 0; i <= m; ++i) {
    p.system.b_edges.push_back({i, i});
    p.costs.b_costs.emplace_back(1);
    p.costs.input_costs.emplace_back(i == m ? m + 1 : 1);
  }
  return r;
}

InsertionProblem instance_insertion(const ReductionInstance& r) {
  if (r.kind != ReductionKind::ham && r.kind != ReductionKind::ham_fixed)
    throw std::invalid_argument("not an insertion gadget");
  return normalize(r.problem.system, r.problem.a_candidates, r.problem.a_candidate_costs,
                   r.problem.b_candidates, r.problem.b_candidate_costs);
}

namespace {

json source_json(const ReductionInstance& r) {
  json src;
  const std::vector<Edge>* edges = nullptr;
  switch (r.kind) {
    case ReductionKind::ham:
    case ReductionKind::ham_fixed:
      src["n"] = r.src_digraph.n;
      edges = &r.src_digraph.edges;
      break;
    case ReductionKind::preclusion:
      src["n"] = r.src_bipartite.n;
      edges = &r.src_bipartite.edges;
      break;
    case ReductionKind::clique:
      src["n"] = r.src_graph.n;
      edges = &r.src_graph.edges;
      break;
  }
  json arr = json::array();
  for (const Edge& e : *edges) arr.push_back(json::array({e.from, e.to}));
  src["edges"] = arr;
  if (r.kind == ReductionKind::clique) src["k"] = r.clique_k;
  return src;
}

ReductionInstance rebuild(ReductionKind kind, const std::string& source_text,
                          long long threshold) {
  switch (kind) {
    case ReductionKind::ham: return gadget_ham(parse_source_digraph(source_text));
    case ReductionKind::ham_fixed:
      return gadget_ham_fixed_input(parse_source_digraph(source_text));
    case ReductionKind::preclusion:
      return gadget_preclusion(parse_source_bipartite(source_text), threshold);
    case ReductionKind::clique: {
      json j = json::parse(source_text);
      if (!j.contains("k") || !j["k"].is_number_integer())
        throw ParseError("clique source needs an integer \"k\"");
      return gadget_clique(parse_source_undirected(source_text), j["k"].get<int>());
    }
  }
  throw ParseError("unknown reduction kind");
}

}  // namespace

std::string render_reduction_instance(const ReductionInstance& r) {
  json j;
  j["kind"] = reduction_kind_name(r.kind);
  j["source"] = source_json(r);
  j["threshold"] = r.threshold;
  j["problem"] = json::parse(render_system_text(r.problem));
  return j.dump(2) + "\n";
}

ReductionInstance parse_reduction_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("instance needs a string \"kind\"");
  if (!j.contains("source") || !j["source"].is_object())
    throw ParseError("instance needs a \"source\" object");
  if (!j.contains("threshold") || !j["threshold"].is_number_integer())
    throw ParseError("instance needs an integer \"threshold\"");
  if (!j.contains("problem") || !j["problem"].is_object())
    throw ParseError("instance needs a \"problem\" object");

  ReductionKind kind = reduction_kind_from(j["kind"].get<std::string>());
  long long threshold = j["threshold"].get<long long>();
  ReductionInstance r;
  try {
    r = rebuild(kind, j["source"].dump(), threshold);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (r.threshold != threshold)
    throw ParseError("threshold does not match the source object (expected " +
                     std::to_string(r.threshold) + ")");
  ParsedInput embedded = parse_system_text(j["problem"].dump());
  if (render_system_text(embedded) != render_system_text(r.problem))
    throw ParseError("embedded problem does not match its source object");
  return r;
}

namespace {

// Lexicographically first Hamiltonian path, or empty.
std::vector<int> find_ham_path(const SourceDigraph& g) {
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (const Edge& e : g.edges) adj[e.from][e.to] = 1;
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < g.n; ++i)
      if (!adj[order[i]][order[i + 1]]) ok = false;
    if (ok) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return {};
}

void verify_ham(const ReductionInstance& r, EquivalenceCertificate& cert) {
  const SourceDigraph& g = r.src_digraph;
  if (g.n > 8)
    throw std::invalid_argument("source too large for brute force (" + std::to_string(g.n) +
                                " vertices > 8)");
  std::vector<int> path = find_ham_path(g);
  cert.source_property = !path.empty();
  cert.source_witness = path;
  cert.source_value = Rational(cert.source_property ? g.n : 0);

  InsertionProblem p = instance_insertion(r);
  int k = static_cast<int>(p.candidates.size());
  if (k <= brute_force_cap(20)) {
    PerturbationResult res = exact_insertion(p);
    cert.target_value = res.total_cost;
    cert.target_property =
        res.status == PerturbStatus::ok && res.total_cost <= Rational(r.threshold);
    cert.target_witness = res.chosen;
    cert.note = "target side solved by exhaustive search";
  } else {
    // A solution at the threshold spends one link per state, so it suffices to
    // enumerate one-incoming-link selections.
    std::vector<std::vector<int>> incoming(p.state_count);
    for (int c = 0; c < k; ++c) incoming[p.candidates[c].edge.to].push_back(c);
    long long work = 1;
    for (const auto& opts : incoming) {
      if (opts.empty()) {
        cert.target_property = false;
        cert.note = "a state has no incoming candidate";
        cert.pass = cert.source_property == cert.target_property;
        return;
      }
      work *= static_cast<long long>(opts.size());
      if (work > 20'000'000)
        throw std::invalid_argument("selection enumeration too large");
    }
    std::vector<int> pick(p.state_count, 0), chosen;
    bool found = false;
    while (!found) {
      chosen.clear();
      for (int v = 0; v < p.state_count; ++v) chosen.push_back(incoming[v][pick[v]]);
      std::sort(chosen.begin(), chosen.end());
      if (is_structurally_controllable(induced_system(p, chosen)).controllable) {
        found = true;
        break;
      }
      int v = p.state_count - 1;
      while (v >= 0 && pick[v] + 1 == static_cast<int>(incoming[v].size())) pick[v--] = 0;
      if (v < 0) break;
      ++pick[v];
    }
    cert.target_property = found;
    if (found) {
      Rational total = 0;
      for (int c : chosen) total += p.candidates[c].cost;
      cert.target_value = total;
      cert.target_witness = chosen;
      cert.note = "target side solved by one-incoming-link selection";
    } else {
      cert.note = "no selection is controllable; optimum exceeds the threshold";
    }
  }
  cert.pass = cert.source_property == cert.target_property;
}

void verify_preclusion(const ReductionInstance& r, EquivalenceCertificate& cert) {
  const SourceBipartite& b = r.src_bipartite;
  int m = static_cast<int>(b.edges.size());
  if (m > 12)
    throw std::invalid_argument("source too large for brute force (" + std::to_string(m) +
                                " edges > 12)");
  std::vector<Rational> unit(m, Rational(1));
  auto search = min_cost_subset(unit, [&](const std::vector<int>& drop) {
    std::vector<char> gone(m, 0);
    for (int i : drop) gone[i] = 1;
    BipartiteGraph bg;
    bg.left_count = b.n;
    bg.right_count = b.n;
    for (int i = 0; i < m; ++i)
      if (!gone[i]) bg.edges.push_back(b.edges[i]);
    return matching_number(bg) < b.n;
  });
  cert.source_value = search.cost;
  cert.source_witness = search.chosen;
  cert.source_property = search.cost < Rational(r.threshold);

  DeletionAnalysis del = d_c(r.problem.system, r.problem.costs, true);
  cert.target_value = del.value;
  cert.target_witness = del.edge_ids;  // all links are input links, ids line up
  cert.target_property = del.value < Rational(r.threshold);
  cert.pass = cert.source_value == cert.target_value;
  cert.note = cert.pass ? "d_c equals the matching preclusion number"
                        : "d_c differs from the matching preclusion number";
}

void verify_clique(const ReductionInstance& r, EquivalenceCertificate& cert) {
  const SourceUndirected& g = r.src_graph;
  if (g.n > 7)
    throw std::invalid_argument("source too large for brute force (" + std::to_string(g.n) +
                                " vertices > 7)");
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (const Edge& e : g.edges) adj[e.from][e.to] = adj[e.to][e.from] = 1;
  std::vector<int> pick;
  std::function<bool(int)> choose = [&](int next) {
    if (static_cast<int>(pick.size()) == r.clique_k) return true;
    for (int v = next; v < g.n; ++v) {
      bool ok = true;
      for (int u : pick)
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(v);
      if (choose(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  cert.source_property = choose(0);
  cert.source_witness = pick;
  cert.source_value = Rational(static_cast<int>(pick.size()));

  ActuatorAnalysis act = exact_actuator(r.problem.system, r.problem.costs);
  cert.target_value = act.total_cost;
  cert.target_witness = act.removed_inputs;
  cert.target_property =
      act.status == PerturbStatus::ok && act.total_cost == Rational(r.threshold);
  cert.pass = cert.source_property == cert.target_property;
  cert.note = "a k-clique corresponds to an input removal set at the threshold";
}

}  // namespace

EquivalenceCertificate verify_equivalence(const ReductionInstance& r) {
  EquivalenceCertificate cert;
  switch (r.kind) {
    case ReductionKind::ham:
    case ReductionKind::ham_fixed: verify_ham(r, cert); break;
    case ReductionKind::preclusion: verify_preclusion(r, cert); break;
    case ReductionKind::clique: verify_clique(r, cert); break;
  }
  return cert;
}

}  // namespace netperturb
