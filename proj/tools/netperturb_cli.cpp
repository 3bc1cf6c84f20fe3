#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netperturb/actuator.hpp"
#include "netperturb/controllability.hpp"
#include "netperturb/deletion.hpp"
#include "netperturb/insertion.hpp"
#include "netperturb/reduction.hpp"
#include "netperturb/system_io.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace netperturb;

ParsedInput load_input(const std::string& path) {
  try {
    return parse_system_text(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string method_name(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::approx_alg1: return "approx-alg1";
    case Method::formula: return "formula";
    case Method::cut: return "cut";
  }
  return "?";
}

json candidate_witness(const InsertionProblem& p, const std::vector<int>& chosen) {
  json arr = json::array();
  for (int id : chosen) {
    const Candidate& c = p.candidates[id];
    json e;
    e["id"] = id;
    e["type"] = c.is_input ? "input" : "state";
    e["from"] = c.edge.from;
    e["to"] = c.edge.to;
    e["cost"] = format_rational(c.cost);
    arr.push_back(e);
  }
  return arr;
}

json system_edge_witness(const StructuredSystem& s, const CostModel& c,
                         const std::vector<int>& ids) {
  json arr = json::array();
  int na = static_cast<int>(s.a_edges.size());
  for (int id : ids) {
    json e;
    e["id"] = id;
    if (id < na) {
      e["type"] = "state";
      e["from"] = s.a_edges[id].from;
      e["to"] = s.a_edges[id].to;
      e["cost"] = format_rational(c.a_costs[id]);
    } else {
      e["type"] = "input";
      e["from"] = s.b_edges[id - na].from;
      e["to"] = s.b_edges[id - na].to;
      e["cost"] = format_rational(c.b_costs[id - na]);
    }
    arr.push_back(e);
  }
  return arr;
}

struct Outcome {
  json report;
  int exit_code = 0;
};

Outcome run_check(const std::string& path) {
  ParsedInput in = load_input(path);
  CtrlReport rep = is_structurally_controllable(in.system);
  Outcome out;
  out.report["command"] = "check";
  out.report["status"] = rep.controllable ? "controllable" : "uncontrollable";
  json sccs = json::array();
  for (const auto& [states, fed] : rep.source_sccs) {
    json s;
    s["states"] = states;
    s["input_reached"] = static_cast<bool>(fed);
    sccs.push_back(s);
  }
  out.report["details"] = {{"unreachable_states", rep.unreachable_states},
                           {"rank_deficiency", rep.rank_deficiency},
                           {"source_sccs", sccs}};
  out.exit_code = rep.controllable ? 0 : 2;
  return out;
}

Outcome run_insert(const std::string& path, bool exact, int improve) {
  ParsedInput in = load_input(path);
  if (!in.has_candidates)
    throw std::invalid_argument(path + ": input file has no candidate links");
  InsertionProblem p = normalize(in.system, in.a_candidates, in.a_candidate_costs,
                                 in.b_candidates, in.b_candidate_costs);
  PerturbationResult res;
  if (exact) {
    res = exact_insertion(p);
  } else {
    res = approx_alg1(p);
    if (improve > 0 && res.status == PerturbStatus::ok)
      res = improve_iterative(p, res, improve);
  }
  Outcome out;
  out.report["command"] = "insert";
  out.report["status"] = res.status == PerturbStatus::ok ? "feasible" : "infeasible";
  out.report["value"] = format_rational(res.total_cost);
  out.report["witness_edges"] = candidate_witness(p, res.chosen);
  out.report["method"] = method_name(res.method);
  out.report["details"] = {{"candidates", static_cast<int>(p.candidates.size())},
                           {"improve_rounds", improve}};
  out.exit_code = res.status == PerturbStatus::ok ? 0 : 2;
  return out;
}

Outcome run_delete_links(const std::string& path, bool exact_blocker, bool input_only,
                         bool parallel) {
  ParsedInput in = load_input(path);
  Exec exec = parallel ? Exec::parallel : Exec::serial;
  DeletionAnalysis del = input_only
                             ? input_links_only_d_c(in.system, in.costs, exact_blocker, exec)
                             : d_c(in.system, in.costs, exact_blocker, exec);
  Outcome out;
  out.report["command"] = "delete-links";
  out.report["status"] = "feasible";
  out.report["value"] = format_rational(del.value);
  out.report["witness_edges"] = system_edge_witness(in.system, in.costs, del.edge_ids);
  out.report["method"] =
      del.cut_branch ? "cut" : (del.blocker.exact ? "blocker-exact" : "blocker-heuristic");
  out.report["details"] = {{"cut_value", format_rational(del.cut.value)},
                           {"critical_state", del.cut.critical_state},
                           {"blocker_value", format_rational(del.blocker.value)},
                           {"blocker_exact", del.blocker.exact},
                           {"input_links_only", input_only}};
  return out;
}

Outcome run_delete_actuators(const std::string& path, bool exact, bool fastpath) {
  ParsedInput in = load_input(path);
  ActuatorAnalysis act;
  if (fastpath) {
    act = actuator_fastpath_selfloops(in.system, in.costs);
  } else if (exact) {
    act = exact_actuator(in.system, in.costs);
  } else {
    std::vector<char> loop(in.system.state_count, 0);
    for (const Edge& e : in.system.a_edges)
      if (e.from == e.to) loop[e.from] = 1;
    bool all_loops = true;
    for (char f : loop) all_loops = all_loops && f;
    act = all_loops && is_structurally_controllable(in.system).controllable
              ? actuator_fastpath_selfloops(in.system, in.costs)
              : exact_actuator(in.system, in.costs);
  }
  Outcome out;
  out.report["command"] = "delete-actuators";
  out.report["status"] = act.status == PerturbStatus::ok ? "feasible" : "infeasible";
  out.report["value"] = format_rational(act.total_cost);
  out.report["witness_inputs"] = act.removed_inputs;
  out.report["method"] = method_name(act.method);
  json table = json::array();
  for (const auto& [states, cost] : act.scc_costs) {
    json row;
    row["states"] = states;
    row["cost"] = format_rational(cost);
    table.push_back(row);
  }
  out.report["details"] = {
      {"mechanism", act.mechanism == BreakMechanism::reachability ? "reachability" : "rank"},
      {"source_scc_costs", table}};
  out.exit_code = act.status == PerturbStatus::ok ? 0 : 2;
  return out;
}

Outcome run_reduce(const std::string& kind, const std::string& src_path,
                   const std::string& out_path, int k, bool k_given) {
  ReductionInstance r;
  try {
    std::string text = read_file(src_path);
    if (kind == "ham") {
      r = gadget_ham(parse_source_digraph(text));
    } else if (kind == "ham-fixed") {
      r = gadget_ham_fixed_input(parse_source_digraph(text));
    } else if (kind == "preclusion") {
      SourceBipartite b = parse_source_bipartite(text);
      r = gadget_preclusion(b, k_given ? k : b.n);
    } else {
      if (!k_given) throw std::invalid_argument("clique reduction needs -k");
      r = gadget_clique(parse_source_undirected(text), k);
    }
  } catch (const ParseError& e) {
    throw ParseError(src_path + ": " + e.what());
  }
  write_file_atomic(out_path, render_reduction_instance(r));
  Outcome out;
  out.report["command"] = "reduce";
  out.report["status"] = "ok";
  out.report["value"] = format_rational(Rational(r.threshold));
  out.report["details"] = {
      {"kind", reduction_kind_name(r.kind)},
      {"states", r.problem.system.state_count},
      {"inputs", r.problem.system.input_count},
      {"candidates",
       static_cast<int>(r.problem.a_candidates.size() + r.problem.b_candidates.size())},
      {"output", out_path}};
  return out;
}

Outcome run_verify(const std::string& path) {
  ReductionInstance r;
  try {
    r = parse_reduction_instance(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  EquivalenceCertificate cert = verify_equivalence(r);
  Outcome out;
  out.report["command"] = "verify";
  out.report["status"] = cert.pass ? "pass" : "fail";
  out.report["value"] = format_rational(cert.target_value);
  out.report["details"] = {{"kind", reduction_kind_name(r.kind)},
                           {"threshold", r.threshold},
                           {"source_property", cert.source_property},
                           {"target_property", cert.target_property},
                           {"source_value", format_rational(cert.source_value)},
                           {"target_value", format_rational(cert.target_value)},
                           {"source_witness", cert.source_witness},
                           {"target_witness", cert.target_witness},
                           {"note", cert.note}};
  out.exit_code = cert.pass ? 0 : 2;
  return out;
}

ParsedInput fig2_family(int n) {
  ParsedInput p;
  p.system.state_count = n;
  p.system.input_count = 1;
  p.has_candidates = true;
  for (int i = 0; i + 1 < n; ++i) {
    p.a_candidates.push_back({i, i + 1});
    p.a_candidate_costs.emplace_back(1);
  }
  for (int i = 0; i < n; ++i) {
    p.b_candidates.push_back({0, i});
    p.b_candidate_costs.emplace_back(1);
  }
  return p;
}

Outcome run_gen(const std::string& family, int n, const std::string& out_path) {
  if (family != "fig2") throw std::invalid_argument("unknown family \"" + family + "\"");
  if (n < 3) throw std::invalid_argument("fig2 family needs n >= 3");
  ParsedInput p = fig2_family(n);
  write_file_atomic(out_path, render_system_text(p));
  Outcome out;
  out.report["command"] = "gen";
  out.report["status"] = "ok";
  out.report["value"] = format_rational(Rational(n));
  out.report["details"] = {{"family", family},
                           {"n", n},
                           {"candidates", 2 * n - 1},
                           {"note", "optimum n; a chain plus input star of cost 2n-2 "
                                    "is also feasible"}};
  return out;
}

void print_text(const json& j) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_string())
      std::cout << key << ": " << value.get<std::string>() << "\n";
    else
      std::cout << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured network controllability toolkit"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::string out_format = "json";
  app.add_option("--seed", seed, "seed recorded in the report");
  app.add_option("--out", out_format, "report format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string check_in;
  auto* check = app.add_subcommand("check", "test structural controllability");
  check->add_option("input", check_in, "system file")->required();

  std::string ins_in;
  bool ins_exact = false;
  int ins_improve = 0;
  auto* insert = app.add_subcommand("insert", "minimum cost link insertion");
  insert->add_option("input", ins_in, "problem file with candidate links")->required();
  auto* ins_exact_flag = insert->add_flag("--exact", ins_exact, "exhaustive search");
  insert->add_option("--improve", ins_improve, "local improvement rounds")
      ->check(CLI::NonNegativeNumber)
      ->excludes(ins_exact_flag);

  std::string del_in;
  bool del_exact = false, del_input_only = false, del_parallel = false;
  auto* dlinks = app.add_subcommand("delete-links", "minimum cost link deletion");
  dlinks->add_option("input", del_in, "system file")->required();
  dlinks->add_flag("--exact-blocker", del_exact, "exhaustive matching blocker");
  dlinks->add_flag("--input-links-only", del_input_only, "restrict deletion to input links");
  dlinks->add_flag("--parallel", del_parallel, "parallel per-state cuts");

  std::string act_in;
  bool act_exact = false, act_fast = false;
  auto* dact = app.add_subcommand("delete-actuators", "minimum cost input removal");
  dact->add_option("input", act_in, "system file")->required();
  auto* act_exact_flag = dact->add_flag("--exact", act_exact, "exhaustive search");
  dact->add_flag("--fastpath", act_fast, "self-loop source-component formula")
      ->excludes(act_exact_flag);

  std::string red_kind, red_in, red_out;
  int red_k = 0;
  auto* reduce = app.add_subcommand("reduce", "build a hardness gadget");
  reduce->add_option("kind", red_kind, "ham | ham-fixed | preclusion | clique")
      ->required()
      ->check(CLI::IsMember({"ham", "ham-fixed", "preclusion", "clique"}));
  reduce->add_option("source", red_in, "source graph file")->required();
  auto* red_k_opt =
      reduce->add_option("-k", red_k, "clique size (clique) or threshold (preclusion)");
  reduce->add_option("-o,--output", red_out, "instance file to write")->required();

  std::string ver_in;
  auto* verify = app.add_subcommand("verify", "brute-force check of a gadget equivalence");
  verify->add_option("instance", ver_in, "instance file")->required();

  std::string gen_family, gen_out;
  int gen_n = 0;
  auto* gen = app.add_subcommand("gen", "emit a named worst-case family instance");
  gen->add_option("family", gen_family, "family name (fig2)")->required();
  gen->add_option("--n", gen_n, "number of states")->required();
  gen->add_option("-o,--output", gen_out, "problem file to write")->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();  // --seed / --out are accepted after the subcommand too

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  Outcome out;
  try {
    if (check->parsed()) {
      out = run_check(check_in);
    } else if (insert->parsed()) {
      out = run_insert(ins_in, ins_exact, ins_improve);
    } else if (dlinks->parsed()) {
      out = run_delete_links(del_in, del_exact, del_input_only, del_parallel);
    } else if (dact->parsed()) {
      out = run_delete_actuators(act_in, act_exact, act_fast);
    } else if (reduce->parsed()) {
      out = run_reduce(red_kind, red_in, red_out, red_k, red_k_opt->count() > 0);
    } else if (verify->parsed()) {
      out = run_verify(ver_in);
    } else if (gen->parsed()) {
      out = run_gen(gen_family, gen_n, gen_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out.report.contains("details")) out.report["details"]["seed"] = seed;
  if (out_format == "json")
    std::cout << out.report.dump(2) << "\n";
  else
    print_text(out.report);
  return out.exit_code;
}
