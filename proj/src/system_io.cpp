#include "netperturb/system_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace netperturb {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json parse error: ") + e.what());
  }
}

int require_count(const json& j, const char* key, int min_value) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("\"") + key + "\" must be an integer");
  int v = j[key].get<int>();
  if (v < min_value)
    throw ParseError(std::string("\"") + key + "\" must be >= " + std::to_string(min_value));
  return v;
}

Rational edge_cost(const json& entry, const std::string& where) {
  if (!entry.contains("cost")) return Rational(1);
  if (!entry["cost"].is_string())
    throw ParseError(where + ": cost must be a decimal string");
  try {
    return parse_decimal(entry["cost"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

void parse_edge_array(const json& j, const char* key, int from_limit, int to_limit,
                      const char* from_name, std::vector<Edge>& edges,
                      std::vector<Rational>& costs) {
  if (!j.contains(key)) return;
  if (!j[key].is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::set<std::pair<int, int>> seen;
  int i = 0;
  for (const auto& entry : j[key]) {
    std::string where = std::string(key) + "[" + std::to_string(i++) + "]";
    if (!entry.is_object() || !entry.contains("from") || !entry.contains("to") ||
        !entry["from"].is_number_integer() || !entry["to"].is_number_integer())
      throw ParseError(where + ": expected {\"from\": int, \"to\": int, \"cost\"?: string}");
    int from = entry["from"].get<int>(), to = entry["to"].get<int>();
    if (from < 0 || from >= from_limit)
      throw ParseError(where + ": " + from_name + " index " + std::to_string(from) +
                       " out of range [0," + std::to_string(from_limit) + ")");
    if (to < 0 || to >= to_limit)
      throw ParseError(where + ": state index " + std::to_string(to) + " out of range [0," +
                       std::to_string(to_limit) + ")");
    if (!seen.insert({from, to}).second)
      throw ParseError(where + ": duplicate edge (" + std::to_string(from) + "," +
                       std::to_string(to) + ")");
    edges.push_back({from, to});
    costs.push_back(edge_cost(entry, where));
  }
}

json render_edge_array(const std::vector<Edge>& edges, const std::vector<Rational>& costs) {
  json arr = json::array();
  for (size_t i = 0; i < edges.size(); ++i) {
    json e;
    e["from"] = edges[i].from;
    e["to"] = edges[i].to;
    e["cost"] = format_rational(costs[i]);
    arr.push_back(e);
  }
  return arr;
}

void parse_pair_array(const json& j, int from_limit, int to_limit, std::vector<Edge>& edges,
                      bool undirected) {
  if (!j.contains("edges") || !j["edges"].is_array())
    throw ParseError("\"edges\" must be an array of [i,j] pairs");
  std::set<std::pair<int, int>> seen;
  int i = 0;
  for (const auto& entry : j["edges"]) {
    std::string where = "edges[" + std::to_string(i++) + "]";
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw ParseError(where + ": expected a pair [i,j]");
    int a = entry[0].get<int>(), b = entry[1].get<int>();
    if (a < 0 || a >= from_limit || b < 0 || b >= to_limit)
      throw ParseError(where + ": vertex index out of range");
    if (undirected) {
      if (a == b) throw ParseError(where + ": self-loop not allowed");
      if (a > b) std::swap(a, b);
    }
    if (!seen.insert({a, b}).second) throw ParseError(where + ": duplicate edge");
    edges.push_back({a, b});
  }
}

}  // namespace

ParsedInput parse_system_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top-level value must be an object");
  ParsedInput out;
  out.system.state_count = require_count(j, "n", 1);
  out.system.input_count = require_count(j, "q", 0);
  int n = out.system.state_count, q = out.system.input_count;
  parse_edge_array(j, "a_edges", n, n, "state", out.system.a_edges, out.costs.a_costs);
  parse_edge_array(j, "b_edges", q, n, "input", out.system.b_edges, out.costs.b_costs);
  if (j.contains("input_costs")) {
    if (!j["input_costs"].is_array() || static_cast<int>(j["input_costs"].size()) != q)
      throw ParseError("\"input_costs\" must be an array of length q");
    int i = 0;
    for (const auto& entry : j["input_costs"]) {
      std::string where = "input_costs[" + std::to_string(i++) + "]";
      if (!entry.is_string()) throw ParseError(where + ": cost must be a decimal string");
      try {
        out.costs.input_costs.push_back(parse_decimal(entry.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }
  if (j.contains("a_candidates") || j.contains("b_candidates")) {
    out.has_candidates = true;
    parse_edge_array(j, "a_candidates", n, n, "state", out.a_candidates,
                     out.a_candidate_costs);
    parse_edge_array(j, "b_candidates", q, n, "input", out.b_candidates,
                     out.b_candidate_costs);
  }
  return out;
}

std::string render_system_text(const ParsedInput& input) {
  json j;
  j["n"] = input.system.state_count;
  j["q"] = input.system.input_count;
  j["a_edges"] = render_edge_array(input.system.a_edges, input.costs.a_costs);
  j["b_edges"] = render_edge_array(input.system.b_edges, input.costs.b_costs);
  if (!input.costs.input_costs.empty()) {
    json arr = json::array();
    for (const Rational& c : input.costs.input_costs) arr.push_back(format_rational(c));
    j["input_costs"] = arr;
  }
  if (input.has_candidates) {
    j["a_candidates"] = render_edge_array(input.a_candidates, input.a_candidate_costs);
    j["b_candidates"] = render_edge_array(input.b_candidates, input.b_candidate_costs);
  }
  return j.dump(2) + "\n";
}

SourceDigraph parse_source_digraph(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top-level value must be an object");
  SourceDigraph g;
  g.n = require_count(j, "n", 1);
  parse_pair_array(j, g.n, g.n, g.edges, false);
  return g;
}

SourceBipartite parse_source_bipartite(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top-level value must be an object");
  SourceBipartite g;
  g.n = require_count(j, "n", 1);
  parse_pair_array(j, g.n, g.n, g.edges, false);
  return g;
}

SourceUndirected parse_source_undirected(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw ParseError("top-level value must be an object");
  SourceUndirected g;
  g.n = require_count(j, "n", 1);
  parse_pair_array(j, g.n, g.n, g.edges, true);
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& data) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write file: " + tmp);
    out << data;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ParseError("cannot move output into place: " + path);
}

}  // namespace netperturb
