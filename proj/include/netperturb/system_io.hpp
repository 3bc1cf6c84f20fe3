#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "netperturb/system.hpp"

namespace netperturb {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One file schema covers plain systems and insertion problems: the candidate
// arrays are simply optional.
struct ParsedInput {
  StructuredSystem system;
  CostModel costs;
  bool has_candidates = false;
  std::vector<Edge> a_candidates, b_candidates;
  std::vector<Rational> a_candidate_costs, b_candidate_costs;
};

ParsedInput parse_system_text(const std::string& text);
std::string render_system_text(const ParsedInput& input);

// Reduction source objects. For bipartite sources, n is the size of each side.
struct SourceDigraph {
  int n = 0;
  std::vector<Edge> edges;
};
struct SourceBipartite {
  int n = 0;
  std::vector<Edge> edges;  // from = left, to = right
};
struct SourceUndirected {
  int n = 0;
  std::vector<Edge> edges;  // normalized from < to
};

SourceDigraph parse_source_digraph(const std::string& text);
SourceBipartite parse_source_bipartite(const std::string& text);
SourceUndirected parse_source_undirected(const std::string& text);

std::string read_file(const std::string& path);       // throws ParseError
void write_file_atomic(const std::string& path, const std::string& data);

}  // namespace netperturb
