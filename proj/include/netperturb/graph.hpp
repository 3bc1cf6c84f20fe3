#pragma once

#include <utility>
#include <vector>

#include "netperturb/rational.hpp"

namespace netperturb {

struct Edge {
  int from = 0;
  int to = 0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.from == b.from && a.to == b.to;
}

// Vertex ids are 0-based and dense. Costs, when present, align with edges.
struct Digraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Rational> costs;
};

// Left and right vertex sets indexed independently from 0.
// edges[i].from is a left index, edges[i].to a right index.
struct BipartiteGraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<Edge> edges;
  std::vector<Rational> costs;
};

struct FlowNetwork {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Rational> capacities;
  int source = 0;
  int sink = 0;
};

// Components appear in a topological order of the condensation; members ascend.
struct SccDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
  std::vector<char> is_source;  // no incoming condensation edge
};

SccDecomposition scc_decompose(const Digraph& g);

std::vector<char> reachable_from(const Digraph& g, const std::vector<int>& roots);

// adjacency[v] lists (target, edge id) in edge order.
std::vector<std::vector<std::pair<int, int>>> out_adjacency(const Digraph& g);

}  // namespace netperturb
