#pragma once

#include <string>
#include <vector>

#include "netperturb/insertion.hpp"
#include "netperturb/system_io.hpp"

namespace netperturb {

enum class ReductionKind { ham, ham_fixed, preclusion, clique };

std::string reduction_kind_name(ReductionKind k);
ReductionKind reduction_kind_from(const std::string& name);  // throws ParseError

// A hardness gadget: the source object, the structured problem built from it,
// and the cost threshold the source property is equivalent to.
struct ReductionInstance {
  ReductionKind kind = ReductionKind::ham;
  SourceDigraph src_digraph;      // ham, ham_fixed
  SourceBipartite src_bipartite;  // preclusion
  SourceUndirected src_graph;     // clique
  int clique_k = 0;
  long long threshold = 0;
  ParsedInput problem;
};

// Vertex v becomes the 2-cycle v1 = 2v, v2 = 2v + 1; v1 keeps the incoming
// side, v2 the outgoing side; one input with a candidate link to every v1.
// Unit costs. A solution of cost <= 2n exists iff g has a Hamiltonian path.
ReductionInstance gadget_ham(const SourceDigraph& g);

// Same gadget with the hub demoted to a state u and a single input z wired to
// it at cost zero, so every candidate the solver pays for is a state link.
ReductionInstance gadget_ham_fixed_input(const SourceDigraph& g);

// Inputs are the left side, states the right side, no state links: deleting
// links is exactly deleting edges of the source, so d_c is its matching
// preclusion number. Requires a perfect matching.
ReductionInstance gadget_preclusion(const SourceBipartite& b, long long r);

// The (m+1) x (m+1) pattern over the incidence columns of g (sorted by
// endpoint pair), padded with a zero block and an all-ones block, one
// input per state, the last input priced at m + 1. The cheapest breaking
// input set costs C(k,2) iff g has a k-clique. Requires g connected, k > 4,
// and C(k,2) + n - k <= m.
ReductionInstance gadget_clique(const SourceUndirected& g, int k);

// The insertion problem of a ham-kind instance.
InsertionProblem instance_insertion(const ReductionInstance& r);

std::string render_reduction_instance(const ReductionInstance& r);
// Rebuilds the gadget from the embedded source and rejects a tampered file.
ReductionInstance parse_reduction_instance(const std::string& text);  // throws ParseError

struct EquivalenceCertificate {
  bool pass = false;
  bool source_property = false;  // Hamiltonian path / mp < r / k-clique
  bool target_property = false;  // optimum within threshold
  Rational source_value;
  Rational target_value;
  std::vector<int> source_witness;  // path order / source edge ids / clique vertices
  std::vector<int> target_witness;  // candidate ids / edge ids / input ids
  std::string note;
};

// Solves both sides by brute force and checks the claimed equivalence.
// Caps: 8 source vertices (ham kinds), 12 source edges (preclusion),
// 7 source vertices (clique).
EquivalenceCertificate verify_equivalence(const ReductionInstance& r);

}  // namespace netperturb
