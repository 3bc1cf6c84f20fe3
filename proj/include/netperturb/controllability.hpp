#pragma once

#include <utility>
#include <vector>

#include "netperturb/system.hpp"

namespace netperturb {

struct CtrlReport {
  bool controllable = false;
  std::vector<int> unreachable_states;  // ascending
  int rank_deficiency = 0;              // n - grank([A B])
  // Source SCCs of the state-only digraph with input-reachability flags.
  std::vector<std::pair<std::vector<int>, bool>> source_sccs;
};

// Structural controllability: every state reachable from some input and the
// [A B] pattern right-saturates the states. Both failure modes are reported
// separately. With no inputs every state is unreachable.
CtrlReport is_structurally_controllable(const StructuredSystem& s);

std::vector<std::pair<std::vector<int>, bool>> source_sccs(const StructuredSystem& s);

}  // namespace netperturb
