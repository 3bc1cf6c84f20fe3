#pragma once

#include <functional>
#include <vector>

#include "netperturb/subset_search.hpp"
#include "netperturb/system.hpp"

namespace netperturb {

enum class Exec { serial, parallel };

struct CutSide {
  Rational value;
  std::vector<int> edge_ids;  // combined edge ids; deleting them severs some state
  int critical_state = -1;    // lexicographically first minimizer
};

struct BlockerSide {
  Rational value;
  std::vector<int> edge_ids;  // deleting them drops the [A B] matching below n
  bool exact = false;
};

struct DeletionAnalysis {
  CutSide cut;
  BlockerSide blocker;
  bool cut_branch = false;  // ties go to the cut side
  Rational value;
  std::vector<int> edge_ids;
};

using BlockerFn =
    std::function<BlockerSide(const StructuredSystem&, const CostModel&)>;

// Minimum over states of the min cut separating a virtual super-source from
// that state. The super-source feeds each input through a virtual edge whose
// capacity is the input's total outgoing cost (cutting it stands for deleting
// all of that input's edges, and the returned set expands it accordingly).
// Requires a structurally controllable system.
CutSide t_cut(const StructuredSystem& s, const CostModel& c, Exec exec = Exec::serial);

// Cost-ordered exhaustive 1-blocker. Default cap: 20 edges total.
BlockerSide t_bl_exact(const StructuredSystem& s, const CostModel& c,
                       SearchMode mode = SearchMode::ordered_heap);

// Sound but factor-free default: per-state in-edge bundles plus single edges
// that no maximum matching can avoid.
BlockerSide heuristic_blocker(const StructuredSystem& s, const CostModel& c);

// d_c = min(cut, blocker).
DeletionAnalysis d_c(const StructuredSystem& s, const CostModel& c, bool exact_blocker,
                     Exec exec = Exec::serial);

// Same combiner with a caller-supplied blocker approximation; inherits its
// factor (min with the exact cut side never hurts it).
DeletionAnalysis approx_wrap(const StructuredSystem& s, const CostModel& c,
                             const BlockerFn& blocker, Exec exec = Exec::serial);

// Restrict deletions to input edges by pricing every state edge just above
// the total finite cost; the returned optimum touches input edges only.
DeletionAnalysis input_links_only_d_c(const StructuredSystem& s, const CostModel& c,
                                      bool exact_blocker, Exec exec = Exec::serial);

}  // namespace netperturb
