#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "netperturb/rational.hpp"

namespace netperturb {

enum class SearchMode {
  ordered_heap,   // lazy best-first, stops at the first hit
  scan_serial,    // materialize, sort, scan; reference for the parallel kernel
  scan_parallel,  // block-wise OpenMP scan, deterministic merge
};

struct SubsetSearchResult {
  bool found = false;
  std::vector<int> chosen;  // ascending item ids
  Rational cost;
  std::uint64_t tested = 0;  // subset positions processed
};

// Order on subsets: by sorted id sequence, std::lexicographical_compare
// semantics ({0,1,2} precedes {0,2}; prefixes precede extensions).
bool subset_lex_less(std::uint32_t a, std::uint32_t b);

// First subset in (total cost, lex id sequence) order satisfying the
// predicate. Complete enumeration, so the result is the global optimum for
// any predicate; all modes return identical results. At most 30 items.
// The predicate must be pure: scan_parallel calls it from several threads.
SubsetSearchResult min_cost_subset(
    const std::vector<Rational>& item_costs,
    const std::function<bool(const std::vector<int>&)>& predicate,
    SearchMode mode = SearchMode::ordered_heap);

// Brute-force size cap, overridable via the NETPERTURB_CAP environment variable.
int brute_force_cap(int default_cap);

}  // namespace netperturb
