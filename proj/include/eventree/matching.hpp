#pragma once

#include <optional>
#include <vector>

#include "eventree/multigraph.hpp"

namespace eventree {

struct Matching {
  std::vector<int> matched_edges;  // ascending edge ids; parallels reported by their representative
  std::vector<int> mate;           // mate[v] or -1 when v is unmatched

  int size() const { return static_cast<int>(matched_edges.size()); }
};

// Maximum-cardinality matching via blossom contraction (general graphs).
// Parallel edges are collapsed to their lowest-id representative first; scan
// order is ascending vertex id, ascending edge id, so results are reproducible.
Matching maximum_matching(const Multigraph& g);

// Same, but starts augmenting from the given matching instead of a greedy one.
// seed_edges must form a matching of g.
Matching maximum_matching(const Multigraph& g, const std::vector<int>& seed_edges);

struct PerfectMatchingResult {
  std::optional<Matching> perfect;  // engaged iff every vertex is matched
  Matching maximum;                 // evidence of the deficiency otherwise
};

PerfectMatchingResult perfect_matching(const Multigraph& g);

}  // namespace eventree
