#pragma once

#include <functional>
#include <optional>
#include <string>

#include "eventree/multigraph.hpp"
#include "eventree/verify.hpp"

namespace eventree {

// Exact spanning-tree count (matrix-tree determinant over big integers,
// decimal string to sidestep overflow on multigraphs).
std::string spanning_tree_count(const Multigraph& g);

// True when the spanning-tree count exceeds `cap`.
bool spanning_tree_count_exceeds(const Multigraph& g, long long cap);

// Streams every spanning tree exactly once as a sorted edge-id set, in a
// deterministic deletion/contraction order. The visitor returns false to stop
// early. Refuses graphs whose pre-estimated count exceeds `cap`.
void enumerate_spanning_trees(const Multigraph& g, long long cap,
                              const std::function<bool(const std::vector<int>&)>& visit);

struct OracleVerdict {
  bool exists = false;
  std::optional<BipartiteTree> witness;
  long long trees_examined = 0;
};

// Exhaustive ground truth: does some spanning tree, typed by its
// (w,lambda)-bipartition, pass is_weakly_even_tree?
OracleVerdict exists_weakly_even(const Multigraph& g, int w, int lambda, long long cap = 10000000);

}  // namespace eventree
