#pragma once

#include <string>
#include <vector>

#include "eventree/multigraph.hpp"
#include "eventree/weak_two_factor.hpp"

namespace eventree {

// Spanning tree with an ordered bipartition: type-0 vertices form the X side,
// type-1 the Y side; the anchor vertex w has type lambda.
struct BipartiteTree {
  std::vector<int> edge_ids;
  std::vector<int8_t> types;  // indexed by vertex; -1 when not in the tree
  int w = 0;
  int lambda = 0;

  bool contains(int v) const { return types[static_cast<size_t>(v)] >= 0; }
  int vertex_count() const;
};

struct VerificationReport {
  bool passed = true;
  std::string condition;              // first violated condition, fixed check order
  std::vector<int> witness_vertices;
  std::vector<int> witness_edges;

  static VerificationReport ok() { return {}; }
  static VerificationReport fail(std::string cond, std::vector<int> vs = {}, std::vector<int> es = {}) {
    return {false, std::move(cond), std::move(vs), std::move(es)};
  }
};

// The checkers below re-derive degrees, connectivity and coverage from the
// raw graph data; they deliberately share no logic with the constructions
// they audit.

// Spanning tree, bichromatic edges, anchor respected, and every leaf of
// maximum host degree has type 0.
VerificationReport is_weakly_even_tree(const Multigraph& g, const BipartiteTree& t);

// All leaves share one type, regardless of degree (tree validity included).
VerificationReport is_even_tree(const Multigraph& g, const BipartiteTree& t);

// Partition into cycle/path components with degree-deficient path ends.
VerificationReport is_weak_two_factor(const Multigraph& g, const WeakTwoFactor& f);

// The tree's vertex set is exactly a union of components of f.
VerificationReport is_good_tree(const Multigraph& g, const BipartiteTree& t, const WeakTwoFactor& f);

}  // namespace eventree
