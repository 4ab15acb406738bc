#pragma once

#include <variant>
#include <vector>

#include "eventree/multigraph.hpp"

namespace eventree {

using FactorComponent = std::variant<OrientedCycle, VertexPath>;

// Spanning subgraph whose components are cycles or paths (possibly single
// vertices); every path endpoint has degree < max_degree(host) in the host.
struct WeakTwoFactor {
  std::vector<FactorComponent> components;
};

// Two disjoint copies of g plus, for every vertex v with d(v) < max degree,
// exactly max_degree(g) - d(v) parallel edges joining v to its copy. The
// result is max_degree(g)-regular. First-copy edges keep their host ids in
// `origin`; copy and cross edges map to -1.
struct DoubledGraph {
  Multigraph gstar;
  std::vector<int> origin;  // gstar edge id -> host edge id or -1
};

DoubledGraph doubled_graph(const Multigraph& g);

// Optional trace of the construction, for inspection in tests.
struct WeakTwoFactorTrace {
  DoubledGraph doubled;
  std::vector<int> factor_star_edges;  // 2-factor edges of gstar
};

// Weak 2-factor of a 2-edge-connected graph: restrict a 2-factor of the
// doubled graph back to the host edge set.
WeakTwoFactor weak_two_factor(const Multigraph& g, WeakTwoFactorTrace* trace = nullptr);

}  // namespace eventree
