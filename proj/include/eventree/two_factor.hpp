#pragma once

#include <variant>
#include <vector>

#include "eventree/matching.hpp"
#include "eventree/multigraph.hpp"

namespace eventree {

// Spanning union of vertex-disjoint cycles (every vertex has degree 2).
struct TwoFactor {
  std::vector<OrientedCycle> cycles;
};

// Degree-constrained subgraph gadget for f(v) = 2: a vertex of degree d
// becomes d external nodes (one per incident edge, in incidence order) and
// d-2 internal nodes, with every external-internal pair joined. Each host
// edge becomes one aux edge between its two external nodes; aux edge ids of
// host images equal the host edge ids.
struct TutteGadget {
  Multigraph aux;
  std::vector<int> host_edge;        // aux edge id -> host edge id, -1 for gadget edges
  std::vector<int> external_node;    // flat over (vertex, incidence slot); see external_base
  std::vector<int> external_base;    // prefix offsets into external_node per vertex
  std::vector<int> internal_base;    // first internal aux node per vertex
  std::vector<int> internal_count;   // d(v) - 2
  std::vector<int> gadget_edge_base; // first gadget aux edge per vertex (internal-major layout)
};

TutteGadget tutte_gadget(const Multigraph& g);

struct NoTwoFactor {
  Matching deficiency;  // maximum matching of the aux graph, as a certificate
};

using TwoFactorResult = std::variant<TwoFactor, NoTwoFactor>;

// 2-factor of a connected r-regular multigraph, r >= 2, via perfect matching
// in the gadget graph. NoTwoFactor is returned exactly when the gadget graph
// has no perfect matching.
TwoFactorResult two_factor(const Multigraph& g);

// Decomposes an edge set in which every vertex has degree exactly 2 into
// oriented cycles; used by two_factor and exposed for the factor pipeline.
std::vector<OrientedCycle> decompose_into_cycles(const Multigraph& g, const std::vector<int>& edge_ids);

}  // namespace eventree
