#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "eventree/multigraph.hpp"
#include "eventree/verify.hpp"
#include "eventree/weak_two_factor.hpp"

namespace eventree {

// Indexes a weak 2-factor for the solver: component and position lookup per
// vertex, component shapes, and the host's maximum degree.
class FactorContext {
 public:
  enum class CompKind { Path, OddCycle, EvenCycle };

  FactorContext(const Multigraph& g, const WeakTwoFactor& f);

  const Multigraph& graph() const { return *g_; }
  const WeakTwoFactor& factor() const { return *f_; }
  int component_count() const { return static_cast<int>(f_->components.size()); }
  int comp_of(int v) const { return comp_of_[static_cast<size_t>(v)]; }
  int pos_of(int v) const { return pos_of_[static_cast<size_t>(v)]; }
  CompKind kind(int c) const { return kind_[static_cast<size_t>(c)]; }
  const OrientedCycle& cycle(int c) const;
  const VertexPath& path(int c) const;
  const std::vector<int>& comp_vertices(int c) const;
  int max_degree() const { return delta_; }

 private:
  const Multigraph* g_;
  const WeakTwoFactor* f_;
  int delta_;
  std::vector<int> comp_of_, pos_of_;
  std::vector<CompKind> kind_;
};

// Tree whose vertex set is a union of components of the fixed weak 2-factor.
// A null tree has no vertices; the anchor is still carried.
struct GoodTree {
  BipartiteTree tree;
  std::vector<int> component_ids;

  bool is_null() const { return tree.vertex_count() == 0; }
};

// Bipartition assignment of one admissible even cycle: vertices at cycle
// positions with parity x_parity form its X side. entry_edge witnesses the
// chain condition (from the parent's Y side, or from the tree's Y side when
// parent_comp == -1); the seed cycle of a null tree has entry_edge == -1.
struct CycleAssignment {
  int x_parity = 0;
  int entry_edge = -1;
  int entry_y = -1;  // endpoint in the parent's Y side (or Y0)
  int entry_x = -1;  // endpoint in this cycle's X side
  int parent_comp = -1;
};

struct AdmissibleState {
  std::map<int, CycleAssignment> assignment;  // keyed by component id
  bool null_seed = false;
  int seed_comp = -1;             // component of w when seeded by the null tree
  std::vector<int> seed_entries;  // entry edges from Y0 when the tree is nonnull
};

enum class Recipe {
  AbsorbFromX0,
  AbsorbPathOrOddFromY0,
  DeficientY,
  Case1Outside,
  Case1IntoY0,
  Case2Common,
  Case2Disjoint,
  Case2Pivot,
};

const char* recipe_name(Recipe r);

// One link of an admissible sequence, root first. entry_* witness the edge
// into this cycle's X side from the previous link (or from Y0 / nothing).
struct ChainLink {
  int comp = -1;
  int entry_edge = -1;
  int entry_y = -1;
  int entry_x = -1;
};

// Everything needed to materialize one of the augmentation expressions:
// which recipe, the admissible sequence(s) with witness edges, the terminal
// vertices the cycle fragments hinge on, and the extra linking edge.
struct Augmentation {
  Recipe recipe;
  std::vector<ChainLink> chain;   // C1..Cl, root first
  std::vector<ChainLink> chain2;  // second sequence (full for Case2Disjoint, suffix for Case2Pivot)
  int terminal = -1;              // vertex on chain.back(): deficient z, or u, or pendant y
  int terminal2 = -1;             // z of the linking edge (Case1*, Case2*)
  int link_edge = -1;             // uz / yz edge; attach edge for the simple recipes
  int comp_id = -1;               // absorbed component (simple recipes, Case1Outside's Q)
};

// Starting tree from the anchor's own component: a path component is taken
// whole, an odd cycle is opened next to the anchor, and an even cycle is
// opened at a degree-deficient Y vertex or split along a Y-Y chord. When
// none of those apply the null tree is returned and the closure seeds at
// the anchor's cycle instead.
GoodTree init_tree(const FactorContext& ctx, int w, int lambda);

// Greedy breadth-first assignment of admissible even cycles: seeded by w's
// component (null tree) or by every even cycle hit from Y0, then closed under
// edges leaving assigned Y sides. On return no edge leaves an assigned Y side
// into an unassigned even cycle.
AdmissibleState admissible_closure(const FactorContext& ctx, const GoodTree& t);

// One simple absorption (an edge from X0 to any outside component, or from Y0
// to an outside path or odd cycle), if any exists.
std::optional<Augmentation> extend_simple(const FactorContext& ctx, const GoodTree& t);

// One applicable recipe, searched deficient-Y first, then the Y-Y edge
// recipes, then the independent-set recipes. Preconditions: t is not
// spanning and extend_simple is exhausted.
Augmentation find_augmentation(const FactorContext& ctx, const GoodTree& t, const AdmissibleState& s);

// Materializes the recipe, recolors from the anchor and validates the result
// is a strictly larger good weakly even tree. Violations are bugs and throw.
GoodTree apply_augmentation(const FactorContext& ctx, const GoodTree& t, const Augmentation& a);

// Some edge from Y to V minus (X union Y), lowest edge id, if any.
std::optional<int> y_out_edge(const Multigraph& g, const std::vector<int8_t>& in_x,
                              const std::vector<int8_t>& in_y);

struct Solve2ecStats {
  long long augmentations = 0;
  long long factor_components = 0;
};

struct SolveStats {
  std::vector<Solve2ecStats> calls;
};

// Spanning weakly even (w,lambda)-tree of a 2-edge-connected, not regular
// bipartite graph, by the weak-2-factor augmentation loop.
BipartiteTree solve_2ec(const Multigraph& g, int w, int lambda, SolveStats* stats = nullptr);

struct RegularBipartiteCertificate {
  int r = 0;
  std::vector<int8_t> coloring;
};

using SolveResult = std::variant<BipartiteTree, RegularBipartiteCertificate>;

// Spanning weakly even (w,lambda)-tree of any connected graph that is not
// regular bipartite, or the certificate that it is regular bipartite.
// Cutedges are handled by solving each side recursively and joining with
// opposite types at the bridge endpoints.
SolveResult solve(const Multigraph& g, int w, int lambda, SolveStats* stats = nullptr);

}  // namespace eventree
