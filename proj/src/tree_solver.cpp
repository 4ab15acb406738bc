#include "eventree/tree_solver.hpp"

#include <algorithm>
#include <string>

#include "eventree/errors.hpp"

namespace eventree {

FactorContext::FactorContext(const Multigraph& g, const WeakTwoFactor& f)
    : g_(&g), f_(&f), delta_(eventree::max_degree(g)) {
  int n = g.vertex_count();
  comp_of_.assign(static_cast<size_t>(n), -1);
  pos_of_.assign(static_cast<size_t>(n), -1);
  kind_.reserve(f.components.size());
  for (int c = 0; c < static_cast<int>(f.components.size()); ++c) {
    const FactorComponent& comp = f.components[static_cast<size_t>(c)];
    if (const OrientedCycle* cyc = std::get_if<OrientedCycle>(&comp)) {
      kind_.push_back(cyc->length() % 2 == 0 ? CompKind::EvenCycle : CompKind::OddCycle);
      for (int p = 0; p < cyc->length(); ++p) {
        comp_of_[static_cast<size_t>(cyc->vertices[static_cast<size_t>(p)])] = c;
        pos_of_[static_cast<size_t>(cyc->vertices[static_cast<size_t>(p)])] = p;
      }
    } else {
      const VertexPath& path = std::get<VertexPath>(comp);
      kind_.push_back(CompKind::Path);
      for (int p = 0; p < static_cast<int>(path.vertices.size()); ++p) {
        comp_of_[static_cast<size_t>(path.vertices[static_cast<size_t>(p)])] = c;
        pos_of_[static_cast<size_t>(path.vertices[static_cast<size_t>(p)])] = p;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (comp_of_[static_cast<size_t>(v)] == -1)
      throw InvalidInput("factor does not cover vertex " + std::to_string(v));
}

const OrientedCycle& FactorContext::cycle(int c) const {
  return std::get<OrientedCycle>(f_->components[static_cast<size_t>(c)]);
}

const VertexPath& FactorContext::path(int c) const {
  return std::get<VertexPath>(f_->components[static_cast<size_t>(c)]);
}

const std::vector<int>& FactorContext::comp_vertices(int c) const {
  const FactorComponent& comp = f_->components[static_cast<size_t>(c)];
  if (const OrientedCycle* cyc = std::get_if<OrientedCycle>(&comp)) return cyc->vertices;
  return std::get<VertexPath>(comp).vertices;
}

const char* recipe_name(Recipe r) {
  switch (r) {
    case Recipe::AbsorbFromX0: return "AbsorbFromX0";
    case Recipe::AbsorbPathOrOddFromY0: return "AbsorbPathOrOddFromY0";
    case Recipe::DeficientY: return "DeficientY";
    case Recipe::Case1Outside: return "Case1Outside";
    case Recipe::Case1IntoY0: return "Case1IntoY0";
    case Recipe::Case2Common: return "Case2Common";
    case Recipe::Case2Disjoint: return "Case2Disjoint";
    case Recipe::Case2Pivot: return "Case2Pivot";
  }
  return "?";
}

namespace {

GoodTree null_good_tree(const FactorContext& ctx, int w, int lambda) {
  GoodTree t;
  t.tree.types.assign(static_cast<size_t>(ctx.graph().vertex_count()), -1);
  t.tree.w = w;
  t.tree.lambda = lambda;
  return t;
}

// Edges of the near-Hamiltonian path of `cyc` that ends at `terminal`
// (everything except the edge leaving terminal along the orientation).
void add_ham_ending_at(const OrientedCycle& cyc, int terminal_pos, std::vector<int>& out) {
  for (int p = 0; p < cyc.length(); ++p)
    if (p != terminal_pos) out.push_back(cyc.edge_ids[static_cast<size_t>(p)]);
}

// Edges of the path around `cyc` that omits `pendant` entirely (both of the
// pendant's cycle edges are dropped); empty for a 2-cycle.
void add_path_avoiding(const OrientedCycle& cyc, int pendant_pos, std::vector<int>& out) {
  int len = cyc.length();
  int before = (pendant_pos + len - 1) % len;
  for (int p = 0; p < len; ++p)
    if (p != pendant_pos && p != before) out.push_back(cyc.edge_ids[static_cast<size_t>(p)]);
}

// Rebuilds the tree from scratch: add the new edges, recolor from the anchor,
// and check every structural promise. A failure here is a recipe bug.
GoodTree build_good_tree(const FactorContext& ctx, const GoodTree& old, std::vector<int> added_edges,
                         const std::vector<int>& absorbed, const char* what) {
  const Multigraph& g = ctx.graph();
  int n = g.vertex_count();
  auto bug = [&](const std::string& msg) -> ContractViolation {
    return ContractViolation(std::string(what) + ": " + msg);
  };
  if (absorbed.empty()) throw bug("augmentation absorbs no component");

  GoodTree out;
  out.tree.w = old.tree.w;
  out.tree.lambda = old.tree.lambda;
  out.tree.edge_ids = old.tree.edge_ids;
  out.tree.edge_ids.insert(out.tree.edge_ids.end(), added_edges.begin(), added_edges.end());
  out.component_ids = old.component_ids;

  std::vector<int8_t> member(static_cast<size_t>(n), 0);
  int member_count = 0;
  for (int v = 0; v < n; ++v)
    if (old.tree.contains(v)) {
      member[static_cast<size_t>(v)] = 1;
      ++member_count;
    }
  for (int c : absorbed) {
    out.component_ids.push_back(c);
    for (int v : ctx.comp_vertices(c)) {
      if (member[static_cast<size_t>(v)]) throw bug("component " + std::to_string(c) + " overlaps the tree");
      member[static_cast<size_t>(v)] = 1;
      ++member_count;
    }
  }

  {
    std::vector<int> sorted = out.tree.edge_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw bug("duplicate tree edge");
  }
  if (static_cast<int>(out.tree.edge_ids.size()) != member_count - 1)
    throw bug("edge count " + std::to_string(out.tree.edge_ids.size()) + " for " +
              std::to_string(member_count) + " vertices");

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  for (int e : out.tree.edge_ids) {
    const Edge& ed = g.edge(e);
    if (!member[static_cast<size_t>(ed.u)] || !member[static_cast<size_t>(ed.v)])
      throw bug("edge " + std::to_string(e) + " leaves the expected vertex set");
    adj[static_cast<size_t>(ed.u)].push_back({ed.v, e});
    adj[static_cast<size_t>(ed.v)].push_back({ed.u, e});
  }

  out.tree.types.assign(static_cast<size_t>(n), -1);
  if (!member[static_cast<size_t>(out.tree.w)]) throw bug("anchor outside the tree");
  out.tree.types[static_cast<size_t>(out.tree.w)] = static_cast<int8_t>(out.tree.lambda);
  std::vector<int> queue = {out.tree.w};
  int reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (auto [to, e] : adj[static_cast<size_t>(v)]) {
      if (out.tree.types[static_cast<size_t>(to)] == -1) {
        out.tree.types[static_cast<size_t>(to)] = static_cast<int8_t>(1 - out.tree.types[static_cast<size_t>(v)]);
        ++reached;
        queue.push_back(to);
      }
    }
  }
  if (reached != member_count) throw bug("tree is not connected over the absorbed components");

  int delta = ctx.max_degree();
  for (int v = 0; v < n; ++v) {
    if (!member[static_cast<size_t>(v)]) continue;
    if (adj[static_cast<size_t>(v)].size() == 1 && g.degree(v) == delta &&
        out.tree.types[static_cast<size_t>(v)] != 0)
      throw bug("maximum-degree leaf " + std::to_string(v) + " is type 1");
  }
  return out;
}

Augmentation make_simple(const FactorContext& ctx, const GoodTree& t, int from_vertex, int edge, int z) {
  Augmentation a;
  a.recipe = t.tree.types[static_cast<size_t>(from_vertex)] == 0 ? Recipe::AbsorbFromX0
                                                                 : Recipe::AbsorbPathOrOddFromY0;
  a.link_edge = edge;
  a.terminal2 = z;
  a.comp_id = ctx.comp_of(z);
  return a;
}

std::vector<ChainLink> root_path(const AdmissibleState& s, int comp) {
  std::vector<ChainLink> rev;
  int c = comp;
  while (c != -1) {
    auto it = s.assignment.find(c);
    if (it == s.assignment.end()) throw ContractViolation("chain walks through an unassigned cycle");
    rev.push_back({c, it->second.entry_edge, it->second.entry_y, it->second.entry_x});
    c = it->second.parent_comp;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

int root_of(const AdmissibleState& s, int comp) {
  int c = comp;
  for (;;) {
    int p = s.assignment.at(c).parent_comp;
    if (p == -1) return c;
    c = p;
  }
}

bool is_ancestor(const AdmissibleState& s, int anc, int c) {
  while (c != -1) {
    if (c == anc) return true;
    c = s.assignment.at(c).parent_comp;
  }
  return false;
}

}  // namespace

GoodTree init_tree(const FactorContext& ctx, int w, int lambda) {
  GoodTree null_tree = null_good_tree(ctx, w, lambda);
  int c0 = ctx.comp_of(w);
  if (ctx.kind(c0) == FactorContext::CompKind::Path) {
    return build_good_tree(ctx, null_tree, ctx.path(c0).edge_ids, {c0}, "init path");
  }
  const OrientedCycle& cyc = ctx.cycle(c0);
  int wpos = ctx.pos_of(w);
  if (ctx.kind(c0) == FactorContext::CompKind::OddCycle) {
    std::vector<int> edges;
    // successor path anchored so both leaves end up type 0
    add_ham_ending_at(cyc, lambda == 0 ? wpos : (wpos + 1) % cyc.length(), edges);
    return build_good_tree(ctx, null_tree, std::move(edges), {c0}, "init odd cycle");
  }
  // even cycle: X side carries the parity of w's position when lambda is 0
  int x_parity = lambda == 0 ? wpos % 2 : (wpos + 1) % 2;
  int delta = ctx.max_degree();
  for (int p = 0; p < cyc.length(); ++p) {
    if (p % 2 == x_parity) continue;
    int u = cyc.vertices[static_cast<size_t>(p)];
    if (ctx.graph().degree(u) < delta) {
      std::vector<int> edges;
      add_ham_ending_at(cyc, p, edges);
      return build_good_tree(ctx, null_tree, std::move(edges), {c0}, "init deficient Y");
    }
  }
  for (int e = 0; e < ctx.graph().edge_count(); ++e) {
    const Edge& ed = ctx.graph().edge(e);
    if (ctx.comp_of(ed.u) != c0 || ctx.comp_of(ed.v) != c0) continue;
    if (ctx.pos_of(ed.u) % 2 == x_parity || ctx.pos_of(ed.v) % 2 == x_parity) continue;
    int pendant = ed.u == w ? ed.v : ed.u;
    std::vector<int> edges = {e};
    add_path_avoiding(cyc, ctx.pos_of(pendant), edges);
    return build_good_tree(ctx, null_tree, std::move(edges), {c0}, "init Y-Y chord");
  }
  return null_tree;
}

AdmissibleState admissible_closure(const FactorContext& ctx, const GoodTree& t) {
  const Multigraph& g = ctx.graph();
  AdmissibleState s;
  std::vector<int> queue;

  auto assign = [&](int c, int x_anchor, int entry_edge, int entry_y, int parent) {
    CycleAssignment asg;
    asg.x_parity = ctx.pos_of(x_anchor) % 2;
    asg.entry_edge = entry_edge;
    asg.entry_y = entry_y;
    asg.entry_x = x_anchor;
    asg.parent_comp = parent;
    s.assignment.emplace(c, asg);
    queue.push_back(c);
  };

  if (t.is_null()) {
    int c0 = ctx.comp_of(t.tree.w);
    if (ctx.kind(c0) != FactorContext::CompKind::EvenCycle)
      throw ContractViolation("null tree requires an even seed cycle");
    s.null_seed = true;
    s.seed_comp = c0;
    CycleAssignment asg;
    asg.x_parity = t.tree.lambda == 0 ? ctx.pos_of(t.tree.w) % 2 : (ctx.pos_of(t.tree.w) + 1) % 2;
    s.assignment.emplace(c0, asg);
    queue.push_back(c0);
  } else {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (t.tree.types[static_cast<size_t>(v)] != 1) continue;
      for (const IncidenceEntry& ie : g.incident(v)) {
        if (t.tree.contains(ie.to)) continue;
        int c = ctx.comp_of(ie.to);
        if (ctx.kind(c) != FactorContext::CompKind::EvenCycle) continue;
        if (s.assignment.count(c)) continue;
        assign(c, ie.to, ie.edge, v, -1);
        s.seed_entries.push_back(ie.edge);
      }
    }
  }

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int c = queue[qi];
    const CycleAssignment& asg = s.assignment.at(c);
    const OrientedCycle& cyc = ctx.cycle(c);
    for (int p = 0; p < cyc.length(); ++p) {
      if (p % 2 == asg.x_parity) continue;  // only the Y side extends chains
      int v = cyc.vertices[static_cast<size_t>(p)];
      for (const IncidenceEntry& ie : g.incident(v)) {
        if (t.tree.contains(ie.to)) continue;
        int c2 = ctx.comp_of(ie.to);
        if (c2 == c || ctx.kind(c2) != FactorContext::CompKind::EvenCycle) continue;
        if (s.assignment.count(c2)) continue;
        assign(c2, ie.to, ie.edge, v, c);
      }
    }
  }
  return s;
}

std::optional<Augmentation> extend_simple(const FactorContext& ctx, const GoodTree& t) {
  const Multigraph& g = ctx.graph();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!t.tree.contains(v)) continue;
    for (const IncidenceEntry& ie : g.incident(v)) {
      if (t.tree.contains(ie.to)) continue;
      if (t.tree.types[static_cast<size_t>(v)] == 0 ||
          ctx.kind(ctx.comp_of(ie.to)) != FactorContext::CompKind::EvenCycle)
        return make_simple(ctx, t, v, ie.edge, ie.to);
    }
  }
  return std::nullopt;
}

std::optional<int> y_out_edge(const Multigraph& g, const std::vector<int8_t>& in_x,
                              const std::vector<int8_t>& in_y) {
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    bool u_side = in_y[static_cast<size_t>(ed.u)] && !in_x[static_cast<size_t>(ed.v)] &&
                  !in_y[static_cast<size_t>(ed.v)];
    bool v_side = in_y[static_cast<size_t>(ed.v)] && !in_x[static_cast<size_t>(ed.u)] &&
                  !in_y[static_cast<size_t>(ed.u)];
    if (u_side || v_side) return e;
  }
  return std::nullopt;
}

Augmentation find_augmentation(const FactorContext& ctx, const GoodTree& t, const AdmissibleState& s) {
  const Multigraph& g = ctx.graph();
  int n = g.vertex_count();
  int delta = ctx.max_degree();

  // (1) a degree-deficient vertex on the Y side of an admissible cycle
  for (const auto& [c, asg] : s.assignment) {
    const OrientedCycle& cyc = ctx.cycle(c);
    for (int p = 0; p < cyc.length(); ++p) {
      if (p % 2 == asg.x_parity) continue;
      int v = cyc.vertices[static_cast<size_t>(p)];
      if (g.degree(v) < delta) {
        Augmentation a;
        a.recipe = Recipe::DeficientY;
        a.chain = root_path(s, c);
        a.terminal = v;
        return a;
      }
    }
  }

  std::vector<int8_t> in_x(static_cast<size_t>(n), 0), in_y(static_cast<size_t>(n), 0);
  for (const auto& [c, asg] : s.assignment) {
    const OrientedCycle& cyc = ctx.cycle(c);
    for (int p = 0; p < cyc.length(); ++p) {
      int v = cyc.vertices[static_cast<size_t>(p)];
      (p % 2 == asg.x_parity ? in_x : in_y)[static_cast<size_t>(v)] = 1;
    }
  }

  // (2) an edge with both ends in admissible Y sides
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (!in_y[static_cast<size_t>(ed.u)] || !in_y[static_cast<size_t>(ed.v)]) continue;
    int cu = ctx.comp_of(ed.u), cv = ctx.comp_of(ed.v);
    Augmentation a;
    a.link_edge = e;
    if (cu == cv) {
      a.recipe = Recipe::Case2Common;
      // the pendant swings to type 0, so it must not be the anchor
      bool swap = t.is_null() && ed.u == t.tree.w;
      a.terminal = swap ? ed.v : ed.u;
      a.terminal2 = swap ? ed.u : ed.v;
      a.chain = root_path(s, cu);
      return a;
    }
    if (is_ancestor(s, cv, cu)) {
      a.recipe = Recipe::Case2Common;
      a.terminal = ed.u;
      a.terminal2 = ed.v;
      a.chain = root_path(s, cu);
      return a;
    }
    if (is_ancestor(s, cu, cv)) {
      a.recipe = Recipe::Case2Common;
      a.terminal = ed.v;
      a.terminal2 = ed.u;
      a.chain = root_path(s, cv);
      return a;
    }
    if (root_of(s, cu) != root_of(s, cv)) {
      if (t.is_null()) throw ContractViolation("disjoint chains under a null tree");
      a.recipe = Recipe::Case2Disjoint;
      a.terminal = ed.u;
      a.terminal2 = ed.v;
      a.chain = root_path(s, cu);
      a.chain2 = root_path(s, cv);
      return a;
    }
    // same root, neither on the other's chain: splice the second chain's
    // tail after the deepest shared cycle
    a.recipe = Recipe::Case2Pivot;
    a.terminal = ed.u;
    a.terminal2 = ed.v;
    a.chain = root_path(s, cu);
    std::vector<ChainLink> full2 = root_path(s, cv);
    size_t b = 0;
    for (size_t j = 0; j < full2.size(); ++j)
      for (const ChainLink& link : a.chain)
        if (link.comp == full2[j].comp) b = j;
    a.chain2.assign(full2.begin() + static_cast<long>(b) + 1, full2.end());
    if (a.chain2.empty()) throw ContractViolation("pivot with an empty tail");
    return a;
  }

  // (3) independent admissible Y: some edge must leave it
  std::optional<int> out = y_out_edge(g, in_x, in_y);
  if (!out)
    throw ContractViolation("no augmentation applies: tree " + std::to_string(t.tree.vertex_count()) +
                            "/" + std::to_string(n) + " vertices, " +
                            std::to_string(s.assignment.size()) + " admissible cycles");
  const Edge& ed = g.edge(*out);
  int u = in_y[static_cast<size_t>(ed.u)] ? ed.u : ed.v;
  int z = g.opposite(*out, u);
  Augmentation a;
  a.link_edge = *out;
  a.terminal = u;
  a.terminal2 = z;
  a.chain = root_path(s, ctx.comp_of(u));
  if (t.tree.contains(z)) {
    if (t.tree.types[static_cast<size_t>(z)] != 1)
      throw ContractViolation("escape edge reaches X0 although X0 was exhausted");
    a.recipe = Recipe::Case1IntoY0;
    return a;
  }
  int cz = ctx.comp_of(z);
  if (ctx.kind(cz) == FactorContext::CompKind::EvenCycle)
    throw ContractViolation("closure missed an even cycle adjacent to admissible Y");
  a.recipe = Recipe::Case1Outside;
  a.comp_id = cz;
  return a;
}

GoodTree apply_augmentation(const FactorContext& ctx, const GoodTree& t, const Augmentation& a) {
  std::vector<int> added;
  std::vector<int> absorbed;

  auto add_component_whole_or_ham = [&](int comp, int hinge_vertex) {
    // path components contribute all edges; odd cycles the near-Hamiltonian
    // path ending at the hinge
    if (ctx.kind(comp) == FactorContext::CompKind::Path) {
      const VertexPath& path = ctx.path(comp);
      added.insert(added.end(), path.edge_ids.begin(), path.edge_ids.end());
    } else {
      add_ham_ending_at(ctx.cycle(comp), ctx.pos_of(hinge_vertex), added);
    }
    absorbed.push_back(comp);
  };

  auto add_chain = [&](const std::vector<ChainLink>& chain, bool pendant_last, int terminal) {
    for (size_t i = 0; i < chain.size(); ++i) {
      const ChainLink& link = chain[i];
      absorbed.push_back(link.comp);
      if (link.entry_edge >= 0) added.push_back(link.entry_edge);
      const OrientedCycle& cyc = ctx.cycle(link.comp);
      if (i + 1 < chain.size()) {
        add_ham_ending_at(cyc, ctx.pos_of(chain[i + 1].entry_y), added);
      } else if (pendant_last) {
        add_path_avoiding(cyc, ctx.pos_of(terminal), added);
      } else {
        add_ham_ending_at(cyc, ctx.pos_of(terminal), added);
      }
    }
  };

  switch (a.recipe) {
    case Recipe::AbsorbFromX0: {
      added.push_back(a.link_edge);
      int comp = a.comp_id;
      int z = a.terminal2;
      if (ctx.kind(comp) == FactorContext::CompKind::Path) {
        const VertexPath& path = ctx.path(comp);
        added.insert(added.end(), path.edge_ids.begin(), path.edge_ids.end());
      } else if (ctx.kind(comp) == FactorContext::CompKind::EvenCycle) {
        add_ham_ending_at(ctx.cycle(comp), ctx.pos_of(z), added);
      } else {
        // odd cycle hit from X0 hinges one step later so both fragment ends
        // land in the tree's X side
        add_ham_ending_at(ctx.cycle(comp), (ctx.pos_of(z) + 1) % ctx.cycle(comp).length(), added);
      }
      absorbed.push_back(comp);
      break;
    }
    case Recipe::AbsorbPathOrOddFromY0: {
      if (ctx.kind(a.comp_id) == FactorContext::CompKind::EvenCycle)
        throw ContractViolation("even cycle absorbed from Y0 outside the admissible machinery");
      added.push_back(a.link_edge);
      add_component_whole_or_ham(a.comp_id, a.terminal2);
      break;
    }
    case Recipe::DeficientY:
      add_chain(a.chain, false, a.terminal);
      break;
    case Recipe::Case1Outside:
      add_chain(a.chain, false, a.terminal);
      added.push_back(a.link_edge);
      add_component_whole_or_ham(a.comp_id, a.terminal2);
      break;
    case Recipe::Case1IntoY0:
      add_chain(a.chain, true, a.terminal);
      added.push_back(a.link_edge);
      break;
    case Recipe::Case2Common:
      add_chain(a.chain, true, a.terminal);
      added.push_back(a.link_edge);
      break;
    case Recipe::Case2Disjoint:
    case Recipe::Case2Pivot:
      add_chain(a.chain, true, a.terminal);
      add_chain(a.chain2, false, a.terminal2);
      added.push_back(a.link_edge);
      break;
  }
  return build_good_tree(ctx, t, std::move(added), absorbed, recipe_name(a.recipe));
}

namespace {

BipartiteTree trivial_tree(int n, int w, int lambda) {
  BipartiteTree t;
  t.types.assign(static_cast<size_t>(n), -1);
  t.types[static_cast<size_t>(w)] = static_cast<int8_t>(lambda);
  t.w = w;
  t.lambda = lambda;
  return t;
}

void validate_solver_input(const Multigraph& g, int w, int lambda) {
  if (g.vertex_count() < 1) throw InvalidInput("solve requires at least one vertex");
  if (w < 0 || w >= g.vertex_count()) throw InvalidInput("anchor vertex out of range");
  if (lambda != 0 && lambda != 1) throw InvalidInput("lambda must be 0 or 1");
  if (!is_connected(g)) throw InvalidInput("solve requires a connected graph");
}

// Final gate before a tree leaves the solver; failures here are bugs.
void check_output_tree(const Multigraph& g, const BipartiteTree& t) {
  VerificationReport rep = is_weakly_even_tree(g, t);
  if (!rep.passed) throw ContractViolation("solver output failed self-check: " + rep.condition);
}

}  // namespace

BipartiteTree solve_2ec(const Multigraph& g, int w, int lambda, SolveStats* stats) {
  validate_solver_input(g, w, lambda);
  int n = g.vertex_count();
  if (n == 1) return trivial_tree(1, w, lambda);
  if (!bridges(g).empty()) throw InvalidInput("solve_2ec requires a 2-edge-connected graph");
  if (std::holds_alternative<Regular>(regularity(g)) &&
      std::holds_alternative<std::vector<int8_t>>(bipartition(g)))
    throw InvalidInput("solve_2ec requires a graph that is not regular bipartite");

  WeakTwoFactor f = weak_two_factor(g);
  FactorContext ctx(g, f);
  Solve2ecStats st;
  st.factor_components = static_cast<long long>(f.components.size());

  GoodTree t = init_tree(ctx, w, lambda);
  std::vector<int> scan_queue;
  auto enqueue_absorbed = [&](const std::vector<int>& comps, size_t from) {
    for (size_t i = from; i < comps.size(); ++i)
      for (int v : ctx.comp_vertices(comps[static_cast<size_t>(i)])) scan_queue.push_back(v);
  };
  if (!t.is_null()) {
    st.augmentations += 1;
    enqueue_absorbed(t.component_ids, 0);
  }

  size_t head = 0;
  while (t.tree.vertex_count() < n) {
    // simple absorptions to fixpoint; each tree vertex is scanned once,
    // against a tree that only grows
    while (head < scan_queue.size()) {
      int v = scan_queue[head++];
      for (const IncidenceEntry& ie : g.incident(v)) {
        if (t.tree.contains(ie.to)) continue;
        if (t.tree.types[static_cast<size_t>(v)] == 0 ||
            ctx.kind(ctx.comp_of(ie.to)) != FactorContext::CompKind::EvenCycle) {
          size_t before = t.component_ids.size();
          t = apply_augmentation(ctx, t, make_simple(ctx, t, v, ie.edge, ie.to));
          st.augmentations += 1;
          enqueue_absorbed(t.component_ids, before);
        }
      }
    }
    if (t.tree.vertex_count() >= n) break;

    AdmissibleState state = admissible_closure(ctx, t);
    Augmentation aug = find_augmentation(ctx, t, state);
    size_t before = t.component_ids.size();
    t = apply_augmentation(ctx, t, aug);
    st.augmentations += 1;
    enqueue_absorbed(t.component_ids, before);
  }

  if (stats) stats->calls.push_back(st);
  check_output_tree(g, t.tree);
  return t.tree;
}

namespace {

// Any spanning tree, BFS from the anchor, typed by BFS parity. Used for
// regular bipartite sides of a cutedge split, whose maximum degree is
// strictly below the whole graph's.
BipartiteTree bfs_spanning_tree(const Multigraph& g, int w, int lambda) {
  int n = g.vertex_count();
  BipartiteTree t;
  t.w = w;
  t.lambda = lambda;
  t.types.assign(static_cast<size_t>(n), -1);
  t.types[static_cast<size_t>(w)] = static_cast<int8_t>(lambda);
  std::vector<int> queue = {w};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (const IncidenceEntry& ie : g.incident(v)) {
      if (t.types[static_cast<size_t>(ie.to)] != -1) continue;
      t.types[static_cast<size_t>(ie.to)] = static_cast<int8_t>(1 - t.types[static_cast<size_t>(v)]);
      t.edge_ids.push_back(ie.edge);
      queue.push_back(ie.to);
    }
  }
  return t;
}

BipartiteTree solve_side(const SubgraphView& side, int w_local, int lambda_local, SolveStats* stats) {
  const Multigraph& sub = side.graph;
  if (sub.vertex_count() >= 2 && std::holds_alternative<Regular>(regularity(sub)) &&
      std::holds_alternative<std::vector<int8_t>>(bipartition(sub)))
    return bfs_spanning_tree(sub, w_local, lambda_local);
  SolveResult res = solve(sub, w_local, lambda_local, stats);
  if (!std::holds_alternative<BipartiteTree>(res))
    throw ContractViolation("side was classified regular bipartite inconsistently");
  return std::get<BipartiteTree>(std::move(res));
}

}  // namespace

SolveResult solve(const Multigraph& g, int w, int lambda, SolveStats* stats) {
  validate_solver_input(g, w, lambda);
  int n = g.vertex_count();
  if (n == 1) return trivial_tree(1, w, lambda);

  Regularity reg = regularity(g);
  if (const Regular* r = std::get_if<Regular>(&reg)) {
    BipartitionResult bip = bipartition(g);
    if (const auto* coloring = std::get_if<std::vector<int8_t>>(&bip))
      return RegularBipartiteCertificate{r->r, *coloring};
  }

  std::vector<int> cut = bridges(g);
  if (cut.empty()) return solve_2ec(g, w, lambda, stats);

  // middle cutedge keeps the recursion shallow on long chains
  int e = cut[cut.size() / 2];
  SubgraphView side_w = extract_component(g, w, e);
  int x1 = side_w.local_vertex[static_cast<size_t>(g.edge(e).u)] != -1 ? g.edge(e).u : g.edge(e).v;
  int x2 = g.opposite(e, x1);
  SubgraphView side_o = extract_component(g, x2, e);

  BipartiteTree t1 = solve_side(side_w, side_w.local_vertex[static_cast<size_t>(w)], lambda, stats);
  int lambda2 = 1 - t1.types[static_cast<size_t>(side_w.local_vertex[static_cast<size_t>(x1)])];
  BipartiteTree t2 = solve_side(side_o, side_o.local_vertex[static_cast<size_t>(x2)], lambda2, stats);

  BipartiteTree out;
  out.w = w;
  out.lambda = lambda;
  out.types.assign(static_cast<size_t>(n), -1);
  for (int lv = 0; lv < side_w.graph.vertex_count(); ++lv)
    out.types[static_cast<size_t>(side_w.back_vertex[static_cast<size_t>(lv)])] = t1.types[static_cast<size_t>(lv)];
  for (int lv = 0; lv < side_o.graph.vertex_count(); ++lv)
    out.types[static_cast<size_t>(side_o.back_vertex[static_cast<size_t>(lv)])] = t2.types[static_cast<size_t>(lv)];
  for (int le : t1.edge_ids) out.edge_ids.push_back(side_w.back_edge[static_cast<size_t>(le)]);
  for (int le : t2.edge_ids) out.edge_ids.push_back(side_o.back_edge[static_cast<size_t>(le)]);
  out.edge_ids.push_back(e);

  check_output_tree(g, out);
  return out;
}

}  // namespace eventree
