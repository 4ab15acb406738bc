#include "eventree/verify.hpp"

#include <algorithm>
#include <numeric>

namespace eventree {

namespace {

// Self-contained union-find; the checkers do their own connectivity.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

std::vector<int> host_degrees(const Multigraph& g) {
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    ++deg[static_cast<size_t>(e.u)];
    ++deg[static_cast<size_t>(e.v)];
  }
  return deg;
}

// Shared structural gate for both tree checkers. Returns a failing report or
// ok; fills tree degrees on success.
VerificationReport check_spanning_tree(const Multigraph& g, const BipartiteTree& t,
                                       std::vector<int>& tree_deg) {
  int n = g.vertex_count();
  if (static_cast<int>(t.types.size()) != n)
    return VerificationReport::fail("types_cover_vertices");
  if (t.w < 0 || t.w >= n || (t.lambda != 0 && t.lambda != 1))
    return VerificationReport::fail("anchor_in_range", {t.w});
  for (int v = 0; v < n; ++v) {
    if (t.types[static_cast<size_t>(v)] < 0) return VerificationReport::fail("spans", {v});
    if (t.types[static_cast<size_t>(v)] > 1) return VerificationReport::fail("types_binary", {v});
  }
  if (static_cast<int>(t.edge_ids.size()) != n - 1)
    return VerificationReport::fail("edge_count", {}, t.edge_ids);
  tree_deg.assign(static_cast<size_t>(n), 0);
  Dsu dsu(n);
  for (int e : t.edge_ids) {
    if (e < 0 || e >= g.edge_count()) return VerificationReport::fail("edge_exists", {}, {e});
    const Edge& ed = g.edge(e);
    if (!dsu.unite(ed.u, ed.v)) return VerificationReport::fail("acyclic", {ed.u, ed.v}, {e});
    ++tree_deg[static_cast<size_t>(ed.u)];
    ++tree_deg[static_cast<size_t>(ed.v)];
  }
  // n-1 unions all succeeding means connected
  for (int e : t.edge_ids) {
    const Edge& ed = g.edge(e);
    if (t.types[static_cast<size_t>(ed.u)] == t.types[static_cast<size_t>(ed.v)])
      return VerificationReport::fail("bichromatic_edges", {ed.u, ed.v}, {e});
  }
  if (t.types[static_cast<size_t>(t.w)] != t.lambda)
    return VerificationReport::fail("anchor_type", {t.w});
  return VerificationReport::ok();
}

}  // namespace

int BipartiteTree::vertex_count() const {
  int c = 0;
  for (int8_t ty : types)
    if (ty >= 0) ++c;
  return c;
}

VerificationReport is_weakly_even_tree(const Multigraph& g, const BipartiteTree& t) {
  std::vector<int> tree_deg;
  VerificationReport gate = check_spanning_tree(g, t, tree_deg);
  if (!gate.passed) return gate;
  std::vector<int> deg = host_degrees(g);
  int delta = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (tree_deg[static_cast<size_t>(v)] == 1 && deg[static_cast<size_t>(v)] == delta &&
        t.types[static_cast<size_t>(v)] != 0)
      return VerificationReport::fail("max_degree_leaf_type0", {v});
  }
  return VerificationReport::ok();
}

VerificationReport is_even_tree(const Multigraph& g, const BipartiteTree& t) {
  std::vector<int> tree_deg;
  VerificationReport gate = check_spanning_tree(g, t, tree_deg);
  if (!gate.passed) return gate;
  int8_t leaf_type = -1;
  int first_leaf = -1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (tree_deg[static_cast<size_t>(v)] != 1) continue;
    if (leaf_type == -1) {
      leaf_type = t.types[static_cast<size_t>(v)];
      first_leaf = v;
    } else if (t.types[static_cast<size_t>(v)] != leaf_type) {
      return VerificationReport::fail("leaves_one_type", {first_leaf, v});
    }
  }
  return VerificationReport::ok();
}

VerificationReport is_weak_two_factor(const Multigraph& g, const WeakTwoFactor& f) {
  int n = g.vertex_count();
  std::vector<int> owner(static_cast<size_t>(n), -1);
  for (int c = 0; c < static_cast<int>(f.components.size()); ++c) {
    const std::vector<int>* verts = nullptr;
    if (const OrientedCycle* cyc = std::get_if<OrientedCycle>(&f.components[static_cast<size_t>(c)]))
      verts = &cyc->vertices;
    else
      verts = &std::get<VertexPath>(f.components[static_cast<size_t>(c)]).vertices;
    for (int v : *verts) {
      if (v < 0 || v >= n) return VerificationReport::fail("vertex_in_range", {v});
      if (owner[static_cast<size_t>(v)] != -1) return VerificationReport::fail("partition_disjoint", {v});
      owner[static_cast<size_t>(v)] = c;
    }
  }
  for (int v = 0; v < n; ++v)
    if (owner[static_cast<size_t>(v)] == -1) return VerificationReport::fail("partition_covers", {v});

  auto edge_joins = [&](int e, int a, int b) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    return (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
  };

  for (const FactorComponent& comp : f.components) {
    if (const OrientedCycle* cyc = std::get_if<OrientedCycle>(&comp)) {
      int len = cyc->length();
      if (len < 2 || static_cast<int>(cyc->edge_ids.size()) != len)
        return VerificationReport::fail("cycle_shape", cyc->vertices);
      std::vector<int> seen_edges;
      for (int i = 0; i < len; ++i) {
        int e = cyc->edge_ids[static_cast<size_t>(i)];
        if (!edge_joins(e, cyc->vertices[static_cast<size_t>(i)], cyc->vertices[static_cast<size_t>((i + 1) % len)]))
          return VerificationReport::fail("cycle_edges_consecutive", {}, {e});
        seen_edges.push_back(e);
      }
      std::sort(seen_edges.begin(), seen_edges.end());
      if (std::adjacent_find(seen_edges.begin(), seen_edges.end()) != seen_edges.end())
        return VerificationReport::fail("cycle_edges_distinct", {}, seen_edges);
    } else {
      const VertexPath& path = std::get<VertexPath>(comp);
      if (path.vertices.empty() || path.edge_ids.size() + 1 != path.vertices.size())
        return VerificationReport::fail("path_shape", path.vertices);
      for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        int e = path.edge_ids[i];
        if (!edge_joins(e, path.vertices[i], path.vertices[i + 1]))
          return VerificationReport::fail("path_edges_consecutive", {}, {e});
      }
    }
  }

  std::vector<int> deg = host_degrees(g);
  int delta = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  for (const FactorComponent& comp : f.components) {
    if (const VertexPath* path = std::get_if<VertexPath>(&comp)) {
      int a = path->vertices.front();
      int b = path->vertices.back();
      if (deg[static_cast<size_t>(a)] >= delta) return VerificationReport::fail("path_end_deficient", {a});
      if (deg[static_cast<size_t>(b)] >= delta) return VerificationReport::fail("path_end_deficient", {b});
    }
  }
  return VerificationReport::ok();
}

VerificationReport is_good_tree(const Multigraph& g, const BipartiteTree& t, const WeakTwoFactor& f) {
  int n = g.vertex_count();
  if (static_cast<int>(t.types.size()) != n) return VerificationReport::fail("types_cover_vertices");
  // every component is entirely inside or entirely outside the tree
  for (const FactorComponent& comp : f.components) {
    const std::vector<int>& verts = std::holds_alternative<OrientedCycle>(comp)
                                        ? std::get<OrientedCycle>(comp).vertices
                                        : std::get<VertexPath>(comp).vertices;
    int inside = 0;
    for (int v : verts)
      if (t.contains(v)) ++inside;
    if (inside != 0 && inside != static_cast<int>(verts.size()))
      return VerificationReport::fail("component_union", verts);
  }
  return VerificationReport::ok();
}

}  // namespace eventree
