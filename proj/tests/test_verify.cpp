#include <doctest.h>

#include "eventree/verify.hpp"

using namespace eventree;

namespace {

Multigraph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph complete4() { return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

BipartiteTree tree_of(const Multigraph& g, std::vector<int> edges, int w, int lambda) {
  BipartiteTree t;
  t.edge_ids = std::move(edges);
  t.w = w;
  t.lambda = lambda;
  t.types.assign(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
  for (int e : t.edge_ids) {
    adj[static_cast<size_t>(g.edge(e).u)].push_back(g.edge(e).v);
    adj[static_cast<size_t>(g.edge(e).v)].push_back(g.edge(e).u);
  }
  t.types[static_cast<size_t>(w)] = static_cast<int8_t>(lambda);
  std::vector<int> queue = {w};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int to : adj[static_cast<size_t>(queue[qi])])
      if (t.types[static_cast<size_t>(to)] == -1) {
        t.types[static_cast<size_t>(to)] = static_cast<int8_t>(1 - t.types[static_cast<size_t>(queue[qi])]);
        queue.push_back(to);
      }
  return t;
}

}  // namespace

TEST_CASE("K4 star centered opposite the anchor passes") {
  Multigraph g = complete4();
  // star at vertex 3: edges (0,3),(1,3),(2,3)
  BipartiteTree t = tree_of(g, {2, 4, 5}, 0, 0);
  CHECK(is_weakly_even_tree(g, t).passed);
  CHECK(is_even_tree(g, t).passed);
}

TEST_CASE("every spanning path of C4 fails") {
  Multigraph g = cycle(4);
  for (int drop = 0; drop < 4; ++drop) {
    std::vector<int> edges;
    for (int e = 0; e < 4; ++e)
      if (e != drop) edges.push_back(e);
    BipartiteTree t = tree_of(g, edges, 0, 0);
    VerificationReport rep = is_weakly_even_tree(g, t);
    CHECK_FALSE(rep.passed);
    CHECK(rep.condition == "max_degree_leaf_type0");
  }
}

TEST_CASE("single vertex with the empty tree passes vacuously") {
  Multigraph g(1, {});
  BipartiteTree t = tree_of(g, {}, 0, 1);
  CHECK(is_weakly_even_tree(g, t).passed);
}

TEST_CASE("structural gates fire in fixed order") {
  Multigraph g = cycle(4);
  BipartiteTree missing = tree_of(g, {0, 1}, 0, 0);  // vertex 3 untyped
  CHECK(is_weakly_even_tree(g, missing).condition == "spans");

  BipartiteTree cyclic = tree_of(g, {0, 1, 2}, 0, 0);
  cyclic.edge_ids.push_back(3);  // closes the cycle
  CHECK(is_weakly_even_tree(g, cyclic).condition == "edge_count");

  Multigraph h(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  BipartiteTree bad = tree_of(h, {0, 1, 3}, 0, 0);
  bad.edge_ids = {0, 1, 2};  // triangle, vertex 3 typed but disconnected
  CHECK(is_weakly_even_tree(h, bad).condition == "acyclic");

  BipartiteTree anchored = tree_of(g, {0, 1, 2}, 0, 0);
  anchored.lambda = 1;  // types say 0
  CHECK(is_weakly_even_tree(g, anchored).condition == "anchor_type");

  BipartiteTree garbage = tree_of(g, {0, 1, 2}, 0, 0);
  garbage.types[2] = 7;
  CHECK(is_weakly_even_tree(g, garbage).condition == "types_binary");
}

TEST_CASE("even tree checker looks at every leaf") {
  Multigraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(is_even_tree(star, tree_of(star, {0, 1, 2}, 1, 0)).passed);

  Multigraph p3(3, {{0, 1}, {1, 2}});
  CHECK(is_even_tree(p3, tree_of(p3, {0, 1}, 0, 0)).passed);

  Multigraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  VerificationReport rep = is_even_tree(p4, tree_of(p4, {0, 1, 2}, 0, 0));
  CHECK_FALSE(rep.passed);
  CHECK(rep.condition == "leaves_one_type");
}

TEST_CASE("weak 2-factor checker accepts a plain cycle") {
  Multigraph g = cycle(5);
  WeakTwoFactor f;
  f.components.push_back(OrientedCycle{{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}});
  CHECK(is_weak_two_factor(g, f).passed);
}

TEST_CASE("weak 2-factor checker flags max-degree path ends") {
  // vertex 1 has maximum degree 3, so a path ending there is invalid
  Multigraph g(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}});
  WeakTwoFactor f;
  f.components.push_back(VertexPath{{0, 1}, {0}});
  f.components.push_back(VertexPath{{2}, {}});
  f.components.push_back(VertexPath{{3}, {}});
  VerificationReport rep = is_weak_two_factor(g, f);
  CHECK_FALSE(rep.passed);
  CHECK(rep.condition == "path_end_deficient");
  CHECK(rep.witness_vertices == std::vector<int>{1});
}

TEST_CASE("weak 2-factor checker flags overlap and gaps") {
  Multigraph g = cycle(4);
  WeakTwoFactor overlap;
  overlap.components.push_back(VertexPath{{0, 1}, {0}});
  overlap.components.push_back(VertexPath{{1, 2}, {1}});
  overlap.components.push_back(VertexPath{{3}, {}});
  CHECK(is_weak_two_factor(g, overlap).condition == "partition_disjoint");

  WeakTwoFactor gap;
  gap.components.push_back(VertexPath{{0, 1}, {0}});
  CHECK(is_weak_two_factor(g, gap).condition == "partition_covers");

  WeakTwoFactor bad_edge;
  bad_edge.components.push_back(OrientedCycle{{0, 1, 2, 3}, {0, 1, 2, 0}});
  CHECK(is_weak_two_factor(g, bad_edge).condition == "cycle_edges_consecutive");
}

TEST_CASE("good tree means a union of whole components") {
  Multigraph g = cycle(6);
  WeakTwoFactor f;
  f.components.push_back(OrientedCycle{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}});

  BipartiteTree whole = tree_of(g, {0, 1, 2, 3, 4}, 0, 0);
  CHECK(is_good_tree(g, whole, f).passed);

  BipartiteTree half;
  half.types.assign(6, -1);
  half.types[0] = 0;
  half.types[1] = 1;
  half.edge_ids = {0};
  CHECK_FALSE(is_good_tree(g, half, f).passed);

  BipartiteTree null_tree;
  null_tree.types.assign(6, -1);
  CHECK(is_good_tree(g, null_tree, f).passed);
}
