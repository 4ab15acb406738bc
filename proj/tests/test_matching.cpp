#include <doctest.h>

#include <algorithm>

#include "eventree/errors.hpp"
#include "eventree/generators.hpp"
#include "eventree/matching.hpp"

using namespace eventree;

namespace {

Multigraph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, std::move(edges));
}

Multigraph petersen() {
  return Multigraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// Exhaustive maximum matching size by branching on each edge.
int brute_force_max_matching(const Multigraph& g, int from = 0, std::vector<int8_t>* used = nullptr) {
  std::vector<int8_t> local;
  if (!used) {
    local.assign(static_cast<size_t>(g.vertex_count()), 0);
    used = &local;
  }
  int best = 0;
  for (int e = from; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if ((*used)[static_cast<size_t>(ed.u)] || (*used)[static_cast<size_t>(ed.v)]) continue;
    (*used)[static_cast<size_t>(ed.u)] = (*used)[static_cast<size_t>(ed.v)] = 1;
    best = std::max(best, 1 + brute_force_max_matching(g, e + 1, used));
    (*used)[static_cast<size_t>(ed.u)] = (*used)[static_cast<size_t>(ed.v)] = 0;
  }
  return best;
}

bool is_valid_matching(const Multigraph& g, const Matching& m) {
  std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
  for (int e : m.matched_edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++deg[static_cast<size_t>(g.edge(e).u)];
    ++deg[static_cast<size_t>(g.edge(e).v)];
  }
  for (int d : deg)
    if (d > 1) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int mate = m.mate[static_cast<size_t>(v)];
    if (mate != -1 && m.mate[static_cast<size_t>(mate)] != v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("4-cycle has a perfect matching of size 2") {
  Matching m = maximum_matching(cycle(4));
  CHECK(m.size() == 2);
  CHECK(is_valid_matching(cycle(4), m));
}

TEST_CASE("5-cycle peaks at size 2") {
  Matching m = maximum_matching(cycle(5));
  CHECK(m.size() == 2);
}

TEST_CASE("petersen graph has a perfect matching") {
  Multigraph g = petersen();
  CHECK(brute_force_max_matching(g) == 5);
  Matching m = maximum_matching(g);
  CHECK(m.size() == 5);
  CHECK(is_valid_matching(g, m));
}

TEST_CASE("perfect_matching outcomes") {
  PerfectMatchingResult single = perfect_matching(Multigraph(2, {{0, 1}}));
  REQUIRE(single.perfect.has_value());
  CHECK(single.perfect->matched_edges == std::vector<int>{0});

  PerfectMatchingResult triangle = perfect_matching(cycle(3));
  CHECK_FALSE(triangle.perfect.has_value());
  CHECK(triangle.maximum.size() == 1);  // deficiency evidence

  Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  PerfectMatchingResult k4res = perfect_matching(k4);
  REQUIRE(k4res.perfect.has_value());
  CHECK(k4res.perfect->size() == 2);
  CHECK(is_valid_matching(k4, *k4res.perfect));
}

TEST_CASE("parallel edges collapse to the lowest representative") {
  Multigraph g(2, {{0, 1}, {0, 1}, {0, 1}});
  Matching m = maximum_matching(g);
  CHECK(m.matched_edges == std::vector<int>{0});
}

TEST_CASE("optimal on every small graph") {
  all_small_graphs(6, 8, [](const Multigraph& g) {
    Matching m = maximum_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == brute_force_max_matching(g));
  });
}

TEST_CASE("optimal on random graphs up to 10 vertices") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Multigraph g = generate({GenKind::random_connected, 10, 16, 0, 2, 0, seed});
    Matching m = maximum_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == brute_force_max_matching(g));
  }
}

TEST_CASE("seeded search reaches the same size") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Multigraph g = generate({GenKind::random_connected, 9, 14, 0, 2, 0, seed});
    Matching plain = maximum_matching(g);
    // seed with a deliberately poor greedy choice: highest edge ids first
    std::vector<int8_t> used(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> seed_edges;
    for (int e = g.edge_count() - 1; e >= 0; --e) {
      const Edge& ed = g.edge(e);
      if (!used[static_cast<size_t>(ed.u)] && !used[static_cast<size_t>(ed.v)]) {
        used[static_cast<size_t>(ed.u)] = used[static_cast<size_t>(ed.v)] = 1;
        seed_edges.push_back(e);
      }
    }
    Matching seeded = maximum_matching(g, seed_edges);
    CHECK(seeded.size() == plain.size());
    CHECK(is_valid_matching(g, seeded));
  }
}

TEST_CASE("seed validation") {
  Multigraph g = cycle(4);
  CHECK_THROWS_AS(maximum_matching(g, {0, 1}), InvalidInput);  // edges share vertex 1
  CHECK_THROWS_AS(maximum_matching(g, {9}), InvalidInput);
}

TEST_CASE("deterministic output") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Multigraph g = generate({GenKind::random_connected, 12, 20, 0, 2, 0, seed});
    Matching a = maximum_matching(g);
    Matching b = maximum_matching(g);
    CHECK(a.matched_edges == b.matched_edges);
    CHECK(a.mate == b.mate);
  }
}
