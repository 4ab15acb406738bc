#include <doctest.h>

#include <map>
#include <set>

#include "eventree/errors.hpp"
#include "eventree/generators.hpp"

using namespace eventree;

namespace {

bool same_graph(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  for (int e = 0; e < a.edge_count(); ++e)
    if (a.edge(e).u != b.edge(e).u || a.edge(e).v != b.edge(e).v) return false;
  return true;
}

// multiset of sorted degree sequences, a cheap isomorphism invariant
std::multiset<int> degree_sequence(const Multigraph& g) {
  std::multiset<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.insert(g.degree(v));
  return out;
}

}  // namespace

TEST_CASE("splitmix64 follows its documented update rule") {
  SplitMix64 rng(0);
  // frozen from the scrambling constants
  CHECK(rng.next() == 16294208416658607535ULL);
  CHECK(rng.next() == 7960286522194355700ULL);
  SplitMix64 rng2(1234567);
  uint64_t first = rng2.next();
  SplitMix64 rng3(1234567);
  CHECK(rng3.next() == first);
}

TEST_CASE("generate is a pure function of the spec") {
  GenSpec spec{GenKind::random_regular, 12, 0, 3, 2, 0, 99};
  CHECK(same_graph(generate(spec), generate(spec)));
  GenSpec other = spec;
  other.seed = 100;
  CHECK_FALSE(same_graph(generate(spec), generate(other)));
}

TEST_CASE("random_connected meets its contract") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Multigraph g = generate({GenKind::random_connected, 10, 17, 0, 2, 0, seed});
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 17);
    CHECK(is_connected(g));
  }
  CHECK_THROWS_AS(generate({GenKind::random_connected, 5, 3, 0, 2, 0, 0}), InvalidInput);
}

TEST_CASE("random_regular meets its contract") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Multigraph g = generate({GenKind::random_regular, 8, 0, 3, 2, 0, seed});
    CHECK(is_connected(g));
    CHECK(std::get<Regular>(regularity(g)).r == 3);
  }
  CHECK_THROWS_AS(generate({GenKind::random_regular, 3, 0, 3, 2, 0, 0}), InvalidInput);  // n*r odd
}

TEST_CASE("regular_bipartite meets its contract") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Multigraph g = generate({GenKind::regular_bipartite, 8, 0, 3, 2, 0, seed});
    CHECK(is_connected(g));
    CHECK(std::get<Regular>(regularity(g)).r == 3);
    auto bip = bipartition(g);
    REQUIRE(std::holds_alternative<std::vector<int8_t>>(bip));
  }
  CHECK_THROWS_AS(generate({GenKind::regular_bipartite, 7, 0, 2, 2, 0, 0}), InvalidInput);

  // at n=4, r=2 the only connected outcome is a plain 4-cycle: the parallel
  // pairing would disconnect, so enforcement rules it out
  Multigraph c4 = generate({GenKind::regular_bipartite, 4, 0, 2, 2, 0, 7});
  CHECK(std::get<Regular>(regularity(c4)).r == 2);
  CHECK(is_connected(c4));
  std::set<std::pair<int, int>> distinct;
  for (const Edge& e : c4.edges()) distinct.insert(std::minmax(e.u, e.v));
  CHECK(distinct.size() == 4);
}

TEST_CASE("bridged_chain has exactly blocks-1 bridges") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    int blocks = 2 + static_cast<int>(seed % 4);
    Multigraph g = generate({GenKind::bridged_chain, 30, 0, 0, 2, blocks, seed});
    CHECK(is_connected(g));
    CHECK(static_cast<int>(bridges(g).size()) == blocks - 1);
  }
  CHECK_THROWS_AS(generate({GenKind::bridged_chain, 5, 0, 0, 2, 3, 0}), InvalidInput);
}

TEST_CASE("theta graphs") {
  Multigraph g = generate({GenKind::theta, 4, 0, 0, 2, 0, 0});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 3);
  CHECK(bridges(g).empty());
  Multigraph big = generate({GenKind::theta, 9, 0, 0, 2, 0, 0});
  CHECK(big.degree(0) == 3);
  CHECK(bridges(big).empty());
  CHECK_THROWS_AS(generate({GenKind::theta, 3, 0, 0, 2, 0, 0}), InvalidInput);
}

TEST_CASE("parallel_boosted respects the multiplicity bound") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Multigraph g = generate({GenKind::parallel_boosted, 8, 12, 0, 4, 0, seed});
    CHECK(is_connected(g));
    std::map<std::pair<int, int>, int> mult;
    for (const Edge& e : g.edges()) ++mult[std::minmax(e.u, e.v)];
    bool boosted = false;
    for (const auto& [pair, count] : mult) {
      CHECK(count <= 4 * 12);  // several base copies of the same pair can stack
      if (count > 1) boosted = true;
    }
    CHECK(boosted);
  }
}

TEST_CASE("all_small_graphs covers the expected shapes") {
  // (2,2): the single edge and the double edge
  std::vector<std::multiset<int>> degs;
  std::vector<int> edge_counts;
  all_small_graphs(2, 2, [&](const Multigraph& g) {
    degs.push_back(degree_sequence(g));
    edge_counts.push_back(g.edge_count());
  });
  CHECK(edge_counts == std::vector<int>{0, 1, 2});  // K1, K2, double edge

  // (3,3): path, triangle, double-edge-plus-pendant all appear
  bool path3 = false, triangle = false, double_pendant = false;
  all_small_graphs(3, 3, [&](const Multigraph& g) {
    if (g.vertex_count() != 3) return;
    auto d = degree_sequence(g);
    if (g.edge_count() == 2 && d == std::multiset<int>{1, 1, 2}) path3 = true;
    if (g.edge_count() == 3 && d == std::multiset<int>{2, 2, 2}) triangle = true;
    if (g.edge_count() == 3 && d == std::multiset<int>{1, 2, 3}) double_pendant = true;
  });
  CHECK(path3);
  CHECK(triangle);
  CHECK(double_pendant);

  // (4,4): C4 and the star K1,3 appear
  bool c4 = false, star = false;
  all_small_graphs(4, 4, [&](const Multigraph& g) {
    if (g.vertex_count() != 4) return;
    auto d = degree_sequence(g);
    if (g.edge_count() == 4 && d == std::multiset<int>{2, 2, 2, 2}) c4 = true;
    if (g.edge_count() == 3 && d == std::multiset<int>{1, 1, 1, 3}) star = true;
  });
  CHECK(c4);
  CHECK(star);
}

TEST_CASE("all_small_graphs emits connected graphs within bounds, no repeats") {
  std::set<std::vector<std::pair<int, int>>> seen;
  int count = 0;
  all_small_graphs(5, 6, [&](const Multigraph& g) {
    ++count;
    CHECK(g.vertex_count() <= 5);
    CHECK(g.edge_count() <= 6);
    CHECK(is_connected(g));
    std::vector<std::pair<int, int>> key = {{g.vertex_count(), -1}};
    for (const Edge& e : g.edges()) key.push_back(std::minmax(e.u, e.v));
    CHECK(seen.insert(key).second);  // labeled emissions are distinct
  });
  CHECK(count > 100);
  CHECK_THROWS_AS(all_small_graphs(8, 5, [](const Multigraph&) {}), InvalidInput);
}
