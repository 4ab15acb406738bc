#include "eventree/generators.hpp"

#include <algorithm>
#include <numeric>

#include "eventree/errors.hpp"

namespace eventree {

uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t bound) {
  if (bound == 0) throw InvalidInput("below(0)");
  return next() % bound;
}

GenKind gen_kind_from_string(const std::string& name) {
  if (name == "random_connected") return GenKind::random_connected;
  if (name == "random_regular") return GenKind::random_regular;
  if (name == "regular_bipartite") return GenKind::regular_bipartite;
  if (name == "bridged_chain") return GenKind::bridged_chain;
  if (name == "theta") return GenKind::theta;
  if (name == "parallel_boosted") return GenKind::parallel_boosted;
  throw InvalidInput("unknown generator kind: " + name);
}

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::random_connected: return "random_connected";
    case GenKind::random_regular: return "random_regular";
    case GenKind::regular_bipartite: return "regular_bipartite";
    case GenKind::bridged_chain: return "bridged_chain";
    case GenKind::theta: return "theta";
    case GenKind::parallel_boosted: return "parallel_boosted";
  }
  return "?";
}

namespace {

constexpr int kRetryBudget = 1000;

std::vector<Edge> random_connected_edges(int n, int m, SplitMix64& rng) {
  if (n < 1) throw InvalidInput("random_connected requires n >= 1");
  if (m < n - 1) throw InvalidInput("random_connected requires m >= n-1");
  if (n == 1 && m > 0) throw InvalidInput("a single vertex admits no loop-free edges");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(v))), v});
  for (int e = n - 1; e < m; ++e) {
    int a = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
    int b = static_cast<int>(rng.below(static_cast<uint64_t>(n - 1)));
    if (b >= a) ++b;
    edges.push_back({a, b});
  }
  return edges;
}

Multigraph gen_random_regular(int n, int r, SplitMix64& rng) {
  if (n < 1 || r < 0) throw InvalidInput("random_regular requires n >= 1, r >= 0");
  if ((static_cast<long long>(n) * r) % 2 != 0) throw InvalidInput("random_regular requires n*r even");
  if (r == 0 && n != 1) throw InvalidInput("a 0-regular graph on n >= 2 vertices is disconnected");
  if (r >= 1 && n < 2) throw InvalidInput("random_regular with r >= 1 requires n >= 2");
  if (n == 1) return Multigraph(1, {});
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * static_cast<size_t>(r));
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < r; ++k) stubs.push_back(v);
    for (size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rng.below(i)]);
    bool loop = false;
    std::vector<Edge> edges;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        loop = true;
        break;
      }
      edges.push_back({stubs[i], stubs[i + 1]});
    }
    if (loop) continue;
    Multigraph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw InvalidInput("random_regular retry budget exhausted");
}

Multigraph gen_regular_bipartite(int n, int r, SplitMix64& rng) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("regular_bipartite requires even n >= 2");
  if (r < 1) throw InvalidInput("regular_bipartite requires r >= 1");
  int half = n / 2;
  if (r > 0 && half < 1) throw InvalidInput("regular_bipartite side too small");
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<int> right;
    for (int v = half; v < n; ++v)
      for (int k = 0; k < r; ++k) right.push_back(v);
    for (size_t i = right.size(); i > 1; --i)
      std::swap(right[i - 1], right[rng.below(i)]);
    std::vector<Edge> edges;
    size_t idx = 0;
    for (int v = 0; v < half; ++v)
      for (int k = 0; k < r; ++k) edges.push_back({v, right[idx++]});
    Multigraph g(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw InvalidInput("regular_bipartite retry budget exhausted");
}

Multigraph gen_bridged_chain(int n, int blocks, SplitMix64& rng) {
  if (blocks < 1) throw InvalidInput("bridged_chain requires at least one block");
  if (n < 3 * blocks) throw InvalidInput("bridged_chain requires n >= 3*blocks");
  // distribute sizes, each block a cycle plus random chords => 2-edge-connected
  std::vector<int> size(static_cast<size_t>(blocks), 3);
  int spare = n - 3 * blocks;
  for (int i = 0; i < spare; ++i) ++size[rng.below(static_cast<uint64_t>(blocks))];
  std::vector<Edge> edges;
  std::vector<int> base(static_cast<size_t>(blocks), 0);
  int at = 0;
  for (int b = 0; b < blocks; ++b) {
    base[static_cast<size_t>(b)] = at;
    int s = size[static_cast<size_t>(b)];
    for (int i = 0; i < s; ++i) edges.push_back({at + i, at + (i + 1) % s});
    int chords = static_cast<int>(rng.below(static_cast<uint64_t>(s)));
    for (int c = 0; c < chords; ++c) {
      int a = static_cast<int>(rng.below(static_cast<uint64_t>(s)));
      int d = static_cast<int>(rng.below(static_cast<uint64_t>(s - 1)));
      if (d >= a) ++d;
      edges.push_back({at + a, at + d});
    }
    at += s;
  }
  for (int b = 0; b + 1 < blocks; ++b) {
    int a = base[static_cast<size_t>(b)] + static_cast<int>(rng.below(static_cast<uint64_t>(size[static_cast<size_t>(b)])));
    int d = base[static_cast<size_t>(b + 1)] +
            static_cast<int>(rng.below(static_cast<uint64_t>(size[static_cast<size_t>(b + 1)])));
    edges.push_back({a, d});
  }
  return Multigraph(n, std::move(edges));
}

Multigraph gen_theta(int n) {
  if (n < 4) throw InvalidInput("theta requires n >= 4");
  // hubs 0 and 1; internal vertices split between two hub-to-hub paths
  int internals = n - 2;
  int first = (internals + 1) / 2;
  std::vector<Edge> edges;
  edges.push_back({0, 1});
  int prev = 0;
  for (int i = 0; i < first; ++i) {
    edges.push_back({prev, 2 + i});
    prev = 2 + i;
  }
  edges.push_back({prev, 1});
  prev = 0;
  for (int i = first; i < internals; ++i) {
    edges.push_back({prev, 2 + i});
    prev = 2 + i;
  }
  edges.push_back({prev, 1});
  return Multigraph(n, std::move(edges));
}

Multigraph gen_parallel_boosted(int n, int m, int multiplicity, SplitMix64& rng) {
  if (multiplicity < 1) throw InvalidInput("parallel_boosted requires multiplicity >= 1");
  std::vector<Edge> base = random_connected_edges(n, m, rng);
  std::vector<Edge> edges;
  for (const Edge& e : base) {
    int copies = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(multiplicity)));
    for (int c = 0; c < copies; ++c) edges.push_back(e);
  }
  return Multigraph(n, std::move(edges));
}

}  // namespace

Multigraph generate(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  switch (spec.kind) {
    case GenKind::random_connected:
      return Multigraph(spec.n, random_connected_edges(spec.n, spec.m, rng));
    case GenKind::random_regular:
      return gen_random_regular(spec.n, spec.r, rng);
    case GenKind::regular_bipartite:
      return gen_regular_bipartite(spec.n, spec.r, rng);
    case GenKind::bridged_chain:
      return gen_bridged_chain(spec.n, spec.blocks, rng);
    case GenKind::theta:
      return gen_theta(spec.n);
    case GenKind::parallel_boosted:
      return gen_parallel_boosted(spec.n, spec.m, spec.multiplicity, rng);
  }
  throw InvalidInput("unknown generator kind");
}

namespace {

// Labeled pair index helpers for the small-graph enumeration.
struct PairTable {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  PairTable(int n_) : n(n_) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
};

bool mask_connected(uint32_t mask, const PairTable& pt) {
  if (pt.n == 1) return true;
  std::vector<int> comp(static_cast<size_t>(pt.n), -1);
  std::vector<int> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < pt.pairs.size(); ++i) {
      if (!(mask & (1u << i))) continue;
      auto [a, b] = pt.pairs[i];
      int other = a == v ? b : (b == v ? a : -1);
      if (other >= 0 && comp[static_cast<size_t>(other)] == -1) {
        comp[static_cast<size_t>(other)] = 0;
        stack.push_back(other);
      }
    }
  }
  for (int v = 0; v < pt.n; ++v)
    if (comp[static_cast<size_t>(v)] == -1) return false;
  return true;
}

uint32_t permute_mask(uint32_t mask, const std::vector<int>& perm, const PairTable& pt,
                      const std::vector<std::vector<int>>& pair_index) {
  uint32_t out = 0;
  for (size_t i = 0; i < pt.pairs.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    auto [a, b] = pt.pairs[i];
    out |= 1u << pair_index[static_cast<size_t>(perm[static_cast<size_t>(a)])]
                          [static_cast<size_t>(perm[static_cast<size_t>(b)])];
  }
  return out;
}

// Emits multiplicity assignments: each support edge at least one copy, total
// at most max_m.
void expand_multiplicities(const std::vector<std::pair<int, int>>& support, int budget, size_t at,
                           std::vector<int>& mult, int n,
                           const std::function<void(const Multigraph&)>& visit) {
  if (at == support.size()) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < support.size(); ++i)
      for (int c = 0; c < mult[i]; ++c) edges.push_back({support[i].first, support[i].second});
    visit(Multigraph(n, std::move(edges)));
    return;
  }
  int remaining_edges = static_cast<int>(support.size() - at - 1);
  for (int c = 1; c + remaining_edges <= budget; ++c) {
    mult[at] = c;
    expand_multiplicities(support, budget - c, at + 1, mult, n, visit);
  }
}

}  // namespace

void all_small_graphs(int max_n, int max_m, const std::function<void(const Multigraph&)>& visit) {
  if (max_n < 1 || max_n > 7 || max_m < 0 || max_m > 12)
    throw InvalidInput("all_small_graphs is guarded to 1 <= max_n <= 7, 0 <= max_m <= 12");
  for (int n = 1; n <= max_n; ++n) {
    PairTable pt(n);
    int np = static_cast<int>(pt.pairs.size());
    std::vector<std::vector<int>> pair_index(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i < np; ++i) {
      pair_index[static_cast<size_t>(pt.pairs[static_cast<size_t>(i)].first)]
                [static_cast<size_t>(pt.pairs[static_cast<size_t>(i)].second)] = i;
      pair_index[static_cast<size_t>(pt.pairs[static_cast<size_t>(i)].second)]
                [static_cast<size_t>(pt.pairs[static_cast<size_t>(i)].first)] = i;
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    do {
      perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    if (n == 1) {
      visit(Multigraph(1, {}));
      continue;
    }
    for (uint32_t mask = 1; mask < (1u << np); ++mask) {
      int popcount = __builtin_popcount(mask);
      if (popcount < n - 1 || popcount > max_m) continue;
      if (!mask_connected(mask, pt)) continue;
      // canonical representative: the mask is its own minimum relabeling
      bool canonical = true;
      for (const std::vector<int>& perm : perms) {
        if (permute_mask(mask, perm, pt, pair_index) < mask) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      std::vector<std::pair<int, int>> support;
      for (int i = 0; i < np; ++i)
        if (mask & (1u << i)) support.push_back(pt.pairs[static_cast<size_t>(i)]);
      std::vector<int> mult(support.size(), 1);
      expand_multiplicities(support, max_m, 0, mult, n, visit);
    }
  }
}

}  // namespace eventree
