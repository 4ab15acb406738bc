#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "eventree/multigraph.hpp"

namespace eventree {

// Deterministic 64-bit generator, identical on every platform. Update rule:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   next = z ^ (z >> 31)
// split() derives an independent stream seeded with next().
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next();
  uint64_t below(uint64_t bound);  // next() % bound; bias is acceptable here
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  uint64_t state_;
};

enum class GenKind {
  random_connected,
  random_regular,
  regular_bipartite,
  bridged_chain,
  theta,
  parallel_boosted,
};

GenKind gen_kind_from_string(const std::string& name);
const char* gen_kind_name(GenKind k);

struct GenSpec {
  GenKind kind = GenKind::random_connected;
  int n = 0;
  int m = 0;
  int r = 0;
  int multiplicity = 2;
  int blocks = 0;
  uint64_t seed = 0;
};

// Same spec, same bytes. Contracts per kind:
//   random_connected   connected, n vertices, m edges (m >= n-1)
//   random_regular     connected r-regular (configuration model, resampled
//                      on loops or disconnection; n*r must be even)
//   regular_bipartite  connected r-regular bipartite, equal sides (n even)
//   bridged_chain      `blocks` 2-edge-connected blocks joined by bridges,
//                      n vertices total
//   theta              two hub vertices joined by a direct edge and two
//                      disjoint paths through the n-2 remaining vertices
//   parallel_boosted   random_connected base, each edge duplicated to a
//                      multiplicity of up to `multiplicity`
Multigraph generate(const GenSpec& spec);

// Every connected loop-free multigraph with at most max_n vertices and max_m
// edges, one labeled representative per (support isomorphism class,
// multiplicity vector); every isomorphism class appears at least once.
// Guarded to max_n <= 7, max_m <= 12.
void all_small_graphs(int max_n, int max_m, const std::function<void(const Multigraph&)>& visit);

}  // namespace eventree
