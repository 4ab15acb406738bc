#include "eventree/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "eventree/errors.hpp"

namespace eventree {

namespace {

// Edmonds' blossom algorithm, queue-based search with odd-cycle contraction.
// Arrays are versioned with stamps instead of being cleared per phase, so a
// search that succeeds early only pays for the ball it actually explored.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Multigraph& g) : n_(g.vertex_count()) {
    adj_.resize(static_cast<size_t>(n_));
    // Collapse parallel edges: first incidence wins, which is the lowest edge
    // id because incidence lists are built in edge order.
    std::vector<int> seen(static_cast<size_t>(n_), -1);
    for (int v = 0; v < n_; ++v) {
      for (const IncidenceEntry& ie : g.incident(v)) {
        if (seen[static_cast<size_t>(ie.to)] == v) continue;
        seen[static_cast<size_t>(ie.to)] = v;
        adj_[static_cast<size_t>(v)].push_back({ie.to, ie.edge});
      }
    }
    match_.assign(static_cast<size_t>(n_), -1);
    p_.assign(static_cast<size_t>(n_), -1);
    base_.assign(static_cast<size_t>(n_), 0);
    used_at_.assign(static_cast<size_t>(n_), 0);
    p_at_.assign(static_cast<size_t>(n_), 0);
    base_at_.assign(static_cast<size_t>(n_), 0);
    lca_at_.assign(static_cast<size_t>(n_), 0);
    blossom_at_.assign(static_cast<size_t>(n_), 0);
  }

  void seed(int u, int v) {
    match_[static_cast<size_t>(u)] = v;
    match_[static_cast<size_t>(v)] = u;
  }

  void greedy_init() {
    for (int v = 0; v < n_; ++v) {
      if (match_[static_cast<size_t>(v)] != -1) continue;
      for (const auto& [to, edge] : adj_[static_cast<size_t>(v)]) {
        if (match_[static_cast<size_t>(to)] == -1) {
          seed(v, to);
          break;
        }
      }
    }
  }

  void run() {
    for (int v = 0; v < n_; ++v)
      if (match_[static_cast<size_t>(v)] == -1) {
        int leaf = find_path(v);
        if (leaf != -1) augment(leaf);
      }
  }

  const std::vector<int>& mates() const { return match_; }

  int representative_edge(int u, int v) const {
    for (const auto& [to, edge] : adj_[static_cast<size_t>(u)])
      if (to == v) return edge;
    throw ContractViolation("matched pair without an edge");
  }

 private:
  bool used(int v) const { return used_at_[static_cast<size_t>(v)] == phase_; }
  void set_used(int v) { used_at_[static_cast<size_t>(v)] = phase_; }
  int parent(int v) const { return p_at_[static_cast<size_t>(v)] == phase_ ? p_[static_cast<size_t>(v)] : -1; }
  void set_parent(int v, int p) {
    p_[static_cast<size_t>(v)] = p;
    p_at_[static_cast<size_t>(v)] = phase_;
  }
  int base(int v) const { return base_at_[static_cast<size_t>(v)] == phase_ ? base_[static_cast<size_t>(v)] : v; }
  void set_base(int v, int b) {
    base_[static_cast<size_t>(v)] = b;
    base_at_[static_cast<size_t>(v)] = phase_;
  }

  int lowest_common_base(int a, int b) {
    ++lca_phase_;
    for (;;) {
      a = base(a);
      lca_at_[static_cast<size_t>(a)] = lca_phase_;
      if (match_[static_cast<size_t>(a)] == -1) break;
      a = parent(match_[static_cast<size_t>(a)]);
    }
    for (;;) {
      b = base(b);
      if (lca_at_[static_cast<size_t>(b)] == lca_phase_) return b;
      b = parent(match_[static_cast<size_t>(b)]);
    }
  }

  void mark_path(int v, int b, int child) {
    while (base(v) != b) {
      blossom_at_[static_cast<size_t>(base(v))] = blossom_phase_;
      blossom_at_[static_cast<size_t>(base(match_[static_cast<size_t>(v)]))] = blossom_phase_;
      set_parent(v, child);
      child = match_[static_cast<size_t>(v)];
      v = parent(match_[static_cast<size_t>(v)]);
    }
  }

  // Alternating BFS from root; returns a free vertex ending an augmenting
  // path (its parent chain encodes the path) or -1.
  int find_path(int root) {
    ++phase_;
    queue_.clear();
    touched_.clear();
    set_used(root);
    touched_.push_back(root);
    queue_.push_back(root);
    for (size_t head = 0; head < queue_.size(); ++head) {
      int v = queue_[head];
      for (const auto& [to, edge] : adj_[static_cast<size_t>(v)]) {
        if (base(v) == base(to) || match_[static_cast<size_t>(v)] == to) continue;
        if (to == root || (match_[static_cast<size_t>(to)] != -1 && parent(match_[static_cast<size_t>(to)]) != -1)) {
          // Found an odd cycle; contract the blossom to its base.
          int cur_base = lowest_common_base(v, to);
          ++blossom_phase_;
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i : touched_) {
            if (blossom_at_[static_cast<size_t>(base(i))] == blossom_phase_) {
              set_base(i, cur_base);
              if (!used(i)) {
                set_used(i);
                queue_.push_back(i);
              }
            }
          }
        } else if (parent(to) == -1) {
          set_parent(to, v);
          touched_.push_back(to);
          if (match_[static_cast<size_t>(to)] == -1) return to;
          set_used(match_[static_cast<size_t>(to)]);
          touched_.push_back(match_[static_cast<size_t>(to)]);
          queue_.push_back(match_[static_cast<size_t>(to)]);
        }
      }
    }
    return -1;
  }

  void augment(int leaf) {
    int v = leaf;
    while (v != -1) {
      int pv = parent(v);
      int ppv = match_[static_cast<size_t>(pv)];
      match_[static_cast<size_t>(v)] = pv;
      match_[static_cast<size_t>(pv)] = v;
      v = ppv;
    }
  }

  int n_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, representative edge)
  std::vector<int> match_, p_, base_;
  std::vector<uint32_t> used_at_, p_at_, base_at_, lca_at_, blossom_at_;
  uint32_t phase_ = 0, lca_phase_ = 0, blossom_phase_ = 0;
  std::vector<int> queue_;
  std::vector<int> touched_;  // vertices with any stamp from the current phase
};

Matching finish(const Multigraph& g, const BlossomMatcher& bm) {
  Matching m;
  m.mate = bm.mates();
  for (int v = 0; v < g.vertex_count(); ++v) {
    int u = m.mate[static_cast<size_t>(v)];
    if (u > v) m.matched_edges.push_back(bm.representative_edge(v, u));
  }
  std::sort(m.matched_edges.begin(), m.matched_edges.end());
  return m;
}

}  // namespace

Matching maximum_matching(const Multigraph& g) {
  BlossomMatcher bm(g);
  bm.greedy_init();
  bm.run();
  return finish(g, bm);
}

Matching maximum_matching(const Multigraph& g, const std::vector<int>& seed_edges) {
  BlossomMatcher bm(g);
  std::vector<int8_t> taken(static_cast<size_t>(g.vertex_count()), 0);
  for (int e : seed_edges) {
    if (e < 0 || e >= g.edge_count()) throw InvalidInput("seed edge id out of range");
    const Edge& ed = g.edge(e);
    if (taken[static_cast<size_t>(ed.u)] || taken[static_cast<size_t>(ed.v)])
      throw InvalidInput("seed edges do not form a matching");
    taken[static_cast<size_t>(ed.u)] = taken[static_cast<size_t>(ed.v)] = 1;
    bm.seed(ed.u, ed.v);
  }
  bm.greedy_init();
  bm.run();
  return finish(g, bm);
}

PerfectMatchingResult perfect_matching(const Multigraph& g) {
  PerfectMatchingResult r{std::nullopt, maximum_matching(g)};
  if (2 * r.maximum.size() == g.vertex_count()) r.perfect = r.maximum;
  return r;
}

}  // namespace eventree
