#include "eventree/oracle.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "eventree/errors.hpp"

namespace eventree {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt count_trees(const Multigraph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (!is_connected(g)) return 0;
  // Laplacian minor determinant, fraction-free Bareiss elimination.
  int k = n - 1;
  std::vector<std::vector<BigInt>> a(static_cast<size_t>(k), std::vector<BigInt>(static_cast<size_t>(k), 0));
  for (const Edge& e : g.edges()) {
    if (e.u < k) a[static_cast<size_t>(e.u)][static_cast<size_t>(e.u)] += 1;
    if (e.v < k) a[static_cast<size_t>(e.v)][static_cast<size_t>(e.v)] += 1;
    if (e.u < k && e.v < k) {
      a[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] -= 1;
      a[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row)
      if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
        pivot = row;
        break;
      }
    if (pivot == -1) return 0;
    if (pivot != col) {
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
      sign = -sign;
    }
    for (int row = col + 1; row < k; ++row) {
      for (int j = col + 1; j < k; ++j) {
        a[static_cast<size_t>(row)][static_cast<size_t>(j)] =
            (a[static_cast<size_t>(col)][static_cast<size_t>(col)] * a[static_cast<size_t>(row)][static_cast<size_t>(j)] -
             a[static_cast<size_t>(row)][static_cast<size_t>(col)] * a[static_cast<size_t>(col)][static_cast<size_t>(j)]) /
            prev;
      }
      a[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
    }
    prev = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
  }
  BigInt det = a[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
  return sign > 0 ? det : -det;
}

// Deletion/contraction enumeration state: vertices are union-find classes;
// edges carry their host id.
struct EnumState {
  std::vector<int> parent;
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
};

struct WorkEdge {
  int u, v, id;
};

// Is the class graph over `edges` (minus the edge at `skip`) connected?
bool still_connected(EnumState& st, const std::vector<WorkEdge>& edges, size_t skip, int classes) {
  if (classes <= 1) return true;
  std::vector<std::pair<int, int>> cls_edges;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i == skip) continue;
    int a = st.find(edges[i].u), b = st.find(edges[i].v);
    if (a != b) cls_edges.push_back({a, b});
  }
  // tiny DSU over class roots
  std::vector<int> local(st.parent.size());
  std::iota(local.begin(), local.end(), 0);
  std::function<int(int)> lf = [&](int x) {
    while (local[static_cast<size_t>(x)] != x) {
      local[static_cast<size_t>(x)] = local[static_cast<size_t>(local[static_cast<size_t>(x)])];
      x = local[static_cast<size_t>(x)];
    }
    return x;
  };
  int remaining = classes;
  for (auto [a, b] : cls_edges) {
    int ra = lf(a), rb = lf(b);
    if (ra != rb) {
      local[static_cast<size_t>(ra)] = rb;
      --remaining;
    }
  }
  return remaining == 1;
}

bool enumerate_rec(EnumState& st, std::vector<WorkEdge> edges, int classes, std::vector<int>& chosen,
                   const std::function<bool(const std::vector<int>&)>& visit) {
  if (classes == 1) {
    std::vector<int> tree = chosen;
    std::sort(tree.begin(), tree.end());
    return visit(tree);
  }
  // drop loops (edges inside one class) at the front
  size_t i = 0;
  while (i < edges.size() && st.find(edges[i].u) == st.find(edges[i].v)) ++i;
  if (i == edges.size()) return true;  // disconnected branch, no trees
  WorkEdge e = edges[i];

  // include e: contract
  {
    EnumState st2 = st;
    int ra = st2.find(e.u), rb = st2.find(e.v);
    st2.parent[static_cast<size_t>(ra)] = rb;
    std::vector<WorkEdge> rest(edges.begin() + static_cast<long>(i) + 1, edges.end());
    chosen.push_back(e.id);
    bool go_on = enumerate_rec(st2, std::move(rest), classes - 1, chosen, visit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  // exclude e: only when the rest still connects everything
  if (still_connected(st, edges, i, classes)) {
    std::vector<WorkEdge> rest(edges.begin() + static_cast<long>(i) + 1, edges.end());
    return enumerate_rec(st, std::move(rest), classes, chosen, visit);
  }
  return true;
}

}  // namespace

std::string spanning_tree_count(const Multigraph& g) { return count_trees(g).str(); }

bool spanning_tree_count_exceeds(const Multigraph& g, long long cap) {
  return count_trees(g) > BigInt(cap);
}

void enumerate_spanning_trees(const Multigraph& g, long long cap,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  if (g.vertex_count() == 0) throw InvalidInput("cannot enumerate trees of the empty graph");
  if (!is_connected(g)) throw InvalidInput("spanning tree enumeration requires a connected graph");
  BigInt total = count_trees(g);
  if (total > BigInt(cap))
    throw InvalidInput("spanning tree count " + total.str() + " exceeds cap " + std::to_string(cap));
  if (g.vertex_count() == 1) {
    visit({});
    return;
  }
  EnumState st;
  st.parent.resize(static_cast<size_t>(g.vertex_count()));
  std::iota(st.parent.begin(), st.parent.end(), 0);
  std::vector<WorkEdge> edges;
  for (int e = 0; e < g.edge_count(); ++e) edges.push_back({g.edge(e).u, g.edge(e).v, e});
  std::vector<int> chosen;
  enumerate_rec(st, std::move(edges), g.vertex_count(), chosen, visit);
}

OracleVerdict exists_weakly_even(const Multigraph& g, int w, int lambda, long long cap) {
  if (w < 0 || w >= g.vertex_count()) throw InvalidInput("anchor vertex out of range");
  if (lambda != 0 && lambda != 1) throw InvalidInput("lambda must be 0 or 1");
  OracleVerdict verdict;
  enumerate_spanning_trees(g, cap, [&](const std::vector<int>& tree_edges) {
    ++verdict.trees_examined;
    // type the tree by its own (w,lambda)-bipartition
    BipartiteTree t;
    t.w = w;
    t.lambda = lambda;
    t.types.assign(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int e : tree_edges) {
      adj[static_cast<size_t>(g.edge(e).u)].push_back(g.edge(e).v);
      adj[static_cast<size_t>(g.edge(e).v)].push_back(g.edge(e).u);
    }
    t.types[static_cast<size_t>(w)] = static_cast<int8_t>(lambda);
    std::vector<int> queue = {w};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to : adj[static_cast<size_t>(v)])
        if (t.types[static_cast<size_t>(to)] == -1) {
          t.types[static_cast<size_t>(to)] = static_cast<int8_t>(1 - t.types[static_cast<size_t>(v)]);
          queue.push_back(to);
        }
    }
    t.edge_ids = tree_edges;
    if (is_weakly_even_tree(g, t).passed) {
      verdict.exists = true;
      verdict.witness = std::move(t);
      return false;
    }
    return true;
  });
  return verdict;
}

}  // namespace eventree
