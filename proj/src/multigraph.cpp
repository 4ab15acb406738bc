#include "eventree/multigraph.hpp"

#include <algorithm>
#include <string>

#include "eventree/errors.hpp"

namespace eventree {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edge_list)
    : n_(vertex_count), edges_(std::move(edge_list)) {
  if (n_ < 0) throw InvalidInput("vertex count must be nonnegative");
  inc_.resize(static_cast<size_t>(n_));
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw InvalidInput("edge " + std::to_string(e) + " has endpoint out of range");
    if (ed.u == ed.v)
      throw InvalidInput("edge " + std::to_string(e) + " is a loop at vertex " + std::to_string(ed.u));
    inc_[static_cast<size_t>(ed.u)].push_back({e, ed.v});
    inc_[static_cast<size_t>(ed.v)].push_back({e, ed.u});
  }
}

int Multigraph::opposite(int e, int v) const {
  const Edge& ed = edges_[static_cast<size_t>(e)];
  return ed.u == v ? ed.v : ed.u;
}

int OrientedCycle::vertex_at(int pos) const {
  int len = length();
  return vertices[static_cast<size_t>(((pos % len) + len) % len)];
}

int OrientedCycle::edge_at(int pos) const {
  int len = length();
  return edge_ids[static_cast<size_t>(((pos % len) + len) % len)];
}

int OrientedCycle::position_of(int v) const {
  for (int i = 0; i < length(); ++i)
    if (vertices[static_cast<size_t>(i)] == v) return i;
  return -1;
}

int max_degree(const Multigraph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_connected(const Multigraph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("connectivity of the empty graph is undefined");
  std::vector<int8_t> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const IncidenceEntry& ie : g.incident(v)) {
      if (!seen[static_cast<size_t>(ie.to)]) {
        seen[static_cast<size_t>(ie.to)] = 1;
        ++reached;
        stack.push_back(ie.to);
      }
    }
  }
  return reached == g.vertex_count();
}

BipartitionResult bipartition(const Multigraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw InvalidInput("bipartition requires a connected graph");
  int n = g.vertex_count();
  std::vector<int8_t> color(static_cast<size_t>(n), -1);
  std::vector<int> parent_edge(static_cast<size_t>(n), -1);
  std::vector<int> parent(static_cast<size_t>(n), -1);
  std::vector<int> depth(static_cast<size_t>(n), 0);
  std::vector<int> queue = {0};
  color[0] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (const IncidenceEntry& ie : g.incident(v)) {
      if (color[static_cast<size_t>(ie.to)] == -1) {
        color[static_cast<size_t>(ie.to)] = static_cast<int8_t>(1 - color[static_cast<size_t>(v)]);
        parent[static_cast<size_t>(ie.to)] = v;
        parent_edge[static_cast<size_t>(ie.to)] = ie.edge;
        depth[static_cast<size_t>(ie.to)] = depth[static_cast<size_t>(v)] + 1;
        queue.push_back(ie.to);
      } else if (color[static_cast<size_t>(ie.to)] == color[static_cast<size_t>(v)]) {
        // Conflict edge closes an odd cycle through the BFS tree. Walk both
        // endpoints up to their lowest common ancestor to extract it.
        int a = v, b = ie.to;
        std::vector<int> pa = {a}, pb = {b};
        while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
          a = parent[static_cast<size_t>(a)];
          pa.push_back(a);
        }
        while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
          b = parent[static_cast<size_t>(b)];
          pb.push_back(b);
        }
        while (a != b) {
          a = parent[static_cast<size_t>(a)];
          pa.push_back(a);
          b = parent[static_cast<size_t>(b)];
          pb.push_back(b);
        }
        OrientedCycle cyc;
        // v up to the ancestor, then back down to ie.to, then the conflict
        // edge closes the cycle.
        for (int x : pa) cyc.vertices.push_back(x);
        for (size_t i = 0; i + 1 < pa.size(); ++i)
          cyc.edge_ids.push_back(parent_edge[static_cast<size_t>(pa[i])]);
        // pa.back() == pb.back() == ancestor; descend pb in reverse.
        for (size_t i = pb.size() - 1; i-- > 0;) {
          cyc.vertices.push_back(pb[i]);
          cyc.edge_ids.push_back(parent_edge[static_cast<size_t>(pb[i])]);
        }
        // Reorder edges so edge_ids[i] joins vertices[i] and vertices[i+1]:
        // the ascent edges join pa[i] to pa[i+1] already; descent edges were
        // appended joining the new vertex to the previous one, which is the
        // same convention. The conflict edge closes ie.to back to v.
        cyc.edge_ids.push_back(ie.edge);
        return cyc;
      }
    }
  }
  return color;
}

namespace {

struct BridgeFrame {
  int vertex;
  int via_edge;  // edge used to enter vertex, -1 at the root
  size_t next_incidence;
};

}  // namespace

std::vector<int> bridges(const Multigraph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(static_cast<size_t>(n), -1);
  std::vector<int> low(static_cast<size_t>(n), 0);
  std::vector<int> result;
  int timer = 0;
  std::vector<BridgeFrame> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] != -1) continue;
    stack.push_back({root, -1, 0});
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      BridgeFrame& fr = stack.back();
      const auto& inc = g.incident(fr.vertex);
      if (fr.next_incidence < inc.size()) {
        IncidenceEntry ie = inc[fr.next_incidence++];
        if (ie.edge == fr.via_edge) continue;  // skip only the entering edge id
        if (disc[static_cast<size_t>(ie.to)] == -1) {
          disc[static_cast<size_t>(ie.to)] = low[static_cast<size_t>(ie.to)] = timer++;
          stack.push_back({ie.to, ie.edge, 0});
        } else {
          low[static_cast<size_t>(fr.vertex)] =
              std::min(low[static_cast<size_t>(fr.vertex)], disc[static_cast<size_t>(ie.to)]);
        }
      } else {
        int v = fr.vertex;
        int via = fr.via_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().vertex;
          low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
          if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)]) result.push_back(via);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Regularity regularity(const Multigraph& g) {
  if (g.vertex_count() == 0) return Regular{0};
  int r = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != r) return Irregular{0, v};
  return Regular{r};
}

SubgraphView extract_component(const Multigraph& g, int start, int skip_edge) {
  SubgraphView out;
  out.local_vertex.assign(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> stack = {start};
  out.local_vertex[static_cast<size_t>(start)] = 0;
  out.back_vertex.push_back(start);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const IncidenceEntry& ie : g.incident(v)) {
      if (ie.edge == skip_edge) continue;
      if (out.local_vertex[static_cast<size_t>(ie.to)] == -1) {
        out.local_vertex[static_cast<size_t>(ie.to)] = static_cast<int>(out.back_vertex.size());
        out.back_vertex.push_back(ie.to);
        stack.push_back(ie.to);
      }
    }
  }
  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == skip_edge) continue;
    const Edge& ed = g.edge(e);
    int lu = out.local_vertex[static_cast<size_t>(ed.u)];
    int lv = out.local_vertex[static_cast<size_t>(ed.v)];
    if (lu != -1 && lv != -1) {
      edges.push_back({lu, lv});
      out.back_edge.push_back(e);
    }
  }
  out.graph = Multigraph(static_cast<int>(out.back_vertex.size()), std::move(edges));
  return out;
}

}  // namespace eventree
