#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace eventree {

// Loop-free multigraph with dense vertex ids 0..n-1 and edge ids 0..m-1.
// Parallel edges are first-class: distinct ids may join the same pair.
struct Edge {
  int u = -1;
  int v = -1;
};

struct IncidenceEntry {
  int edge = -1;
  int to = -1;
};

class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<Edge> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<IncidenceEntry>& incident(int v) const { return inc_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(inc_[static_cast<size_t>(v)].size()); }
  int opposite(int e, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<IncidenceEntry>> inc_;
};

// Cycle with a fixed orientation: edge_ids[i] joins vertices[i] and
// vertices[(i+1) % length]. Length >= 2; a 2-cycle is two parallel edges.
struct OrientedCycle {
  std::vector<int> vertices;
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(vertices.size()); }
  int vertex_at(int pos) const;  // pos taken mod length
  int edge_at(int pos) const;
  int position_of(int v) const;  // linear scan, -1 if absent
};

// Simple path; a single vertex is a path with no edges.
struct VertexPath {
  std::vector<int> vertices;
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(edge_ids.size()); }
};

int max_degree(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Proper 2-coloring (vector indexed by vertex, values 0/1) when the graph is
// bipartite, otherwise an odd cycle witnessing non-bipartiteness.
using BipartitionResult = std::variant<std::vector<int8_t>, OrientedCycle>;
BipartitionResult bipartition(const Multigraph& g);

// All cutedges, ascending. An edge with a parallel partner is never a bridge.
std::vector<int> bridges(const Multigraph& g);

struct Regular {
  int r = 0;
};
struct Irregular {
  int u = -1;  // witness vertices with differing degrees
  int v = -1;
};
using Regularity = std::variant<Regular, Irregular>;
Regularity regularity(const Multigraph& g);

// Connected component of `start` as a graph of its own, with translation
// maps in both directions. skip_edge (if >= 0) is treated as deleted.
struct SubgraphView {
  Multigraph graph;
  std::vector<int> back_vertex;   // local id -> host id
  std::vector<int> back_edge;     // local edge id -> host edge id
  std::vector<int> local_vertex;  // host id -> local id or -1
};

SubgraphView extract_component(const Multigraph& g, int start, int skip_edge = -1);

}  // namespace eventree
