#include "eventree/weak_two_factor.hpp"

#include <algorithm>
#include <string>

#include "eventree/errors.hpp"
#include "eventree/two_factor.hpp"

namespace eventree {

DoubledGraph doubled_graph(const Multigraph& g) {
  int n = g.vertex_count();
  int delta = max_degree(g);
  DoubledGraph dg;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(e);
    dg.origin.push_back(static_cast<int>(dg.origin.size()));
  }
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u + n, e.v + n});
    dg.origin.push_back(-1);
  }
  for (int v = 0; v < n; ++v) {
    for (int k = g.degree(v); k < delta; ++k) {
      edges.push_back({v, v + n});
      dg.origin.push_back(-1);
    }
  }
  dg.gstar = Multigraph(2 * n, std::move(edges));
  return dg;
}

WeakTwoFactor weak_two_factor(const Multigraph& g, WeakTwoFactorTrace* trace) {
  if (g.vertex_count() == 0) throw InvalidInput("weak_two_factor requires a nonempty graph");
  if (!is_connected(g)) throw InvalidInput("weak_two_factor requires a connected graph");
  if (!bridges(g).empty()) throw InvalidInput("weak_two_factor requires a 2-edge-connected graph");

  WeakTwoFactor f;
  if (g.edge_count() == 0) {
    // single vertex: one trivial path component
    f.components.push_back(VertexPath{{0}, {}});
    if (trace) *trace = WeakTwoFactorTrace{doubled_graph(g), {}};
    return f;
  }

  DoubledGraph dg = doubled_graph(g);

  // The doubled graph is connected unless g is regular, in which case it is
  // two identical copies; the 2-factor is taken per component either way.
  std::vector<int> fstar_edges;
  std::vector<int8_t> visited(static_cast<size_t>(dg.gstar.vertex_count()), 0);
  for (int start = 0; start < dg.gstar.vertex_count(); ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    SubgraphView comp = extract_component(dg.gstar, start);
    for (int hv : comp.back_vertex) visited[static_cast<size_t>(hv)] = 1;
    TwoFactorResult res = two_factor(comp.graph);
    if (const NoTwoFactor* missing = std::get_if<NoTwoFactor>(&res))
      throw ContractViolation("doubled graph component has no 2-factor (deficiency " +
                              std::to_string(comp.graph.vertex_count() - 2 * missing->deficiency.size()) +
                              "); the doubling construction guarantees one for 2-edge-connected input");
    for (const OrientedCycle& cyc : std::get<TwoFactor>(res).cycles)
      for (int e : cyc.edge_ids) fstar_edges.push_back(comp.back_edge[static_cast<size_t>(e)]);
  }

  // Restrict to host edges (first copy) and split into cycle and path
  // components; a vertex both of whose factor edges were cross edges becomes
  // a single-vertex path.
  std::vector<int> host_selected;
  for (int e : fstar_edges)
    if (dg.origin[static_cast<size_t>(e)] != -1) host_selected.push_back(dg.origin[static_cast<size_t>(e)]);
  std::sort(host_selected.begin(), host_selected.end());

  int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> sel(static_cast<size_t>(n));
  for (int e : host_selected) {
    const Edge& ed = g.edge(e);
    sel[static_cast<size_t>(ed.u)].push_back({e, ed.v});
    sel[static_cast<size_t>(ed.v)].push_back({e, ed.u});
  }
  std::vector<int8_t> done(static_cast<size_t>(n), 0);
  // paths first from their endpoints, then what remains are cycles
  for (int v = 0; v < n; ++v) {
    if (done[static_cast<size_t>(v)] || sel[static_cast<size_t>(v)].size() == 2) continue;
    VertexPath path;
    int cur = v;
    int in_edge = -1;
    for (;;) {
      done[static_cast<size_t>(cur)] = 1;
      path.vertices.push_back(cur);
      int out_edge = -1, out_to = -1;
      for (auto [e, to] : sel[static_cast<size_t>(cur)])
        if (e != in_edge) {
          out_edge = e;
          out_to = to;
          break;
        }
      if (out_edge == -1) break;
      path.edge_ids.push_back(out_edge);
      in_edge = out_edge;
      cur = out_to;
    }
    f.components.push_back(std::move(path));
  }
  std::vector<int> cycle_edges;
  for (int e : host_selected) {
    const Edge& ed = g.edge(e);
    if (!done[static_cast<size_t>(ed.u)]) cycle_edges.push_back(e);
  }
  for (const OrientedCycle& cyc : decompose_into_cycles(g, cycle_edges)) f.components.push_back(cyc);

  if (trace) *trace = WeakTwoFactorTrace{std::move(dg), std::move(fstar_edges)};
  return f;
}

}  // namespace eventree
