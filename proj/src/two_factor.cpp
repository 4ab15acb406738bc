#include "eventree/two_factor.hpp"

#include <algorithm>
#include <string>

#include "eventree/errors.hpp"

namespace eventree {

TutteGadget tutte_gadget(const Multigraph& g) {
  int n = g.vertex_count();
  TutteGadget tg;
  tg.external_base.assign(static_cast<size_t>(n) + 1, 0);
  tg.internal_base.assign(static_cast<size_t>(n), 0);
  tg.internal_count.assign(static_cast<size_t>(n), 0);

  int next_node = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d < 2)
      throw InvalidInput("tutte_gadget requires minimum degree 2, vertex " + std::to_string(v) +
                         " has degree " + std::to_string(d));
    tg.external_base[static_cast<size_t>(v)] = static_cast<int>(tg.external_node.size());
    for (int slot = 0; slot < d; ++slot) tg.external_node.push_back(next_node++);
    tg.internal_base[static_cast<size_t>(v)] = next_node;
    tg.internal_count[static_cast<size_t>(v)] = d - 2;
    next_node += d - 2;
  }
  tg.external_base[static_cast<size_t>(n)] = static_cast<int>(tg.external_node.size());

  std::vector<Edge> aux_edges;
  // Host images first, so aux edge id == host edge id. Each edge occupies one
  // incidence slot at each endpoint.
  std::vector<int> slot_of_edge_u(static_cast<size_t>(g.edge_count()), -1);
  std::vector<int> slot_of_edge_v(static_cast<size_t>(g.edge_count()), -1);
  for (int v = 0; v < n; ++v) {
    const auto& inc = g.incident(v);
    for (int slot = 0; slot < static_cast<int>(inc.size()); ++slot) {
      int e = inc[static_cast<size_t>(slot)].edge;
      if (g.edge(e).u == v)
        slot_of_edge_u[static_cast<size_t>(e)] = slot;
      else
        slot_of_edge_v[static_cast<size_t>(e)] = slot;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    int a = tg.external_node[static_cast<size_t>(tg.external_base[static_cast<size_t>(ed.u)] +
                                                 slot_of_edge_u[static_cast<size_t>(e)])];
    int b = tg.external_node[static_cast<size_t>(tg.external_base[static_cast<size_t>(ed.v)] +
                                                 slot_of_edge_v[static_cast<size_t>(e)])];
    aux_edges.push_back({a, b});
    tg.host_edge.push_back(e);
  }
  tg.gadget_edge_base.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    tg.gadget_edge_base[static_cast<size_t>(v)] = static_cast<int>(aux_edges.size());
    for (int i = 0; i < d - 2; ++i) {
      int internal = tg.internal_base[static_cast<size_t>(v)] + i;
      for (int slot = 0; slot < d; ++slot) {
        int ext = tg.external_node[static_cast<size_t>(tg.external_base[static_cast<size_t>(v)] + slot)];
        aux_edges.push_back({internal, ext});
        tg.host_edge.push_back(-1);
      }
    }
  }
  tg.aux = Multigraph(next_node, std::move(aux_edges));
  return tg;
}

std::vector<OrientedCycle> decompose_into_cycles(const Multigraph& g, const std::vector<int>& edge_ids) {
  int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> sel(static_cast<size_t>(n));  // (edge, to)
  for (int e : edge_ids) {
    const Edge& ed = g.edge(e);
    sel[static_cast<size_t>(ed.u)].push_back({e, ed.v});
    sel[static_cast<size_t>(ed.v)].push_back({e, ed.u});
  }
  // Vertices outside the edge set are ignored; covered vertices need degree 2.
  for (int v = 0; v < n; ++v)
    if (sel[static_cast<size_t>(v)].size() != 0 && sel[static_cast<size_t>(v)].size() != 2)
      throw ContractViolation("cycle decomposition saw degree " +
                              std::to_string(sel[static_cast<size_t>(v)].size()) + " at vertex " +
                              std::to_string(v));

  std::vector<OrientedCycle> cycles;
  std::vector<int8_t> done(static_cast<size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (done[static_cast<size_t>(start)] || sel[static_cast<size_t>(start)].empty()) continue;
    OrientedCycle cyc;
    int cur = start;
    int in_edge = -1;
    do {
      done[static_cast<size_t>(cur)] = 1;
      cyc.vertices.push_back(cur);
      // leave by the other selected edge; distinguished by edge id so that
      // 2-cycles (two parallels) walk both edges
      auto [e0, t0] = sel[static_cast<size_t>(cur)][0];
      auto [e1, t1] = sel[static_cast<size_t>(cur)][1];
      int out_edge, out_to;
      if (in_edge == -1) {
        out_edge = std::min(e0, e1);
        out_to = out_edge == e0 ? t0 : t1;
      } else if (e0 == in_edge) {
        out_edge = e1;
        out_to = t1;
      } else {
        out_edge = e0;
        out_to = t0;
      }
      cyc.edge_ids.push_back(out_edge);
      in_edge = out_edge;
      cur = out_to;
    } while (cur != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

TwoFactorResult two_factor(const Multigraph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("two_factor requires a nonempty graph");
  if (!is_connected(g)) throw InvalidInput("two_factor requires a connected graph");
  Regularity reg = regularity(g);
  if (const Irregular* irr = std::get_if<Irregular>(&reg))
    throw InvalidInput("two_factor requires a regular graph; vertices " + std::to_string(irr->u) +
                       " and " + std::to_string(irr->v) + " have degrees " +
                       std::to_string(g.degree(irr->u)) + " and " + std::to_string(g.degree(irr->v)));
  int r = std::get<Regular>(reg).r;
  if (r < 2) throw InvalidInput("two_factor requires degree >= 2, graph is " + std::to_string(r) + "-regular");

  TutteGadget tg = tutte_gadget(g);

  // Seed the matching from a greedy max-degree-2 subgraph of the host: its
  // edges match external pairs, internals then pair with leftover externals.
  std::vector<int> host_deg(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<int8_t> picked(static_cast<size_t>(g.edge_count()), 0);
  std::vector<int> seed;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (host_deg[static_cast<size_t>(ed.u)] < 2 && host_deg[static_cast<size_t>(ed.v)] < 2) {
      ++host_deg[static_cast<size_t>(ed.u)];
      ++host_deg[static_cast<size_t>(ed.v)];
      picked[static_cast<size_t>(e)] = 1;
      seed.push_back(e);  // host image aux edge has the same id
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident(v);
    int used_internals = 0;
    int remaining = tg.internal_count[static_cast<size_t>(v)];
    for (int slot = 0; slot < static_cast<int>(inc.size()) && remaining > 0; ++slot) {
      int e = inc[static_cast<size_t>(slot)].edge;
      if (picked[static_cast<size_t>(e)]) continue;
      // gadget edges for v are laid out internal-major, externals in slot order
      seed.push_back(tg.gadget_edge_base[static_cast<size_t>(v)] + used_internals * g.degree(v) + slot);
      ++used_internals;
      --remaining;
    }
  }

  Matching pm = maximum_matching(tg.aux, seed);
  if (2 * pm.size() < tg.aux.vertex_count()) return NoTwoFactor{std::move(pm)};

  std::vector<int> selected;
  for (int e : pm.matched_edges)
    if (tg.host_edge[static_cast<size_t>(e)] != -1) selected.push_back(tg.host_edge[static_cast<size_t>(e)]);

  // Selected-degree identity: each gadget's internals consume d-2 externals,
  // leaving exactly two host edges selected per vertex.
  std::vector<int> sel_deg(static_cast<size_t>(g.vertex_count()), 0);
  for (int e : selected) {
    ++sel_deg[static_cast<size_t>(g.edge(e).u)];
    ++sel_deg[static_cast<size_t>(g.edge(e).v)];
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (sel_deg[static_cast<size_t>(v)] != 2)
      throw ContractViolation("perfect gadget matching selected degree " +
                              std::to_string(sel_deg[static_cast<size_t>(v)]) + " at vertex " +
                              std::to_string(v));
  return TwoFactor{decompose_into_cycles(g, selected)};
}

}  // namespace eventree
