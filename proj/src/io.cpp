#include "eventree/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eventree/errors.hpp"

namespace eventree {

Multigraph read_graph_text(std::istream& in) {
  std::string line;
  auto next_payload_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_payload_line(header)) throw InvalidInput("edge-list input is empty");
  std::istringstream hs(header);
  long long n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0) throw InvalidInput("bad edge-list header, expected 'n m'");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long e = 0; e < m; ++e) {
    std::string row;
    if (!next_payload_line(row)) throw InvalidInput("edge-list ends early, expected " + std::to_string(m) + " edges");
    std::istringstream rs(row);
    long long u = 0, v = 0;
    if (!(rs >> u >> v)) throw InvalidInput("bad edge-list row: " + row);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

void write_graph_text(const Multigraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Multigraph read_graph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("bad JSON graph: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw InvalidInput("JSON graph must be an object with 'n' and 'edges'");
  std::vector<Edge> edges;
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw InvalidInput("JSON graph edges must be 2-element arrays");
    edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return Multigraph(j["n"].get<int>(), std::move(edges));
}

void write_graph_json(const Multigraph& g, std::ostream& out) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto arr = nlohmann::json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.u, e.v});
  j["edges"] = std::move(arr);
  out << j.dump() << '\n';
}

Multigraph read_graph_auto(std::istream& in) {
  int c;
  while ((c = in.peek()) != EOF && (c == ' ' || c == '\t' || c == '\n' || c == '\r')) in.get();
  if (c == '{') return read_graph_json(in);
  return read_graph_text(in);
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open graph file: " + path);
  return read_graph_auto(f);
}

}  // namespace eventree
