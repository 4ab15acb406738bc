#pragma once

#include <iosfwd>
#include <string>

#include "eventree/multigraph.hpp"

namespace eventree {

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// vertex ids. Blank lines and lines starting with '#' are ignored.
Multigraph read_graph_text(std::istream& in);
void write_graph_text(const Multigraph& g, std::ostream& out);

// JSON format: {"n": <int>, "edges": [[u, v], ...]}.
Multigraph read_graph_json(std::istream& in);
void write_graph_json(const Multigraph& g, std::ostream& out);

// Dispatches on the first non-whitespace byte ('{' means JSON).
Multigraph read_graph_auto(std::istream& in);
Multigraph read_graph_file(const std::string& path);

}  // namespace eventree
