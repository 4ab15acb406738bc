#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "eventree/generators.hpp"
#include "eventree/verify.hpp"

namespace eventree {

// Exit codes: 0 solved/success, 2 no-solution (regular bipartite, failed
// verification, nonexistent oracle witness), 3 invalid input, 4 internal
// contract failure.
struct RunConfig {
  std::string subcommand;  // solve, two-factor, weak-two-factor, verify, oracle, gen, bench
  std::string input_path;  // graph file; "-" reads standard input
  std::optional<GenSpec> gen;
  std::string tree_path;  // verify only
  int w = 0;
  int lambda = 0;
  std::string format = "json";  // json, dot, edgelist
  int verbosity = 0;
  long long cap = 10000000;
  int jobs = 1;
  int count = 10;  // bench instances
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Tree certificate JSON: {"edges": [[u,v],...], "types": [...], "w": w,
// "lambda": lambda}; exposed for the verify subcommand and tests.
std::string tree_to_json(const Multigraph& g, const BipartiteTree& t);
BipartiteTree tree_from_json(const Multigraph& g, std::istream& in);

}  // namespace eventree
