#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eventree/cli.hpp"
#include "eventree/errors.hpp"

using eventree::GenSpec;
using eventree::RunConfig;

namespace {

// Options shared by the subcommands that take a graph.
struct GenFlags {
  std::string kind;
  int n = 0, m = 0, r = 0, multiplicity = 2, blocks = 0;
  uint64_t seed = 0;
};

void add_input_options(CLI::App* cmd, RunConfig& cfg, GenFlags& gf) {
  cmd->add_option("--input", cfg.input_path, "graph file (edge list or JSON), - for stdin");
  cmd->add_option("--gen", gf.kind,
                  "generate the instance: random_connected, random_regular, regular_bipartite, "
                  "bridged_chain, theta, parallel_boosted");
  cmd->add_option("--n", gf.n, "vertex count");
  cmd->add_option("--m", gf.m, "edge count");
  cmd->add_option("--r", gf.r, "regularity degree");
  cmd->add_option("--mult", gf.multiplicity, "multiplicity bound (parallel_boosted)");
  cmd->add_option("--blocks", gf.blocks, "block count (bridged_chain)");
  cmd->add_option("--seed", gf.seed, "generator seed");
}

void finalize_gen(RunConfig& cfg, const GenFlags& gf) {
  if (gf.kind.empty()) return;
  if (!cfg.input_path.empty()) throw CLI::ValidationError("use either --input or --gen, not both");
  GenSpec spec;
  spec.kind = eventree::gen_kind_from_string(gf.kind);
  spec.n = gf.n;
  spec.m = gf.m;
  spec.r = gf.r;
  spec.multiplicity = gf.multiplicity;
  spec.blocks = gf.blocks;
  spec.seed = gf.seed;
  cfg.gen = spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning weakly even trees in multigraphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  GenFlags gf;

  CLI::App* solve = app.add_subcommand("solve", "spanning weakly even tree or no-solution certificate");
  add_input_options(solve, cfg, gf);
  solve->add_option("--w", cfg.w, "anchor vertex")->required();
  solve->add_option("--lambda", cfg.lambda, "anchor type, 0 or 1")->required();
  solve->add_option("--format", cfg.format, "json, dot or edgelist");
  solve->add_flag("-v,--verbose", cfg.verbosity, "progress notes on stderr");

  CLI::App* twof = app.add_subcommand("two-factor", "2-factor of a regular graph");
  add_input_options(twof, cfg, gf);

  CLI::App* weak = app.add_subcommand("weak-two-factor", "weak 2-factor of a 2-edge-connected graph");
  add_input_options(weak, cfg, gf);

  CLI::App* verify = app.add_subcommand("verify", "check a tree certificate against a graph");
  add_input_options(verify, cfg, gf);
  verify->add_option("--tree", cfg.tree_path, "tree JSON file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force existence verdict");
  add_input_options(oracle, cfg, gf);
  oracle->add_option("--w", cfg.w, "anchor vertex")->required();
  oracle->add_option("--lambda", cfg.lambda, "anchor type, 0 or 1")->required();
  oracle->add_option("--cap", cfg.cap, "refuse above this many spanning trees");

  CLI::App* gen = app.add_subcommand("gen", "emit a generated instance");
  add_input_options(gen, cfg, gf);
  gen->add_option("--format", cfg.format, "json, edgelist or dot");

  CLI::App* bench = app.add_subcommand("bench", "timing table over a generator sweep");
  add_input_options(bench, cfg, gf);
  bench->add_option("--count", cfg.count, "number of instances");
  bench->add_option("--jobs", cfg.jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    finalize_gen(cfg, gf);
  } catch (const CLI::ValidationError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  } catch (const eventree::InvalidInput& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 3;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return eventree::run(cfg, std::cout, std::cerr);
}
