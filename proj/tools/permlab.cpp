// permlab: exact tables, oracle suites, samplers and commutator reports.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "permlab/cli.hpp"

namespace {

using permlab::cli::CommandConfig;

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_output(CLI::App* sub, std::string& path) {
  sub->add_option("-o,--output", path, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CommandConfig cfg;
  std::string format = "text";
  try {
    cfg.seed = permlab::cli::default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return permlab::cli::kUsageError;
  }

  CLI::App app{"Permutation statistics laboratory"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  auto* dist = app.add_subcommand("dist", "Exact law of a permutation statistic");
  dist->add_option("--stat", cfg.stat, "unseparated | fixed | circular | shifted");
  dist->add_option("--n", cfg.n, "Permutation size")->required();
  dist->add_option("--h", cfg.h, "Shift for --stat shifted");
  dist->add_option("--what", cfg.what, "pmf | empty-count | derangements | zero");
  add_format(dist, format);
  add_output(dist, cfg.output_path);

  auto* verify = app.add_subcommand("verify", "Run brute-force oracle suites");
  verify->add_option("--suite", cfg.suite,
                     "thm1 | exchangeability | bijection | shifted | circular | identity53 | chains | commutator | all");
  verify->add_option("--n", cfg.n, "Size for the exhaustive suites (default 6)");
  verify->add_option("--nmax", cfg.nmax, "Range for identity53");
  add_output(verify, cfg.output_path);

  auto* sample = app.add_subcommand("sample", "Draw permutations from a sampler or chain");
  sample->add_option("--chain", cfg.chain, "uniform | insertion | crp | cycle-growth | conjugacy");
  sample->add_option("--n", cfg.n, "Permutation size");
  sample->add_option("--count", cfg.count, "Number of samples");
  sample->add_option("--eta", cfg.eta, "Class representative for --chain conjugacy");
  sample->add_option("--seed", cfg.seed, "RNG seed");
  sample->add_flag("--trajectory", cfg.trajectory, "Print the whole chain path");
  add_output(sample, cfg.output_path);

  auto* comm = app.add_subcommand("commutator", "Fixed points of [eta, Pi] for uniform Pi");
  comm->add_option("--eta", cfg.eta, "identity | rho | two-cycles:m | type:l1+l2+... | a,b,c,...");
  comm->add_option("--n", cfg.n, "Size, where eta does not fix it");
  comm->add_flag("--conjugate", cfg.conjugate, "Replace eta by a random conjugate");
  comm->add_option("--mode", cfg.mode, "exact | mc");
  comm->add_option("--samples", cfg.samples, "Monte Carlo sample count");
  comm->add_option("--seed", cfg.seed, "RNG seed");
  add_format(comm, format);
  add_output(comm, cfg.output_path);

  auto* trace = app.add_subcommand("trace", "Step through a bijection");
  trace->add_option("--sigma", cfg.sigma, "Seed listing for circular insertion");
  trace->add_option("--ks", cfg.ks, "Insertion labels, ascending");
  trace->add_option("--peel", cfg.peel, "Listing to peel back to its seed");
  trace->add_option("--perm", cfg.perm, "Permutation for the fixed-to-shifted map");
  trace->add_option("--h", cfg.h, "Shift for --perm");
  add_output(trace, cfg.output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return permlab::cli::kUsageError;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = permlab::cli::parse_format(format);

  if (cfg.output_path.empty()) return permlab::cli::dispatch(cfg, std::cout, std::cerr);
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << cfg.output_path << '\n';
    return permlab::cli::kUsageError;
  }
  return permlab::cli::dispatch(cfg, out, std::cerr);
}
