// qconc: measure, sweep, compare and selftest front end.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qconc/app/commands.hpp"
#include "qconc/error.hpp"

namespace {

using namespace qconc::app;

int run_measure(const std::string& path, int restarts) {
  MeasureOptions opts;
  opts.roof.restarts = restarts;
  if (path == "-") return cmd_measure(std::cin, std::cout, std::cerr, opts);
  std::ifstream f(path);
  if (!f) {
    std::cerr << "error: cannot open " << path << '\n';
    return kExitIoError;
  }
  return cmd_measure(f, std::cout, std::cerr, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit concurrence toolkit"};
  app.require_subcommand(1);

  std::string state_path;
  int measure_restarts = 64;
  auto* measure = app.add_subcommand("measure", "Evaluate every applicable measure on a JSON state");
  measure->add_option("--state", state_path, "State file, or - for standard input")->required();
  measure->add_option("--restarts", measure_restarts, "Convex-roof restarts")->check(CLI::PositiveNumber);

  std::string mode = "alpha", p_text = "1/3", range_text, p_range_text = "0:1:101", sweep_out = "-";
  auto* sweep = app.add_subcommand("sweep", "Tabulate the symmetric reduced concurrence on a grid");
  sweep->add_option("--mode", mode, "alpha: C^2 over (alpha, alpha'); xp: C^2 over (p, X)")
      ->check(CLI::IsMember({"alpha", "xp"}));
  sweep->add_option("--p", p_text, "Weight of the entangled component (alpha mode), decimal or a/b");
  sweep->add_option("--range", range_text, "lo:hi:n for alpha and alpha' (default -5:5:101) or X (default 0:10:101)");
  sweep->add_option("--p-range", p_range_text, "lo:hi:n for p (xp mode)");
  sweep->add_option("--out", sweep_out, "Output CSV, or - for standard output");

  CompareSpec cspec;
  std::string compare_out = "-";
  auto* compare = app.add_subcommand("compare", "Compare the rank-3 formula against Wootters and the convex roof");
  compare->add_option("--count", cspec.count, "Number of random mixtures")->check(CLI::PositiveNumber);
  compare->add_option("--seed", cspec.seed, "Seed");
  compare->add_option("--rank", cspec.rank, "Mixture rank")->check(CLI::IsMember({2, 3}));
  compare->add_flag("--nonorthogonal", cspec.nonorthogonal, "Skip orthonormalizing the components");
  compare->add_option("--restarts", cspec.restarts, "Convex-roof restarts per mixture")->check(CLI::PositiveNumber);
  compare->add_option("--threads", cspec.threads, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  compare->add_option("--out", compare_out, "Output CSV, or - for standard output");

  std::optional<std::string> mutate;
  auto* selftest = app.add_subcommand("selftest", "Run the embedded invariant corpus");
  selftest->add_option("--mutate", mutate, "Perturb the anchor of one group (detection check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*measure) return run_measure(state_path, measure_restarts);
    if (*sweep) {
      SweepSpec spec;
      spec.mode = mode == "xp" ? SweepMode::kXPSurface : SweepMode::kAlphaSurface;
      spec.p = parse_probability(p_text);
      if (!range_text.empty()) {
        spec.range = parse_range(range_text);
      } else if (spec.mode == SweepMode::kXPSurface) {
        spec.range = {0.0, 10.0, 101};
      }
      spec.p_range = parse_range(p_range_text);
      return cmd_sweep(spec, sweep_out, std::cout, std::cerr);
    }
    if (*compare) return cmd_compare(cspec, compare_out, std::cout, std::cerr);
    if (*selftest) return cmd_selftest(std::cout, mutate);
  } catch (const qconc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const qconc::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariantFailure;
  }
  return kExitOk;
}
