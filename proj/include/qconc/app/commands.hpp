#pragma once

// Library side of the `qconc` command-line tool. Each command is a function
// that writes to the given streams and returns the process exit code, so the
// tests can drive them without spawning processes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qconc/app/state_json.hpp"
#include "qconc/convex_roof.hpp"
#include "qconc/random.hpp"
#include "qconc/rank3.hpp"

namespace qconc::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitSelftestFailure = 1,
  kExitInputError = 2,
  kExitInvariantFailure = 3,
  kExitIoError = 4,
};

// ---------------------------------------------------------------- measure

struct MeasureOptions {
  bool run_oracle = true;
  RoofConfig roof{};
};

/// Every applicable measure for the parsed state. Throws on numerical
/// failures (NumericalError) and on inconsistent report flags
/// (InvariantViolation).
nlohmann::json measure_report(const StateInput& state, const MeasureOptions& opts = {});

/// Reads a state document from `in`, writes the JSON report to `out`.
int cmd_measure(std::istream& in, std::ostream& out, std::ostream& err, const MeasureOptions& opts = {});

// ---------------------------------------------------------------- sweep

enum class SweepMode { kAlphaSurface, kXPSurface };

struct GridRange {
  double lo = 0.0;
  double hi = 0.0;
  int n = 2;

  double at(int i) const { return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1); }
};

/// Parses "lo:hi:n". Throws InputError unless n >= 2 and lo < hi.
GridRange parse_range(const std::string& text);

/// Parses a probability given as a decimal or as a fraction "a/b".
double parse_probability(const std::string& text);

struct SweepSpec {
  SweepMode mode = SweepMode::kAlphaSurface;
  double p = 1.0 / 3.0;        // weight of the entangled component (alpha mode)
  GridRange range{-5, 5, 101};  // alpha and alpha' (alpha mode) or X (xp mode)
  GridRange p_range{0, 1, 101}; // p axis (xp mode)
};

/// CSV text. Alpha mode: header `alpha,alpha_p,x,c_squared`, alpha outer,
/// alpha' inner. XP mode: header `p,x,c_squared`, p outer, X inner.
std::string sweep_csv(const SweepSpec& spec);

int cmd_sweep(const SweepSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------- compare

struct ComparisonRow {
  std::array<double, 3> p{};
  double rank3_c2 = 0.0;
  double wootters_c2 = 0.0;
  double roof_c2 = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  CaseLabel label = CaseLabel::kGeneric;
  bool orthogonal = false;
  bool negative = false;
  bool lower_violation = false;
  bool upper_violation = false;
};

/// Three random pure states (orthonormalized unless `nonorthogonal`) with
/// flat Dirichlet weights over the first `rank` of them; rank is 2 or 3.
TripleMixture random_triple_mixture(Rng& rng, int rank, bool nonorthogonal);

ComparisonRow compare_mixture(const TripleMixture& mix, const RoofConfig& roof);

struct CompareSpec {
  int count = 100;
  std::uint64_t seed = 0;
  int rank = 3;
  bool nonorthogonal = false;
  int restarts = 64;
  int threads = 0;  // 0: hardware concurrency
  /// Mixtures evaluated before the random ones, e.g. to pin known cases.
  std::vector<TripleMixture> injected;
};

struct CompareOutcome {
  std::vector<ComparisonRow> rows;
  nlohmann::json summary;
};

CompareOutcome run_compare(const CompareSpec& spec);

inline constexpr const char* kCompareHeader =
    "index,p1,p2,p3,rank3_c2,wootters_c2,roof_c2,lower,upper,case,flags";

std::string compare_csv(const std::vector<ComparisonRow>& rows);

/// Writes the CSV to out_path and the summary JSON to `out`.
int cmd_compare(const CompareSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------- selftest

struct SelftestGroupResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the embedded invariant corpus. `mutate` names a group whose anchor
/// constant is perturbed, to demonstrate that the group detects it.
std::vector<SelftestGroupResult> run_selftest(const std::optional<std::string>& mutate = std::nullopt);

std::vector<std::string> selftest_group_names();

int cmd_selftest(std::ostream& out, const std::optional<std::string>& mutate = std::nullopt);

}  // namespace qconc::app
