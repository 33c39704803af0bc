#include <algorithm>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "qconc/app/commands.hpp"
#include "qconc/app/format.hpp"
#include "qconc/error.hpp"

namespace qconc::app {

namespace {

using nlohmann::json;

constexpr double kAgreementTolerance = 1e-6;
constexpr double kOracleSlack = 1e-6;

std::string flags_field(const ComparisonRow& r) {
  std::string out;
  const auto add = [&out](bool set, const char* name) {
    if (!set) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(r.orthogonal, "orthogonal");
  add(r.negative, "negative");
  add(r.lower_violation, "lower_violation");
  add(r.upper_violation, "upper_violation");
  add(std::sqrt(r.roof_c2) < std::sqrt(r.wootters_c2) - kOracleSlack, "roof_below_wootters");
  return out.empty() ? "none" : out;
}

void check_flags(const ComparisonRow& r) {
  const bool ok = r.negative == (r.rank3_c2 < -kBoundTolerance) &&
                  r.lower_violation == (r.rank3_c2 < r.lower - kBoundTolerance) &&
                  r.upper_violation == (r.rank3_c2 > r.upper + kBoundTolerance);
  if (!ok) throw InvariantViolation("comparison flags disagree with the recorded values");
}

// Linear interpolation between order statistics.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

json distribution(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  return {{"min", v.front()},          {"q05", quantile(v, 0.05)},   {"q25", quantile(v, 0.25)},
          {"median", quantile(v, 0.5)}, {"q75", quantile(v, 0.75)},   {"q95", quantile(v, 0.95)},
          {"max", v.back()},            {"mean", mean}};
}

json summarize(const CompareSpec& spec, const std::vector<ComparisonRow>& rows) {
  std::vector<double> diff, roof_diff;
  double max_abs = 0.0, max_abs_roof = 0.0;
  int agree = 0, lower = 0, upper = 0, negative = 0, below = 0, orthogonal = 0;
  std::map<std::string, int> cases;
  for (CaseLabel l : {CaseLabel::kUpperB1, CaseLabel::kIntermediateB2, CaseLabel::kLowerB3, CaseLabel::kLowerC,
                      CaseLabel::kGeneric}) {
    cases[std::string(to_string(l))] = 0;
  }
  for (const ComparisonRow& r : rows) {
    const double d = r.rank3_c2 - r.wootters_c2;
    diff.push_back(d);
    roof_diff.push_back(r.roof_c2 - r.wootters_c2);
    max_abs = std::max(max_abs, std::abs(d));
    max_abs_roof = std::max(max_abs_roof, std::abs(r.roof_c2 - r.wootters_c2));
    agree += std::abs(d) <= kAgreementTolerance;
    lower += r.lower_violation;
    upper += r.upper_violation;
    negative += r.negative;
    orthogonal += r.orthogonal;
    below += std::sqrt(r.roof_c2) < std::sqrt(r.wootters_c2) - kOracleSlack;
    ++cases[std::string(to_string(r.label))];
  }
  return {{"count", rows.size()},
          {"seed", spec.seed},
          {"rank", spec.rank},
          {"nonorthogonal", spec.nonorthogonal},
          {"max_abs_rank3_minus_wootters", max_abs},
          {"fraction_agree_1e-6", static_cast<double>(agree) / static_cast<double>(rows.size())},
          {"lower_bound_violations", lower},
          {"upper_bound_violations", upper},
          {"negative_count", negative},
          {"orthogonal_count", orthogonal},
          {"roof_below_wootters_count", below},
          {"max_abs_roof_minus_wootters", max_abs_roof},
          {"rank3_minus_wootters", distribution(diff)},
          {"roof_minus_wootters", distribution(roof_diff)},
          {"case_counts", cases},
          {"flags_consistent", true}};
}

}  // namespace

TripleMixture random_triple_mixture(Rng& rng, int rank, bool nonorthogonal) {
  if (rank != 2 && rank != 3) throw DomainError("random_triple_mixture: rank must be 2 or 3");
  std::array<Amplitudes, 3> v{random_amplitudes(rng), random_amplitudes(rng), random_amplitudes(rng)};
  if (!nonorthogonal) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < i; ++k) v[i] = v[i] - inner(v[k], v[i]) * v[k];
      v[i] = Complex{1.0 / norm(v[i])} * v[i];
    }
  }
  const std::vector<double> w = random_simplex(rng, static_cast<std::size_t>(rank));
  const std::array<double, 3> p{w[0], w[1], rank == 3 ? w[2] : 0.0};
  return TripleMixture(p, {PureTwoQubit(v[0]), PureTwoQubit(v[1]), PureTwoQubit(v[2])});
}

ComparisonRow compare_mixture(const TripleMixture& mix, const RoofConfig& roof) {
  const Rank3Result r = concurrence_squared_rank3(mix);
  const DensityMatrix4 rho = mix.density();
  const double w = wootters_concurrence(rho).concurrence;
  const double o = convex_roof_concurrence(rho, roof).c_estimate;

  ComparisonRow row;
  row.p = mix.p();
  row.rank3_c2 = r.c_squared;
  row.wootters_c2 = w * w;
  row.roof_c2 = o * o;
  row.lower = r.lower_bound;
  row.upper = r.upper_bound;
  row.label = r.case_label;
  row.orthogonal = r.orthogonal;
  row.negative = r.negative;
  row.lower_violation = r.lower_violation;
  row.upper_violation = r.upper_violation;
  check_flags(row);
  return row;
}

CompareOutcome run_compare(const CompareSpec& spec) {
  if (spec.count < 1) throw DomainError("compare: count must be >= 1");
  if (spec.rank != 2 && spec.rank != 3) throw DomainError("compare: rank must be 2 or 3");
  if (spec.restarts < 1) throw DomainError("compare: restarts must be >= 1");

  const std::size_t total = spec.injected.size() + static_cast<std::size_t>(spec.count);
  std::vector<ComparisonRow> rows(total);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t threads = spec.threads > 0 ? static_cast<std::size_t>(spec.threads) : hw;

  // Instance k draws its mixture and its optimizer seed from stream k only, so
  // rows do not depend on scheduling.
  std::vector<std::exception_ptr> failures(total);
  const auto evaluate = [&](std::size_t k) noexcept {
    try {
      Rng rng = make_rng(spec.seed, k);
      const TripleMixture mix =
          k < spec.injected.size() ? spec.injected[k] : random_triple_mixture(rng, spec.rank, spec.nonorthogonal);
      RoofConfig roof;
      roof.restarts = spec.restarts;
      roof.seed = rng();
      rows[k] = compare_mixture(mix, roof);
    } catch (...) {
      failures[k] = std::current_exception();
    }
  };
  if (threads <= 1) {
    for (std::size_t k = 0; k < total; ++k) evaluate(k);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < total; k += threads) evaluate(k);
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return {rows, summarize(spec, rows)};
}

std::string compare_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  os << kCompareHeader << '\n';
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ComparisonRow& r = rows[k];
    os << k << ',' << format_sig9(r.p[0]) << ',' << format_sig9(r.p[1]) << ',' << format_sig9(r.p[2]) << ','
       << format_sig9(r.rank3_c2) << ',' << format_sig9(r.wootters_c2) << ',' << format_sig9(r.roof_c2) << ','
       << format_sig9(r.lower) << ',' << format_sig9(r.upper) << ',' << to_string(r.label) << ','
       << flags_field(r) << '\n';
  }
  return os.str();
}

int cmd_compare(const CompareSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err) {
  CompareOutcome outcome;
  try {
    outcome = run_compare(spec);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariantFailure;
  }
  const std::string csv = compare_csv(outcome.rows);
  if (out_path.empty() || out_path == "-") {
    out << csv;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << csv;
    f.close();
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return kExitIoError;
    }
  }
  out << outcome.summary.dump(2) << '\n';
  return out ? kExitOk : kExitIoError;
}

}  // namespace qconc::app
