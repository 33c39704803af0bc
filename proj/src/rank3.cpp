#include "qconc/rank3.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "qconc/error.hpp"

namespace qconc {

namespace {

constexpr double kRealTolerance = 1e-12;
constexpr double kSignTolerance = 1e-12;
constexpr double kSeparableTolerance = 1e-12;
constexpr double kWeightSumTolerance = 1e-12;

void validate_weights(const std::array<double, 3>& p) {
  for (double w : p) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidDecomposition("mixture: negative or non-finite probability");
  }
  const double total = p[0] + p[1] + p[2];
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw InvalidDecomposition("mixture: probabilities sum to " + std::to_string(total));
  }
}

std::array<PureTwoQubit, 3> components_of(const std::array<CoherentPairSpec, 3>& specs) {
  return {entangled_coherent_pure(specs[0]), entangled_coherent_pure(specs[1]), entangled_coherent_pure(specs[2])};
}

// 4/3 [(x_a +- y_a)(x_d +- y_d) - (x_b +- y_b)(x_c +- y_c) + z_a z_d - z_b z_c]
Complex paired(const Amplitudes& x, const Amplitudes& y, const Amplitudes& z, double sign) {
  const Amplitudes s = x + Complex{sign} * y;
  return 4.0 / 3.0 * (s[0] * s[3] - s[1] * s[2] + z[0] * z[3] - z[1] * z[2]);
}

// 1/2 p_i p_j [ |D|^2 - |D^2 - 4 c_i c_j| ]
double pair_term(double pi, double pj, Complex diff, Complex ci, Complex cj) {
  return 0.5 * pi * pj * (std::norm(diff) - std::abs(diff * diff - 4.0 * ci * cj));
}

bool all_real(const TripleMixture& mix) {
  for (const auto& psi : mix.components()) {
    for (Complex z : psi.amplitudes()) {
      if (std::abs(z.imag()) > kRealTolerance) return false;
    }
  }
  return true;
}

}  // namespace

TripleMixture::TripleMixture(std::array<double, 3> p, std::array<PureTwoQubit, 3> components)
    : p_(p), components_(std::move(components)) {
  validate_weights(p_);
}

TripleMixture::TripleMixture(std::array<double, 3> p, const std::array<CoherentPairSpec, 3>& specs)
    : p_(p), components_(components_of(specs)), specs_(specs) {
  validate_weights(p_);
}

double TripleMixture::component_concurrence(std::size_t i) const {
  if (specs_) return amplitude_concurrence((*specs_)[i]);
  return concurrence_pure(components_[i]);
}

double TripleMixture::max_overlap() const {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      m = std::max(m, std::abs(inner(components_[i].amplitudes(), components_[j].amplitudes())));
    }
  }
  return m;
}

bool TripleMixture::orthogonal() const { return max_overlap() <= kOrthogonalityThreshold; }

Decomposition TripleMixture::decomposition() const {
  return make_decomposition({p_[0], p_[1], p_[2]}, {components_[0], components_[1], components_[2]});
}

DensityMatrix4 TripleMixture::density() const { return density_from_decomposition(decomposition()); }

std::array<Amplitudes, 4> quartet_states(const TripleMixture& mix) {
  const auto& psi = mix.components();
  const Complex scale = 1.0 / std::numbers::sqrt3;
  constexpr std::array<std::array<double, 2>, 4> signs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  std::array<Amplitudes, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = scale * (psi[0].amplitudes() + Complex{signs[k][0]} * psi[1].amplitudes() +
                      Complex{signs[k][1]} * psi[2].amplitudes());
    if (norm(out[k]) < kZeroStateThreshold) {
      throw ZeroState("quartet_states: superposition " + std::to_string(k + 1) + " cancels");
    }
  }
  return out;
}

PairwiseConcurrences pairwise_complex_concurrences(const TripleMixture& mix) {
  const auto& psi = mix.components();
  const Amplitudes& v1 = psi[0].amplitudes();
  const Amplitudes& v2 = psi[1].amplitudes();
  const Amplitudes& v3 = psi[2].amplitudes();

  PairwiseConcurrences out;
  out.c1 = complex_concurrence(v1);
  out.c2 = complex_concurrence(v2);
  out.c3 = complex_concurrence(v3);
  out.c_plus = paired(v1, v2, v3, +1.0);
  out.c_minus = paired(v1, v2, v3, -1.0);
  out.c_plus_p = paired(v1, v3, v2, +1.0);
  out.c_minus_p = paired(v1, v3, v2, -1.0);
  out.c_plus_pp = paired(v2, v3, v1, +1.0);
  out.c_minus_pp = paired(v2, v3, v1, -1.0);

  // Quartet concurrences from the raw sums; a cancelling sum simply has zero
  // concurrence here.
  const Complex scale = 1.0 / std::numbers::sqrt3;
  constexpr std::array<std::array<double, 2>, 4> signs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  for (std::size_t k = 0; k < 4; ++k) {
    out.quartet[k] = complex_concurrence(scale * (v1 + Complex{signs[k][0]} * v2 + Complex{signs[k][1]} * v3));
  }
  return out;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kUpperB1: return "UPPER_CASE_B1";
    case CaseLabel::kIntermediateB2: return "INTERMEDIATE_B2";
    case CaseLabel::kLowerB3: return "LOWER_B3";
    case CaseLabel::kLowerC: return "LOWER_C";
    case CaseLabel::kGeneric: return "GENERIC";
  }
  return "GENERIC";
}

Bounds concurrence_bounds(const TripleMixture& mix) {
  const auto& p = mix.p();
  const double t1 = p[0] * mix.component_concurrence(0);
  const double t2 = p[1] * mix.component_concurrence(1);
  const double t3 = p[2] * mix.component_concurrence(2);
  const double lo = t1 - t2 - t3;
  const double hi = t1 + t2 + t3;
  return {lo * lo, hi * hi};
}

Rank3Result concurrence_squared_rank3(const TripleMixture& mix) {
  const auto& p = mix.p();
  const PairwiseConcurrences pc = pairwise_complex_concurrences(mix);

  Rank3Result r;
  r.diagonal_term = p[0] * p[0] * std::norm(pc.c1) + p[1] * p[1] * std::norm(pc.c2) + p[2] * p[2] * std::norm(pc.c3);
  r.pair_terms[0] = pair_term(p[0], p[1], pc.c_plus - pc.c_minus, pc.c1, pc.c2);
  r.pair_terms[1] = pair_term(p[0], p[2], pc.c_plus_p - pc.c_minus_p, pc.c1, pc.c3);
  r.pair_terms[2] = pair_term(p[1], p[2], pc.c_plus_pp - pc.c_minus_pp, pc.c2, pc.c3);
  r.c_squared = r.diagonal_term + r.pair_terms[0] + r.pair_terms[1] + r.pair_terms[2];

  const Bounds b = concurrence_bounds(mix);
  r.lower_bound = b.lower;
  r.upper_bound = b.upper;
  r.case_label = classify_real_case(mix);
  r.orthogonal = mix.orthogonal();
  r.negative = r.c_squared < -kBoundTolerance;
  r.lower_violation = r.c_squared < r.lower_bound - kBoundTolerance;
  r.upper_violation = r.c_squared > r.upper_bound + kBoundTolerance;
  return r;
}

double concurrence_squared_rank3_quartet(const TripleMixture& mix) {
  const auto& p = mix.p();
  const PairwiseConcurrences pc = pairwise_complex_concurrences(mix);
  const auto& q = pc.quartet;
  const double diag =
      p[0] * p[0] * std::norm(pc.c1) + p[1] * p[1] * std::norm(pc.c2) + p[2] * p[2] * std::norm(pc.c3);
  return diag + pair_term(p[0], p[1], q[0] + q[1] - q[2] - q[3], pc.c1, pc.c2) +
         pair_term(p[0], p[2], q[0] + q[2] - q[1] - q[3], pc.c1, pc.c3) +
         pair_term(p[1], p[2], q[0] + q[3] - q[1] - q[2], pc.c2, pc.c3);
}

CaseLabel classify_real_case(const TripleMixture& mix) {
  if (!all_real(mix)) return CaseLabel::kGeneric;

  const PairwiseConcurrences pc = pairwise_complex_concurrences(mix);
  const std::array<double, 3> prod{(pc.c1 * pc.c2).real(), (pc.c1 * pc.c3).real(), (pc.c2 * pc.c3).real()};
  const std::array<double, 3> diff{(pc.c_plus - pc.c_minus).real(), (pc.c_plus_p - pc.c_minus_p).real(),
                                   (pc.c_plus_pp - pc.c_minus_pp).real()};
  const auto& p = mix.p();
  const bool no_23_cross = std::abs(p[1] * p[2] * prod[2]) <= kSignTolerance;

  auto all = [](auto pred) { return pred(0) && pred(1) && pred(2); };

  if (no_23_cross && all([&](int k) { return std::abs(diff[k]) <= kSignTolerance; })) return CaseLabel::kLowerC;
  if (all([&](int k) {
        return 4.0 * prod[k] >= -kSignTolerance && 4.0 * prod[k] <= diff[k] * diff[k] + kSignTolerance;
      })) {
    return CaseLabel::kUpperB1;
  }
  if (no_23_cross && all([&](int k) { return prod[k] <= kSignTolerance; })) return CaseLabel::kLowerB3;
  if (all([&](int k) { return 4.0 * prod[k] >= diff[k] * diff[k] - kSignTolerance; })) {
    return CaseLabel::kIntermediateB2;
  }
  return CaseLabel::kGeneric;
}

double symmetric_ratio(double alpha, double alpha_p) {
  if (alpha == alpha_p) return std::numeric_limits<double>::infinity();
  const double r = (alpha * alpha_p + 1.0) / (alpha - alpha_p);
  return r * r;
}

SymmetricCaseParams symmetric_case_params(double p_i, double alpha, double alpha_p) {
  return {symmetric_ratio(alpha, alpha_p), p_i, alpha, alpha_p};
}

double reduced_symmetric_concurrence(double p_i, double alpha, double alpha_p) {
  if (alpha == alpha_p) return 0.0;
  const double x = symmetric_ratio(alpha, alpha_p);
  const double c = p_i / (1.0 + 2.0 * x);
  return c * c;
}

CoherentPairSpec symmetric_coherent_spec(double alpha, double alpha_p) {
  return CoherentPairSpec(alpha, alpha, alpha_p, alpha_p, std::numbers::pi / 4.0, 0.0);
}

double case_d_concurrence(const TripleMixture& mix) {
  std::array<double, 3> c{};
  int separable = 0;
  std::size_t entangled = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    c[i] = mix.component_concurrence(i);
    if (c[i] <= kSeparableTolerance) {
      ++separable;
    } else {
      entangled = i;
    }
  }
  if (separable != 2) {
    throw PreconditionFailed("case_d_concurrence: expected exactly two separable components, found " +
                             std::to_string(separable));
  }
  const double v = mix.p()[entangled] * c[entangled];
  return v * v;
}

}  // namespace qconc
