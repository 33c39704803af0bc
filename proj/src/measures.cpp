#include "qconc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qconc/error.hpp"

namespace qconc {

namespace {

constexpr double kEntropySlack = 1e-12;

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

double clip_unit(double v, const char* what) {
  if (!std::isfinite(v) || v < -kUnitIntervalSlack || v > 1.0 + kUnitIntervalSlack) {
    throw InvariantViolation(std::string(what) + " = " + std::to_string(v) + " lies outside [0, 1]");
  }
  return std::clamp(v, 0.0, 1.0);
}

Complex complex_concurrence(const Amplitudes& v) { return 2.0 * (v[0] * v[3] - v[1] * v[2]); }

Complex complex_concurrence_pure(const PureTwoQubit& psi) { return complex_concurrence(psi.amplitudes()); }

double concurrence_pure(const PureTwoQubit& psi) {
  return clip_unit(std::abs(complex_concurrence_pure(psi)), "pure-state concurrence");
}

double binary_entropy(double x) {
  if (!std::isfinite(x) || x < -kEntropySlack || x > 1.0 + kEntropySlack) {
    throw DomainError("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double entanglement_of_formation(double c) {
  if (!std::isfinite(c) || c < -kEntropySlack || c > 1.0 + kEntropySlack) {
    throw DomainError("entanglement_of_formation: concurrence " + std::to_string(c) + " outside [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  // x_hi = (1 + s) / 2 and x_lo = 1 - x_hi, the latter evaluated without
  // cancellation for small c.
  const double x_hi = 0.5 * (1.0 + s);
  const double x_lo = c * c / (2.0 * (1.0 + s));
  return std::clamp(-xlog2x(x_hi) - xlog2x(x_lo), 0.0, 1.0);
}

MeasureValue measure_pure(const PureTwoQubit& psi) {
  const double c = concurrence_pure(psi);
  return {c, entanglement_of_formation(c)};
}

WoottersResult wootters_concurrence(const DensityMatrix4& rho) {
  const CMatrix4 root = matrix_sqrt_psd(rho.matrix());
  const CMatrix4 x = root * sigma_yy() * root.conjugate();

  WoottersResult out;
  out.spectrum.lambdas = singular_values(x);
  const auto& l = out.spectrum.lambdas;
  out.concurrence = clip_unit(std::max(l[0] - l[1] - l[2] - l[3], 0.0), "Wootters concurrence");
  return out;
}

double amplitude_concurrence(const CoherentPairSpec& spec) {
  if (spec.n_norm() < kZeroStateThreshold * kZeroStateThreshold) {
    throw ZeroState("amplitude_concurrence: superposition cancels");
  }
  const Complex v = spec.lambda_coef() * spec.gamma_coef() / spec.n_norm() * (spec.alpha() - spec.alpha_p()) *
                    (spec.beta() - spec.beta_p());
  return clip_unit(2.0 * std::abs(v), "amplitude-form concurrence");
}

}  // namespace qconc
