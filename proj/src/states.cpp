#include "qconc/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qconc/error.hpp"

namespace qconc {

namespace {

constexpr double kDensityTolerance = 1e-10;
constexpr double kWeightSumTolerance = 1e-12;

Complex unit_phase(double phi) {
  const CosSin cs = cos_sin_snapped(phi);
  return {cs.cos, cs.sin};
}

}  // namespace

PureTwoQubit::PureTwoQubit(const Amplitudes& raw) {
  for (Complex z : raw) {
    if (!is_finite(z)) throw DomainError("PureTwoQubit: non-finite amplitude");
  }
  norm_ = qconc::norm(raw);
  if (norm_ < kZeroStateThreshold) throw ZeroState("PureTwoQubit: amplitudes vanish");
  amps_ = Complex{1.0 / norm_} * raw;
}

PureTwoQubit make_pure(Complex a, Complex b, Complex c, Complex d) { return PureTwoQubit({a, b, c, d}); }

PureTwoQubit spin_flip_pure(const PureTwoQubit& psi) {
  // The flip is unitary up to conjugation, so renormalizing is a no-op apart
  // from round-off; restore the recorded norm of the input.
  return PureTwoQubit(Complex{psi.norm()} * spin_flip(psi.amplitudes()));
}

DensityMatrix4::DensityMatrix4(const CMatrix4& m) : m_(m) {
  if (!m.finite()) throw InvalidDensity("density matrix: non-finite entry");
  const double defect = hermiticity_defect(m);
  if (defect > kDensityTolerance) {
    throw InvalidDensity("density matrix: not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kDensityTolerance) {
    throw InvalidDensity("density matrix: trace " + std::to_string(tr) + " differs from 1");
  }
  const HermEigenSystem eig = herm_eigensystem(m);
  if (eig.eigenvalues[3] < -kDensityTolerance) {
    throw InvalidDensity("density matrix: negative eigenvalue " + std::to_string(eig.eigenvalues[3]));
  }
}

CMatrix4 spin_flip_density(const DensityMatrix4& rho) { return spin_flip(rho.matrix()); }

Decomposition make_decomposition(std::vector<double> weights, std::vector<PureTwoQubit> states) {
  if (weights.empty() || weights.size() != states.size()) {
    throw InvalidDecomposition("decomposition: weights and states must be nonempty and of equal length");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidDecomposition("decomposition: negative or non-finite weight");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw InvalidDecomposition("decomposition: weights sum to " + std::to_string(total));
  }
  return Decomposition{std::move(weights), std::move(states)};
}

DensityMatrix4 density_from_decomposition(const Decomposition& dec) {
  if (dec.weights.empty() || dec.weights.size() != dec.states.size()) {
    throw InvalidDecomposition("decomposition: weights and states must be nonempty and of equal length");
  }
  CMatrix4 m;
  for (std::size_t i = 0; i < dec.weights.size(); ++i) {
    m += Complex{dec.weights[i]} * dec.states[i].projector();
  }
  try {
    return DensityMatrix4(m);
  } catch (const InvalidDensity& e) {
    throw InvalidDecomposition(std::string("decomposition: ") + e.what());
  }
}

Decomposition eigendecompose_density(const DensityMatrix4& rho) {
  const HermEigenSystem eig = herm_eigensystem(rho.matrix());
  Decomposition dec;
  double kept = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.eigenvalues[k] < kRankCutoff) continue;
    dec.weights.push_back(eig.eigenvalues[k]);
    dec.states.emplace_back(eig.eigenvectors[k]);
    kept += eig.eigenvalues[k];
  }
  for (double& w : dec.weights) w /= kept;
  return dec;
}

int numerical_rank(const DensityMatrix4& rho) {
  const HermEigenSystem eig = herm_eigensystem(rho.matrix());
  int r = 0;
  for (double v : eig.eigenvalues) r += v >= kRankCutoff ? 1 : 0;
  return r;
}

CosSin cos_sin_snapped(double angle) {
  constexpr double kQuarter = std::numbers::pi / 2.0;
  const double turns = std::nearbyint(angle / kQuarter);
  if (std::abs(angle - turns * kQuarter) <= 4.0 * 2.2204460492503131e-16 * std::max(1.0, std::abs(angle))) {
    switch (static_cast<long long>(std::fmod(std::fmod(turns, 4.0) + 4.0, 4.0))) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return {std::cos(angle), std::sin(angle)};
}

QubitAmplitudes su2_coherent_qubit(double theta, double phi) {
  const CosSin half = cos_sin_snapped(0.5 * theta);
  return {Complex{half.cos}, unit_phase(phi) * half.sin};
}

SpinJCoherent su2_coherent_spin_j(Complex gamma, int two_j) {
  if (two_j < 0) throw DomainError("su2_coherent_spin_j: 2j must be nonnegative");
  if (two_j > kMaxTwoJ) throw SpinTooLarge("su2_coherent_spin_j: 2j = " + std::to_string(two_j) + " exceeds 20");
  if (!is_finite(gamma)) throw DomainError("su2_coherent_spin_j: non-finite gamma");

  // exp(gamma J+)|j,-j> = sum_n gamma^n / n! J+^n |j,-j>, where
  // J+|j,m> = sqrt((j-m)(j+m+1))|j,m+1>. With n = j + m the ladder factor
  // from level n to n+1 is sqrt((2j-n)(n+1)).
  SpinJCoherent out;
  out.two_j = two_j;
  out.gamma = gamma;
  out.amplitudes.resize(static_cast<std::size_t>(two_j) + 1);
  const double prefactor = std::pow(1.0 + std::norm(gamma), -0.5 * two_j);
  Complex coeff = prefactor;
  out.amplitudes[0] = coeff;
  for (int n = 0; n < two_j; ++n) {
    const double ladder = std::sqrt(static_cast<double>(two_j - n) * (n + 1));
    coeff *= gamma * ladder / static_cast<double>(n + 1);
    out.amplitudes[static_cast<std::size_t>(n) + 1] = coeff;
  }
  return out;
}

QubitAmplitudes coherent_ket(Complex z) {
  const double s = 1.0 / std::sqrt(1.0 + std::norm(z));
  return {Complex{s}, s * z};
}

CoherentPairSpec::CoherentPairSpec(Complex alpha, Complex beta, Complex alpha_p, Complex beta_p, double theta,
                                   double phi)
    : alpha_(alpha), beta_(beta), alpha_p_(alpha_p), beta_p_(beta_p), theta_(theta), phi_(phi) {
  if (!is_finite(alpha) || !is_finite(beta) || !is_finite(alpha_p) || !is_finite(beta_p) || !std::isfinite(theta) ||
      !std::isfinite(phi)) {
    throw DomainError("CoherentPairSpec: non-finite parameter");
  }
  const CosSin t = cos_sin_snapped(theta);
  lambda_ = t.cos / std::sqrt((1.0 + std::norm(alpha)) * (1.0 + std::norm(beta)));
  gamma_ = unit_phase(phi) * t.sin / std::sqrt((1.0 + std::norm(alpha_p)) * (1.0 + std::norm(beta_p)));
  n_norm_ = norm_squared(raw_amplitudes());
}

Amplitudes CoherentPairSpec::raw_amplitudes() const {
  return {lambda_ + gamma_, beta_ * lambda_ + beta_p_ * gamma_, alpha_ * lambda_ + alpha_p_ * gamma_,
          alpha_ * beta_ * lambda_ + alpha_p_ * beta_p_ * gamma_};
}

PureTwoQubit entangled_coherent_pure(const CoherentPairSpec& spec) {
  if (spec.n_norm() < kZeroStateThreshold * kZeroStateThreshold) {
    throw ZeroState("entangled_coherent_pure: superposition cancels");
  }
  return PureTwoQubit(spec.raw_amplitudes());
}

}  // namespace qconc
