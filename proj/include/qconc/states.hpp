#pragma once

// Two-qubit pure states, density matrices, pure-state decompositions and the
// SU(2) coherent-state constructions built on top of them.

#include <vector>

#include "qconc/qlinalg.hpp"

namespace qconc {

inline constexpr double kZeroStateThreshold = 1e-14;

/// Normalized two-qubit pure state a|00> + b|01> + c|10> + d|11>.
class PureTwoQubit {
 public:
  /// Normalizes the given amplitudes; throws ZeroState when their norm is
  /// below 1e-14 and DomainError on non-finite input.
  explicit PureTwoQubit(const Amplitudes& raw);

  const Amplitudes& amplitudes() const { return amps_; }
  Complex a() const { return amps_[0]; }
  Complex b() const { return amps_[1]; }
  Complex c() const { return amps_[2]; }
  Complex d() const { return amps_[3]; }

  /// Euclidean norm of the amplitudes before normalization.
  double norm() const { return norm_; }

  /// |psi><psi|
  CMatrix4 projector() const { return CMatrix4::outer(amps_, amps_); }

 private:
  Amplitudes amps_;
  double norm_;
};

PureTwoQubit make_pure(Complex a, Complex b, Complex c, Complex d);

/// (sigma_y (x) sigma_y)|psi^*>. The stored pre-normalization norm is kept.
PureTwoQubit spin_flip_pure(const PureTwoQubit& psi);

/// Validated two-qubit density matrix: Hermitian within 1e-10, unit trace
/// within 1e-10, no eigenvalue below -1e-10.
class DensityMatrix4 {
 public:
  /// Throws InvalidDensity when any invariant fails.
  explicit DensityMatrix4(const CMatrix4& m);

  const CMatrix4& matrix() const { return m_; }

 private:
  CMatrix4 m_;
};

/// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y)
CMatrix4 spin_flip_density(const DensityMatrix4& rho);

/// Ensemble {p_i, |psi_i>}. Weights are nonnegative and sum to one within
/// 1e-12; construction through make_decomposition enforces this.
struct Decomposition {
  std::vector<double> weights;
  std::vector<PureTwoQubit> states;
};

/// Throws InvalidDecomposition on size mismatch, an empty ensemble, a
/// negative weight or a weight sum off by more than 1e-12.
Decomposition make_decomposition(std::vector<double> weights, std::vector<PureTwoQubit> states);

DensityMatrix4 density_from_decomposition(const Decomposition& dec);

/// Eigenvalue cutoff below which a spectral component counts as absent.
inline constexpr double kRankCutoff = 1e-12;

/// Spectral decomposition of rho. Components with eigenvalue below 1e-12 are
/// dropped and the remaining weights are renormalized.
Decomposition eigendecompose_density(const DensityMatrix4& rho);

/// Number of eigenvalues of rho above kRankCutoff.
int numerical_rank(const DensityMatrix4& rho);

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
QubitAmplitudes su2_coherent_qubit(double theta, double phi);

/// Spin-j SU(2) coherent state |gamma, j> over |n, j>, n = 0..2j.
struct SpinJCoherent {
  int two_j = 0;  // 2j
  Complex gamma;
  std::vector<Complex> amplitudes;  // 2j + 1 entries

  double j() const { return 0.5 * two_j; }
};

inline constexpr int kMaxTwoJ = 20;

/// Builds |gamma, j> by repeated action of the raising operator on the lowest
/// weight state, normalized by (1 + |gamma|^2)^{-j}. two_j must lie in
/// [0, 20]; negative values raise DomainError, larger ones SpinTooLarge.
SpinJCoherent su2_coherent_spin_j(Complex gamma, int two_j);

/// Single-qubit coherent ket (|0> + z|1>) / sqrt(1 + |z|^2).
QubitAmplitudes coherent_ket(Complex z);

/// Entangled superposition of two products of single-qubit coherent states,
///   cos(theta)|alpha>|beta> + e^{i phi} sin(theta)|alpha'>|beta'>,
/// together with the derived mixing coefficients
///   lambda = cos(theta) / sqrt((1+|alpha|^2)(1+|beta|^2)),
///   gamma  = e^{i phi} sin(theta) / sqrt((1+|alpha'|^2)(1+|beta'|^2)),
/// and the squared norm N of the unnormalized amplitudes.
class CoherentPairSpec {
 public:
  /// Throws DomainError on non-finite parameters.
  CoherentPairSpec(Complex alpha, Complex beta, Complex alpha_p, Complex beta_p, double theta, double phi);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  Complex alpha_p() const { return alpha_p_; }
  Complex beta_p() const { return beta_p_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

  Complex lambda_coef() const { return lambda_; }
  Complex gamma_coef() const { return gamma_; }
  double n_norm() const { return n_norm_; }

  /// a = lambda + gamma, b = beta lambda + beta' gamma,
  /// c = alpha lambda + alpha' gamma, d = alpha beta lambda + alpha' beta' gamma.
  Amplitudes raw_amplitudes() const;

 private:
  Complex alpha_, beta_, alpha_p_, beta_p_;
  double theta_, phi_;
  Complex lambda_, gamma_;
  double n_norm_;
};

/// The normalized state raw_amplitudes() / sqrt(N). Throws ZeroState when the
/// two branches cancel.
PureTwoQubit entangled_coherent_pure(const CoherentPairSpec& spec);

/// cos and sin that return exact 0 and +-1 at integer multiples of pi/2.
struct CosSin {
  double cos;
  double sin;
};
CosSin cos_sin_snapped(double angle);

}  // namespace qconc
