#pragma once

// Shared fixtures for the unit tests. The Eigen-based helpers are reference
// implementations that share no code with the library.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "qconc/qlinalg.hpp"
#include "qconc/random.hpp"
#include "qconc/states.hpp"

namespace qtest {

using qconc::Amplitudes;
using qconc::CMatrix4;
using qconc::Complex;
using EMat = Eigen::Matrix4cd;

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

inline Amplitudes phi_plus() { return {kInvSqrt2, 0, 0, kInvSqrt2}; }
inline Amplitudes phi_minus() { return {kInvSqrt2, 0, 0, -kInvSqrt2}; }
inline Amplitudes psi_plus() { return {0, kInvSqrt2, kInvSqrt2, 0}; }
inline Amplitudes psi_minus() { return {0, kInvSqrt2, -kInvSqrt2, 0}; }
inline Amplitudes basis(std::size_t k) {
  Amplitudes v{};
  v[k] = 1.0;
  return v;
}

inline EMat to_eigen(const CMatrix4& m) {
  EMat e;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) e(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  }
  return e;
}

inline CMatrix4 from_eigen(const EMat& e) {
  CMatrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
  }
  return m;
}

inline CMatrix4 random_hermitian(qconc::Rng& rng) {
  CMatrix4 a;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) a(r, c) = qconc::complex_gaussian(rng);
  }
  return a + a.adjoint();
}

inline CMatrix4 random_psd(qconc::Rng& rng) {
  CMatrix4 a;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) a(r, c) = qconc::complex_gaussian(rng);
  }
  return a * a.adjoint();
}

inline CMatrix4 werner(double p) {
  return Complex{p} * CMatrix4::outer(psi_minus(), psi_minus()) + Complex{(1.0 - p) / 4.0} * CMatrix4::identity();
}

/// Wootters concurrence from the non-Hermitian product rho * rho_tilde,
/// diagonalized by Eigen's general complex solver.
inline double wootters_reference(const CMatrix4& rho) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const EMat r = to_eigen(rho);
  const EMat tilde = yy * r.conjugate() * yy;
  Eigen::ComplexEigenSolver<EMat> solver(r * tilde);
  std::array<double, 4> l{};
  for (int k = 0; k < 4; ++k) l[static_cast<std::size_t>(k)] = std::sqrt(std::max(0.0, solver.eigenvalues()(k).real()));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

/// Binomial-formula spin-j coherent amplitudes.
inline std::vector<Complex> spin_j_reference(Complex gamma, int two_j) {
  std::vector<Complex> out;
  const double pref = std::pow(1.0 + std::norm(gamma), -0.5 * two_j);
  for (int n = 0; n <= two_j; ++n) {
    const double binom = std::exp(std::lgamma(two_j + 1.0) - std::lgamma(n + 1.0) - std::lgamma(two_j - n + 1.0));
    out.push_back(pref * std::sqrt(binom) * std::pow(gamma, n));
  }
  return out;
}

/// Haar-like single-qubit unitary from a normalized 2x2 Gaussian via QR.
inline Eigen::Matrix2cd random_unitary2(qconc::Rng& rng) {
  Eigen::Matrix2cd z;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) z(r, c) = qconc::complex_gaussian(rng);
  }
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
  return qr.householderQ();
}

}  // namespace qtest
