#pragma once

// Numerical convex-roof concurrence: the minimum, over pure-state ensembles
// realizing rho, of the weighted average pure-state concurrence. Serves as an
// oracle independent of the closed forms.

#include <cstdint>
#include <vector>

#include "qconc/states.hpp"

namespace qconc {

/// Dense m x r complex matrix, row-major.
class CoefficientMatrix {
 public:
  CoefficientMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CoefficientMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// ||U^dagger U - I||_max
  double orthonormality_defect() const;

  /// Modified Gram-Schmidt on the columns.
  void orthonormalize_columns();

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> data_;
};

struct RoofConfig {
  int ensemble_size = 0;  // 0 selects 2 x rank
  int restarts = 64;
  int iterations = 500;
  double step_scale = 0.1;
  std::uint64_t seed = 0;
  double tolerance = 1e-4;
  int threads = 1;
};

struct RoofResult {
  double c_estimate = 0.0;
  Decomposition best_decomposition;
  int iterations_used = 0;
  bool converged = false;
};

/// Ensemble |w_j> = sum_i conj(u_ji) sqrt(nu_i) |v_i>, where (nu_i, v_i) is
/// the spectral decomposition of rho with rank r = u.cols(). Components are
/// normalized and weighted by ||w_j||^2; components of weight below 1e-14 are
/// omitted. Throws NonOrthonormalCoefficients when U^dagger U differs from
/// the identity by more than 1e-10, and PreconditionFailed when u.cols() does
/// not match the rank.
Decomposition decomposition_from_unitary(const DensityMatrix4& rho, const CoefficientMatrix& u);

/// Weighted average concurrence sum_j p_j C(psi_j).
double average_concurrence(const Decomposition& dec);

/// Random-restart local search over the coefficient matrix. Deterministic for
/// a fixed seed regardless of RoofConfig::threads.
RoofResult convex_roof_concurrence(const DensityMatrix4& rho, const RoofConfig& cfg = {});

/// Mixture of `rank` random pure states with flat Dirichlet weights, resampled
/// until exactly `rank` eigenvalues exceed 1e-6. DomainError unless 1 <= rank <= 4.
DensityMatrix4 random_density(int rank, std::uint64_t seed);

}  // namespace qconc
