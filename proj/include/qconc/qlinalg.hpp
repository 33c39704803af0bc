#pragma once

// Dense complex arithmetic on the two-qubit space.
//
// Every vector and matrix is indexed over the computational basis in the
// fixed order |00>, |01>, |10>, |11>.

#include <array>
#include <complex>
#include <cstddef>

namespace qconc {

using Complex = std::complex<double>;

/// Amplitudes of a (possibly unnormalized) two-qubit ket.
using Amplitudes = std::array<Complex, 4>;

/// Amplitudes of a single-qubit ket over |0>, |1>.
using QubitAmplitudes = std::array<Complex, 2>;

bool is_finite(Complex z);

double norm_squared(const Amplitudes& v);
double norm(const Amplitudes& v);

/// <x|y>, antilinear in the first argument.
Complex inner(const Amplitudes& x, const Amplitudes& y);

Amplitudes operator+(const Amplitudes& x, const Amplitudes& y);
Amplitudes operator-(const Amplitudes& x, const Amplitudes& y);
Amplitudes operator*(Complex s, const Amplitudes& x);

/// Tensor product of two single-qubit kets.
Amplitudes kron(const QubitAmplitudes& first, const QubitAmplitudes& second);

/// Maximum componentwise modulus of x - y.
double max_abs_diff(const Amplitudes& x, const Amplitudes& y);

/// 4x4 complex matrix, row-major.
class CMatrix4 {
 public:
  static constexpr std::size_t kDim = 4;

  CMatrix4() { entries_.fill(Complex{}); }

  static CMatrix4 identity();
  static CMatrix4 diagonal(const std::array<double, 4>& d);
  /// |x><y|
  static CMatrix4 outer(const Amplitudes& x, const Amplitudes& y);

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * kDim + col]; }
  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * kDim + col]; }

  CMatrix4 adjoint() const;
  CMatrix4 conjugate() const;
  Complex trace() const;
  Amplitudes column(std::size_t col) const;

  /// All entries finite.
  bool finite() const;

  CMatrix4& operator+=(const CMatrix4& other);
  CMatrix4& operator-=(const CMatrix4& other);
  CMatrix4& operator*=(Complex s);

  friend CMatrix4 operator+(CMatrix4 a, const CMatrix4& b) { return a += b; }
  friend CMatrix4 operator-(CMatrix4 a, const CMatrix4& b) { return a -= b; }
  friend CMatrix4 operator*(Complex s, CMatrix4 a) { return a *= s; }
  friend CMatrix4 operator*(const CMatrix4& a, const CMatrix4& b);
  friend Amplitudes operator*(const CMatrix4& a, const Amplitudes& x);

 private:
  std::array<Complex, kDim * kDim> entries_;
};

double max_abs_diff(const CMatrix4& a, const CMatrix4& b);

/// ||M - M^dagger||_max
double hermiticity_defect(const CMatrix4& m);

/// Spectrum of a Hermitian matrix. eigenvalues[k] belongs to eigenvectors[k];
/// eigenvalues are sorted descending and eigenvectors are orthonormal.
struct HermEigenSystem {
  std::array<double, 4> eigenvalues{};
  std::array<Amplitudes, 4> eigenvectors{};

  /// V diag(eigenvalues) V^dagger
  CMatrix4 reconstruct() const;
};

inline constexpr double kHermitianTolerance = 1e-9;
inline constexpr int kDefaultMaxSweeps = 200;

/// Cyclic Jacobi diagonalization.
///
/// Throws NonHermitianInput when ||M - M^dagger||_max exceeds 1e-9 and
/// ConvergenceFailure when the off-diagonal mass has not vanished after
/// max_sweeps sweeps. The input is symmetrized before iterating.
HermEigenSystem herm_eigensystem(const CMatrix4& m, int max_sweeps = kDefaultMaxSweeps);

/// Square root of a Hermitian positive semidefinite matrix. Eigenvalues in
/// [-1e-8, 0) are treated as round-off and clamped to zero; anything more
/// negative raises NegativeSpectrum.
CMatrix4 matrix_sqrt_psd(const CMatrix4& m);

/// Singular values of an arbitrary 4x4 complex matrix, descending.
///
/// One-sided (Hestenes) Jacobi: small singular values keep absolute accuracy
/// of order eps * ||M||, with no square root of a computed spectrum involved.
std::array<double, 4> singular_values(const CMatrix4& m, int max_sweeps = kDefaultMaxSweeps);

/// The matrix sigma_y (x) sigma_y.
CMatrix4 sigma_yy();

/// (sigma_y (x) sigma_y) v^*. For (a, b, c, d) this is (-d*, c*, b*, -a*).
Amplitudes spin_flip(const Amplitudes& v);

/// (sigma_y (x) sigma_y) M^* (sigma_y (x) sigma_y).
CMatrix4 spin_flip(const CMatrix4& m);

}  // namespace qconc
