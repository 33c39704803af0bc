#include "qconc/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qconc/error.hpp"

namespace qconc {

namespace {

constexpr std::size_t N = CMatrix4::kDim;

// Off-diagonal entries below this fraction of ||M||_F are treated as zero.
constexpr double kJacobiSkip = 1e-20;

double frobenius(const CMatrix4& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) s += std::norm(m(r, c));
  }
  return std::sqrt(s);
}

// Rotation parameters (c, s) that annihilate the off-diagonal entry of the
// real symmetric 2x2 block [[app, r], [r, aqq]] with r > 0.
std::pair<double, double> jacobi_rotation(double app, double aqq, double r) {
  const double zeta = (aqq - app) / (2.0 * r);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c};
}

}  // namespace

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double norm_squared(const Amplitudes& v) {
  return std::accumulate(v.begin(), v.end(), 0.0, [](double acc, Complex z) { return acc + std::norm(z); });
}

double norm(const Amplitudes& v) { return std::sqrt(norm_squared(v)); }

Complex inner(const Amplitudes& x, const Amplitudes& y) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

Amplitudes operator+(const Amplitudes& x, const Amplitudes& y) {
  Amplitudes r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] + y[i];
  return r;
}

Amplitudes operator-(const Amplitudes& x, const Amplitudes& y) {
  Amplitudes r;
  for (std::size_t i = 0; i < N; ++i) r[i] = x[i] - y[i];
  return r;
}

Amplitudes operator*(Complex s, const Amplitudes& x) {
  Amplitudes r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * x[i];
  return r;
}

Amplitudes kron(const QubitAmplitudes& first, const QubitAmplitudes& second) {
  return {first[0] * second[0], first[0] * second[1], first[1] * second[0], first[1] * second[1]};
}

double max_abs_diff(const Amplitudes& x, const Amplitudes& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

CMatrix4 CMatrix4::identity() { return diagonal({1.0, 1.0, 1.0, 1.0}); }

CMatrix4 CMatrix4::diagonal(const std::array<double, 4>& d) {
  CMatrix4 m;
  for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
  return m;
}

CMatrix4 CMatrix4::outer(const Amplitudes& x, const Amplitudes& y) {
  CMatrix4 m;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) m(r, c) = x[r] * std::conj(y[c]);
  }
  return m;
}

CMatrix4 CMatrix4::adjoint() const {
  CMatrix4 m;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
  }
  return m;
}

CMatrix4 CMatrix4::conjugate() const {
  CMatrix4 m;
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = std::conj(entries_[i]);
  return m;
}

Complex CMatrix4::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
  return t;
}

Amplitudes CMatrix4::column(std::size_t col) const {
  return {(*this)(0, col), (*this)(1, col), (*this)(2, col), (*this)(3, col)};
}

bool CMatrix4::finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Complex z) { return is_finite(z); });
}

CMatrix4& CMatrix4::operator+=(const CMatrix4& other) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

CMatrix4& CMatrix4::operator-=(const CMatrix4& other) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

CMatrix4& CMatrix4::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

CMatrix4 operator*(const CMatrix4& a, const CMatrix4& b) {
  CMatrix4 m;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t k = 0; k < N; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
    }
  }
  return m;
}

Amplitudes operator*(const CMatrix4& a, const Amplitudes& x) {
  Amplitudes y{};
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) y[r] += a(r, c) * x[c];
  }
  return y;
}

double max_abs_diff(const CMatrix4& a, const CMatrix4& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  }
  return m;
}

double hermiticity_defect(const CMatrix4& m) { return max_abs_diff(m, m.adjoint()); }

CMatrix4 HermEigenSystem::reconstruct() const {
  CMatrix4 m;
  for (std::size_t k = 0; k < N; ++k) {
    m += Complex{eigenvalues[k]} * CMatrix4::outer(eigenvectors[k], eigenvectors[k]);
  }
  return m;
}

HermEigenSystem herm_eigensystem(const CMatrix4& m, int max_sweeps) {
  if (!m.finite()) throw NonHermitianInput("herm_eigensystem: non-finite entry");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance) {
    throw NonHermitianInput("herm_eigensystem: ||M - M^dagger||_max = " + std::to_string(defect));
  }

  CMatrix4 a = 0.5 * (m + m.adjoint());
  CMatrix4 v = CMatrix4::identity();
  const double skip = kJacobiSkip * frobenius(a);

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= skip) continue;
        converged = false;

        // G = diag(1, e^{-i phi}) on (p, q) followed by a real rotation, so
        // that (G^dagger A G)_pq = 0.
        const Complex phase = apq / r;
        const auto [c, s] = jacobi_rotation(a(p, p).real(), a(q, q).real(), r);
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < N; ++k) {  // A <- A G, V <- V G
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * c + akq * gqp;
          a(k, q) = akp * s + akq * gqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * c + vkq * gqp;
          v(k, q) = vkp * s + vkq * gqq;
        }
        for (std::size_t k = 0; k < N; ++k) {  // A <- G^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = s * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) {
    throw ConvergenceFailure("herm_eigensystem: no convergence after " + std::to_string(max_sweeps) + " sweeps");
  }

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  HermEigenSystem out;
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    Amplitudes vec = v.column(order[k]);
    out.eigenvectors[k] = Complex{1.0 / norm(vec)} * vec;
  }
  return out;
}

CMatrix4 matrix_sqrt_psd(const CMatrix4& m) {
  const HermEigenSystem eig = herm_eigensystem(m);
  // Eigenvalues this small are below the solver's resolution; their square
  // roots would turn round-off into errors of order sqrt(eps).
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
  CMatrix4 s;
  for (std::size_t k = 0; k < N; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda < -1e-8) {
      throw NegativeSpectrum("matrix_sqrt_psd: eigenvalue " + std::to_string(lambda) + " below -1e-8");
    }
    if (lambda <= floor) continue;
    s += Complex{std::sqrt(lambda)} * CMatrix4::outer(eig.eigenvectors[k], eig.eigenvectors[k]);
  }
  return s;
}

std::array<double, 4> singular_values(const CMatrix4& m, int max_sweeps) {
  if (!m.finite()) throw DomainError("singular_values: non-finite entry");
  std::array<Amplitudes, 4> cols{m.column(0), m.column(1), m.column(2), m.column(3)};
  const double skip = kJacobiSkip * frobenius(m);

  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double alpha = norm_squared(cols[p]);
        const double beta = norm_squared(cols[q]);
        const Complex gamma = inner(cols[p], cols[q]);
        const double g = std::abs(gamma);
        if (g <= skip * skip || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        converged = false;

        const Complex phase = gamma / g;
        const auto [c, s] = jacobi_rotation(alpha, beta, g);
        for (std::size_t k = 0; k < N; ++k) {
          const Complex xp = cols[p][k];
          const Complex xq = cols[q][k] * std::conj(phase);
          cols[p][k] = c * xp - s * xq;
          cols[q][k] = s * xp + c * xq;
        }
      }
    }
  }
  if (!converged) {
    throw ConvergenceFailure("singular_values: no convergence after " + std::to_string(max_sweeps) + " sweeps");
  }

  std::array<double, 4> sv{};
  for (std::size_t k = 0; k < N; ++k) sv[k] = norm(cols[k]);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

CMatrix4 sigma_yy() {
  CMatrix4 y;
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

Amplitudes spin_flip(const Amplitudes& v) {
  return {-std::conj(v[3]), std::conj(v[2]), std::conj(v[1]), -std::conj(v[0])};
}

CMatrix4 spin_flip(const CMatrix4& m) {
  // sigma_y (x) sigma_y maps basis index i to 3 - i with sign -1 for i in {0, 3};
  // the two signs cancel whenever both indices fall in the same class.
  constexpr std::array<double, 4> sign{-1.0, 1.0, 1.0, -1.0};
  CMatrix4 out;
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      out(r, c) = sign[r] * sign[c] * std::conj(m(3 - r, 3 - c));
    }
  }
  return out;
}

}  // namespace qconc
