#include "qconc/convex_roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "qconc/error.hpp"
#include "qconc/measures.hpp"
#include "qconc/random.hpp"

namespace qconc {

namespace {

constexpr double kOrthonormalTolerance = 1e-10;
constexpr double kMinComponentWeight = 1e-14;
constexpr int kRejectionsBeforeHalving = 10;
constexpr int kStallWindow = 50;

// Symmetric bilinear form with B(x, x) = 2(ad - bc).
Complex spin_flip_form(const Amplitudes& x, const Amplitudes& y) {
  return x[0] * y[3] + x[3] * y[0] - x[1] * y[2] - x[2] * y[1];
}

struct Spectral {
  std::vector<Amplitudes> weighted;  // sqrt(nu_i) v_i
};

Spectral spectral_factor(const DensityMatrix4& rho) {
  const HermEigenSystem eig = herm_eigensystem(rho.matrix());
  Spectral s;
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.eigenvalues[k] < kRankCutoff) continue;
    s.weighted.push_back(Complex{std::sqrt(eig.eigenvalues[k])} * eig.eigenvectors[k]);
  }
  return s;
}

// Average concurrence of the ensemble generated by u, evaluated through the
// r x r matrix tau_ik = B(W_i, W_k): the unnormalized component j has
// 2(ad - bc) = sum_ik conj(u_ji) conj(u_jk) tau_ik.
class Objective {
 public:
  explicit Objective(const Spectral& s) : r_(s.weighted.size()), tau_(r_ * r_) {
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t k = 0; k < r_; ++k) tau_[i * r_ + k] = spin_flip_form(s.weighted[i], s.weighted[k]);
    }
  }

  double operator()(const CoefficientMatrix& u) const {
    double total = 0.0;
    for (std::size_t j = 0; j < u.rows(); ++j) {
      Complex acc{};
      for (std::size_t i = 0; i < r_; ++i) {
        Complex row{};
        for (std::size_t k = 0; k < r_; ++k) row += tau_[i * r_ + k] * std::conj(u(j, k));
        acc += std::conj(u(j, i)) * row;
      }
      total += std::abs(acc);
    }
    return total;
  }

 private:
  std::size_t r_;
  std::vector<Complex> tau_;
};

CoefficientMatrix random_isometry(Rng& rng, std::size_t m, std::size_t r) {
  CoefficientMatrix u(m, r);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < r; ++k) u(i, k) = complex_gaussian(rng);
  }
  u.orthonormalize_columns();
  return u;
}

// (I + step K) U with K = (Z - Z^dagger)/2 for a complex Gaussian m x m Z,
// re-orthonormalized.
CoefficientMatrix perturb(const CoefficientMatrix& u, double step, Rng& rng) {
  const std::size_t m = u.rows();
  std::vector<Complex> z(m * m);
  for (auto& e : z) e = complex_gaussian(rng);

  CoefficientMatrix out = u;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Complex k = 0.5 * (z[a * m + b] - std::conj(z[b * m + a])) * step;
      for (std::size_t c = 0; c < u.cols(); ++c) out(a, c) += k * u(b, c);
    }
  }
  out.orthonormalize_columns();
  return out;
}

struct RestartOutcome {
  double value = std::numeric_limits<double>::infinity();
  CoefficientMatrix u{0, 0};
  int iterations = 0;
  bool converged = false;
};

RestartOutcome run_restart(const Objective& objective, std::size_t m, std::size_t r, const RoofConfig& cfg,
                           std::uint64_t restart) {
  Rng rng = make_rng(cfg.seed, restart);
  RestartOutcome out;
  out.u = random_isometry(rng, m, r);
  out.value = objective(out.u);

  double step = cfg.step_scale;
  int rejections = 0;
  int stall = 0;
  for (int it = 0; it < cfg.iterations; ++it) {
    ++out.iterations;
    CoefficientMatrix trial = perturb(out.u, step, rng);
    const double value = objective(trial);
    double improvement = 0.0;
    if (value < out.value) {
      improvement = out.value - value;
      out.value = value;
      out.u = std::move(trial);
      rejections = 0;
    } else if (++rejections >= kRejectionsBeforeHalving) {
      step *= 0.5;
      rejections = 0;
    }
    stall = improvement < cfg.tolerance ? stall + 1 : 0;
    if (stall >= kStallWindow) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace

CoefficientMatrix CoefficientMatrix::identity(std::size_t n) {
  CoefficientMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = 1.0;
  return u;
}

double CoefficientMatrix::orthonormality_defect() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < cols_; ++a) {
    for (std::size_t b = 0; b < cols_; ++b) {
      Complex g{};
      for (std::size_t i = 0; i < rows_; ++i) g += std::conj((*this)(i, a)) * (*this)(i, b);
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

void CoefficientMatrix::orthonormalize_columns() {
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex proj{};
      for (std::size_t i = 0; i < rows_; ++i) proj += std::conj((*this)(i, prev)) * (*this)(i, c);
      for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) -= proj * (*this)(i, prev);
    }
    double n2 = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) n2 += std::norm((*this)(i, c));
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) *= inv;
  }
}

Decomposition decomposition_from_unitary(const DensityMatrix4& rho, const CoefficientMatrix& u) {
  const Spectral s = spectral_factor(rho);
  if (u.cols() != s.weighted.size()) {
    throw PreconditionFailed("decomposition_from_unitary: coefficient matrix has " + std::to_string(u.cols()) +
                             " columns but rho has rank " + std::to_string(s.weighted.size()));
  }
  if (u.rows() < u.cols()) throw NonOrthonormalCoefficients("decomposition_from_unitary: fewer rows than columns");
  const double defect = u.orthonormality_defect();
  if (!(defect <= kOrthonormalTolerance)) {
    throw NonOrthonormalCoefficients("decomposition_from_unitary: U^dagger U deviates from I by " +
                                     std::to_string(defect));
  }

  Decomposition dec;
  for (std::size_t j = 0; j < u.rows(); ++j) {
    Amplitudes w{};
    for (std::size_t i = 0; i < u.cols(); ++i) w = w + std::conj(u(j, i)) * s.weighted[i];
    const double weight = norm_squared(w);
    if (weight < kMinComponentWeight) continue;
    dec.weights.push_back(weight);
    dec.states.emplace_back(w);
  }
  return dec;
}

double average_concurrence(const Decomposition& dec) {
  double total = 0.0;
  for (std::size_t j = 0; j < dec.weights.size(); ++j) total += dec.weights[j] * concurrence_pure(dec.states[j]);
  return total;
}

RoofResult convex_roof_concurrence(const DensityMatrix4& rho, const RoofConfig& cfg) {
  if (cfg.restarts < 1 || cfg.iterations < 1) throw DomainError("RoofConfig: restarts and iterations must be >= 1");

  const Spectral s = spectral_factor(rho);
  const std::size_t r = s.weighted.size();
  const std::size_t m = cfg.ensemble_size > 0 ? static_cast<std::size_t>(cfg.ensemble_size) : 2 * r;
  if (m < r) throw DomainError("RoofConfig: ensemble_size below the rank of rho");
  const Objective objective(s);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  const auto worker = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < outcomes.size(); k += stride) outcomes[k] = run_restart(objective, m, r, cfg, k);
  };
  const std::size_t threads = static_cast<std::size_t>(std::clamp(cfg.threads, 1, cfg.restarts));
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
  }

  // Minimum value, ties resolved by the lowest restart index.
  std::size_t best = 0;
  RoofResult result;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k].value < outcomes[best].value) best = k;
    result.iterations_used += outcomes[k].iterations;
  }
  result.best_decomposition = decomposition_from_unitary(rho, outcomes[best].u);
  result.c_estimate = average_concurrence(result.best_decomposition);
  result.converged = outcomes[best].converged;
  return result;
}

DensityMatrix4 random_density(int rank, std::uint64_t seed) {
  if (rank < 1 || rank > 4) throw DomainError("random_density: rank must lie in 1..4");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng = make_rng(seed, attempt);
    const std::vector<double> w = random_simplex(rng, static_cast<std::size_t>(rank));
    CMatrix4 m;
    for (int i = 0; i < rank; ++i) m += Complex{w[static_cast<std::size_t>(i)]} * random_pure(rng).projector();
    const HermEigenSystem eig = herm_eigensystem(m);
    const auto above = std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(), [](double v) { return v > 1e-6; });
    if (above == rank) return DensityMatrix4(m);
  }
}

}  // namespace qconc
