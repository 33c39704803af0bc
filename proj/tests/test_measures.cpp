#include <doctest.h>

#include "qconc/error.hpp"
#include "qconc/measures.hpp"
#include "support.hpp"

using namespace qconc;
using namespace qtest;

TEST_CASE("pure concurrence examples") {
  CHECK(concurrence_pure(PureTwoQubit(phi_plus())) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_pure(PureTwoQubit(basis(0))) == 0.0);
  CHECK(concurrence_pure(make_pure(0.6, 0, 0, 0.8)) == doctest::Approx(0.96).epsilon(1e-15));
}

TEST_CASE("complex concurrence examples") {
  CHECK(std::abs(complex_concurrence_pure(PureTwoQubit(phi_plus())) - 1.0) <= 1e-15);
  CHECK(std::abs(complex_concurrence_pure(make_pure(1, 0, 0, Complex{0, 1})) - Complex{0, 1}) <= 1e-15);
  CHECK(complex_concurrence_pure(PureTwoQubit(basis(0))) == Complex{0});
}

TEST_CASE("concurrence equals the spin-flip overlap") {
  Rng rng = make_rng(31);
  double worst = 0.0, worst_mod = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const PureTwoQubit psi = random_pure(rng);
    const double overlap = std::abs(inner(psi.amplitudes(), spin_flip_pure(psi).amplitudes()));
    worst = std::max(worst, std::abs(overlap - concurrence_pure(psi)));
    worst_mod = std::max(worst_mod, std::abs(std::abs(complex_concurrence_pure(psi)) - concurrence_pure(psi)));
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_mod <= 1e-12);
}

TEST_CASE("concurrence is invariant under local unitaries") {
  Rng rng = make_rng(32);
  for (int k = 0; k < 500; ++k) {
    const PureTwoQubit psi = random_pure(rng);
    const Eigen::Matrix2cd u = random_unitary2(rng);
    const Eigen::Matrix2cd v = random_unitary2(rng);
    Eigen::Vector4cd x;
    for (int i = 0; i < 4; ++i) x(i) = psi.amplitudes()[static_cast<std::size_t>(i)];
    Eigen::Matrix4cd uv;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) uv(r, c) = u(r / 2, c / 2) * v(r % 2, c % 2);
    }
    const Eigen::Vector4cd y = uv * x;
    const PureTwoQubit phi(Amplitudes{y(0), y(1), y(2), y(3)});
    CHECK(std::abs(concurrence_pure(phi) - concurrence_pure(psi)) <= 1e-10);
  }
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(std::abs(binary_entropy(0.9) - 0.46900) <= 1e-5);
  const double h09 = -0.9 * std::log2(0.9) - 0.1 * std::log2(0.1);
  CHECK(std::abs(binary_entropy(0.9) - h09) <= 1e-15);
  CHECK_NOTHROW(binary_entropy(1.0 + 5e-13));
  CHECK_THROWS_AS(binary_entropy(1.0 + 1e-9), DomainError);
  CHECK_THROWS_AS(binary_entropy(-1e-9), DomainError);
}

TEST_CASE("entanglement of formation") {
  CHECK(entanglement_of_formation(1.0) == 1.0);
  CHECK(entanglement_of_formation(0.0) == 0.0);
  CHECK(std::abs(entanglement_of_formation(0.6) - 0.46900) <= 1e-5);
  CHECK(std::abs(entanglement_of_formation(0.6) - binary_entropy(0.9)) <= 1e-15);
  CHECK_NOTHROW(entanglement_of_formation(1.0 + 1e-15));
  CHECK_THROWS_AS(entanglement_of_formation(1.1), DomainError);

  double prev = 0.0;
  for (int k = 0; k <= 10000; ++k) {
    const double e = entanglement_of_formation(k / 10000.0);
    CHECK(e >= prev);
    prev = e;
  }

  // Tiny concurrence: no cancellation to zero.
  CHECK(entanglement_of_formation(1e-6) > 0.0);
}

TEST_CASE("measure_pure pairs concurrence and its entropy") {
  Rng rng = make_rng(33);
  for (int k = 0; k < 200; ++k) {
    const MeasureValue m = measure_pure(random_pure(rng));
    CHECK(std::abs(m.eof - entanglement_of_formation(m.concurrence)) <= 1e-12);
  }
  const MeasureValue bell = measure_pure(PureTwoQubit(phi_plus()));
  CHECK(bell.concurrence == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bell.eof == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Wootters concurrence anchors") {
  const WoottersResult bell = wootters_concurrence(DensityMatrix4(CMatrix4::outer(phi_plus(), phi_plus())));
  CHECK(std::abs(bell.concurrence - 1.0) <= 1e-9);
  CHECK(std::abs(bell.spectrum.lambdas[0] - 1.0) <= 1e-9);
  for (std::size_t k = 1; k < 4; ++k) CHECK(bell.spectrum.lambdas[k] <= 1e-9);

  const WoottersResult mixed = wootters_concurrence(DensityMatrix4(Complex{0.25} * CMatrix4::identity()));
  CHECK(mixed.concurrence == 0.0);
  for (double l : mixed.spectrum.lambdas) CHECK(std::abs(l - 0.25) <= 1e-12);

  const CMatrix4 w = Complex{0.5} * CMatrix4::outer(phi_plus(), phi_plus()) + Complex{0.125} * CMatrix4::identity();
  CHECK(std::abs(wootters_concurrence(DensityMatrix4(w)).concurrence - 0.25) <= 1e-9);
  CHECK(std::abs(wootters_reference(w) - 0.25) <= 1e-9);
}

TEST_CASE("Werner family follows max(0, (3p - 1)/2)") {
  for (double p : {0.0, 0.1, 0.2, 1.0 / 3.0, 0.4, 0.5, 0.75, 0.9, 1.0}) {
    const double c = wootters_concurrence(DensityMatrix4(werner(p))).concurrence;
    CHECK(std::abs(c - std::max(0.0, (3 * p - 1) / 2)) <= 1e-9);
  }
}

TEST_CASE("Wootters agrees with an independent eigen-route on random densities") {
  Rng rng = make_rng(34);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int rank = 1 + k % 4;
    CMatrix4 m;
    for (int i = 0; i < rank; ++i) m += Complex{std::exp(complex_gaussian(rng).real())} * random_pure(rng).projector();
    const DensityMatrix4 rho(Complex{1.0 / m.trace().real()} * m);
    const WoottersResult w = wootters_concurrence(rho);
    worst = std::max(worst, std::abs(w.concurrence - wootters_reference(rho.matrix())));
    for (std::size_t i = 1; i < 4; ++i) CHECK(w.spectrum.lambdas[i - 1] >= w.spectrum.lambdas[i]);
    CHECK(w.spectrum.lambdas[3] >= 0.0);
  }
  // The reference takes square roots of computed eigenvalues, which limits
  // its accuracy near rank deficiency.
  CHECK(worst <= 1e-6);
}

TEST_CASE("Wootters reduces to the pure-state concurrence") {
  Rng rng = make_rng(35);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const PureTwoQubit psi = random_pure(rng);
    const WoottersResult w = wootters_concurrence(DensityMatrix4(psi.projector()));
    worst = std::max(worst, std::abs(w.concurrence - concurrence_pure(psi)));
    CHECK(w.spectrum.lambdas[1] <= 1e-9);
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("amplitude form examples") {
  const CoherentPairSpec bell(1.0, 1.0, -1.0, -1.0, std::numbers::pi / 4, 0.0);
  CHECK(std::abs(amplitude_concurrence(bell) - 1.0) <= 1e-15);
  CHECK(std::abs(bell.lambda_coef() * bell.gamma_coef() / bell.n_norm() - 0.125) <= 1e-16);
  CHECK(amplitude_concurrence(CoherentPairSpec(0.7, 1.0, 0.7, -1.0, 0.4, 0.3)) == 0.0);

  const CoherentPairSpec s(2.0, 1.0, 0.0, -1.0, std::numbers::pi / 2, 0.0);
  CHECK(std::abs(amplitude_concurrence(s) - concurrence_pure(entangled_coherent_pure(s))) <= 1e-12);
}

TEST_CASE("amplitude form agrees with the direct concurrence") {
  Rng rng = make_rng(36);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const CoherentPairSpec s(complex_gaussian(rng), complex_gaussian(rng), complex_gaussian(rng),
                             complex_gaussian(rng), angle(rng), angle(rng));
    worst = std::max(worst, std::abs(amplitude_concurrence(s) - concurrence_pure(entangled_coherent_pure(s))));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("separability triggers give exactly zero") {
  Rng rng = make_rng(37);
  for (int k = 0; k < 100; ++k) {
    const Complex a = complex_gaussian(rng), b = complex_gaussian(rng);
    const Complex ap = complex_gaussian(rng), bp = complex_gaussian(rng);
    const double phi = std::uniform_real_distribution<double>(0, 6)(rng);
    const double theta = std::uniform_real_distribution<double>(0.1, 1.4)(rng);
    CHECK(amplitude_concurrence(CoherentPairSpec(a, b, a, bp, theta, phi)) == 0.0);
    CHECK(amplitude_concurrence(CoherentPairSpec(a, b, ap, b, theta, phi)) == 0.0);
    // lambda = 0 and gamma = 0.
    CHECK(amplitude_concurrence(CoherentPairSpec(a, b, ap, bp, std::numbers::pi / 2, phi)) == 0.0);
    CHECK(amplitude_concurrence(CoherentPairSpec(a, b, ap, bp, 0.0, phi)) == 0.0);
    CHECK(concurrence_pure(entangled_coherent_pure(CoherentPairSpec(a, b, ap, bp, 0.0, phi))) <= 1e-15);
  }
}

TEST_CASE("clip_unit") {
  CHECK(clip_unit(1.0 + 1e-10, "c") == 1.0);
  CHECK(clip_unit(-1e-10, "c") == 0.0);
  CHECK(clip_unit(0.3, "c") == 0.3);
  CHECK_THROWS_AS(clip_unit(1.0 + 1e-8, "c"), InvariantViolation);
  CHECK_THROWS_AS(clip_unit(-1e-8, "c"), NumericalError);
}
