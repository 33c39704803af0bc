#include <doctest.h>

#include "qconc/error.hpp"
#include "support.hpp"

using namespace qconc;
using namespace qtest;

TEST_CASE("make_pure normalizes and records the norm") {
  const PureTwoQubit a = make_pure(1, 0, 0, 0);
  CHECK(max_abs_diff(a.amplitudes(), basis(0)) == 0.0);
  CHECK(a.norm() == 1.0);

  const PureTwoQubit b = make_pure(2, 0, 0, 0);
  CHECK(max_abs_diff(b.amplitudes(), basis(0)) == 0.0);
  CHECK(b.norm() == 2.0);

  const PureTwoQubit c = make_pure(1, 0, 0, 1);
  CHECK(max_abs_diff(c.amplitudes(), phi_plus()) <= 1e-16);
  CHECK(c.norm() == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
}

TEST_CASE("make_pure rejects zero and non-finite input") {
  CHECK_THROWS_AS(make_pure(0, 0, 0, 0), ZeroState);
  CHECK_THROWS_AS(make_pure(1e-15, 0, 0, 0), ZeroState);
  CHECK_THROWS_AS(make_pure(std::nan(""), 0, 0, 0), DomainError);
  CHECK_THROWS_AS(make_pure(INFINITY, 0, 0, 0), DomainError);
}

TEST_CASE("constructed pure states have unit norm") {
  Rng rng = make_rng(21);
  for (int k = 0; k < 1000; ++k) {
    Amplitudes v = random_amplitudes(rng);
    const double scale = std::exp(std::uniform_real_distribution<double>(-20, 20)(rng));
    v = Complex{scale} * v;
    CHECK(std::abs(norm(PureTwoQubit(v).amplitudes()) - 1.0) <= 1e-12);
  }
}

TEST_CASE("spin_flip_pure keeps the stored norm") {
  const PureTwoQubit psi = make_pure(0, 3, 4, 0);
  const PureTwoQubit f = spin_flip_pure(psi);
  CHECK(f.norm() == 5.0);
  CHECK(max_abs_diff(f.amplitudes(), Amplitudes{0, 0.8, 0.6, 0}) <= 1e-15);
}

TEST_CASE("su2_coherent_qubit examples") {
  const auto a = su2_coherent_qubit(0.0, 1.3);
  CHECK(a[0] == Complex{1});
  CHECK(a[1] == Complex{0});
  const auto b = su2_coherent_qubit(std::numbers::pi, 0.0);
  CHECK(b[0] == Complex{0});
  CHECK(b[1] == Complex{1});
  const auto c = su2_coherent_qubit(std::numbers::pi / 2, 0.0);
  CHECK(std::abs(c[0] - kInvSqrt2) <= 1e-15);
  CHECK(std::abs(c[1] - kInvSqrt2) <= 1e-15);
}

TEST_CASE("spin-j coherent states") {
  for (int two_j = 0; two_j <= 6; ++two_j) {
    const SpinJCoherent s = su2_coherent_spin_j(0.0, two_j);
    REQUIRE(s.amplitudes.size() == static_cast<std::size_t>(two_j + 1));
    CHECK(s.amplitudes[0] == Complex{1});
    for (std::size_t n = 1; n < s.amplitudes.size(); ++n) CHECK(s.amplitudes[n] == Complex{0});
  }

  const SpinJCoherent one = su2_coherent_spin_j(1.0, 2);
  CHECK(one.j() == 1.0);
  CHECK(std::abs(one.amplitudes[0] - 0.5) <= 1e-15);
  CHECK(std::abs(one.amplitudes[1] - kInvSqrt2) <= 1e-15);
  CHECK(std::abs(one.amplitudes[2] - 0.5) <= 1e-15);

  CHECK_THROWS_AS(su2_coherent_spin_j(0.5, 21), SpinTooLarge);
  CHECK_THROWS_AS(su2_coherent_spin_j(0.5, -1), DomainError);
}

TEST_CASE("spin-j coherent states agree with the binomial formula") {
  Rng rng = make_rng(22);
  double worst = 0.0, worst_norm = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Complex gamma = 2.0 * complex_gaussian(rng);
    const int two_j = k % (kMaxTwoJ + 1);
    const SpinJCoherent s = su2_coherent_spin_j(gamma, two_j);
    const auto ref = spin_j_reference(gamma, two_j);
    double n2 = 0.0;
    for (std::size_t n = 0; n < ref.size(); ++n) {
      worst = std::max(worst, std::abs(s.amplitudes[n] - ref[n]));
      n2 += std::norm(s.amplitudes[n]);
    }
    worst_norm = std::max(worst_norm, std::abs(n2 - 1.0));
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_norm <= 1e-12);
}

TEST_CASE("spin one-half coherent state equals the qubit parameterization") {
  Rng rng = make_rng(23);
  std::uniform_real_distribution<double> theta(0.01, std::numbers::pi - 0.01);
  std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
  for (int k = 0; k < 100; ++k) {
    const double t = theta(rng);
    const double f = phi(rng);
    const auto q = su2_coherent_qubit(t, f);
    const SpinJCoherent s = su2_coherent_spin_j(std::tan(t / 2) * std::polar(1.0, f), 1);
    CHECK(std::abs(s.amplitudes[0] - q[0]) <= 1e-12);
    CHECK(std::abs(s.amplitudes[1] - q[1]) <= 1e-12);
  }
}

TEST_CASE("coherent_ket matches the spin one-half state") {
  const Complex z{0.3, -1.2};
  const auto k = coherent_ket(z);
  const SpinJCoherent s = su2_coherent_spin_j(z, 1);
  CHECK(std::abs(k[0] - s.amplitudes[0]) <= 1e-15);
  CHECK(std::abs(k[1] - s.amplitudes[1]) <= 1e-15);
}

TEST_CASE("entangled coherent state examples") {
  const CoherentPairSpec bell(1.0, 1.0, -1.0, -1.0, std::numbers::pi / 4, 0.0);
  const double l = 1.0 / (2.0 * std::numbers::sqrt2);
  CHECK(std::abs(bell.lambda_coef() - l) <= 1e-16);
  CHECK(std::abs(bell.gamma_coef() - l) <= 1e-16);
  const PureTwoQubit psi = entangled_coherent_pure(bell);
  CHECK(max_abs_diff(psi.amplitudes(), phi_plus()) <= 1e-15);

  // theta = 0: the single branch |alpha>|beta>.
  const Complex alpha{0.4, 0.2}, beta{-1.1, 0.5};
  const PureTwoQubit prod = entangled_coherent_pure(CoherentPairSpec(alpha, beta, 2.0, 3.0, 0.0, 0.7));
  const Amplitudes expect = kron(coherent_ket(alpha), coherent_ket(beta));
  CHECK(max_abs_diff(prod.amplitudes(), expect) <= 1e-15);
  CHECK(entangled_coherent_pure(CoherentPairSpec(alpha, beta, 2.0, 3.0, 0.0, 0.7)).amplitudes()[0] ==
        expect[0]);

  // alpha = alpha', beta = beta': product regardless of the angles.
  const PureTwoQubit same = entangled_coherent_pure(CoherentPairSpec(alpha, beta, alpha, beta, 1.1, 2.3));
  CHECK(std::abs(same.a() * same.d() - same.b() * same.c()) <= 1e-16);
}

TEST_CASE("coherent coefficients follow their defining formulas") {
  Rng rng = make_rng(24);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (int k = 0; k < 500; ++k) {
    const Complex al = complex_gaussian(rng), be = complex_gaussian(rng);
    const Complex alp = complex_gaussian(rng), bep = complex_gaussian(rng);
    const double th = angle(rng), ph = angle(rng);
    const CoherentPairSpec s(al, be, alp, bep, th, ph);
    const Complex lam = std::cos(th) / std::sqrt((1 + std::norm(al)) * (1 + std::norm(be)));
    const Complex gam = std::polar(1.0, ph) * std::sin(th) / std::sqrt((1 + std::norm(alp)) * (1 + std::norm(bep)));
    CHECK(std::abs(s.lambda_coef() - lam) <= 1e-14);
    CHECK(std::abs(s.gamma_coef() - gam) <= 1e-14);
    const Amplitudes raw = s.raw_amplitudes();
    CHECK(std::abs(raw[0] - (lam + gam)) <= 1e-14);
    CHECK(std::abs(raw[1] - (be * lam + bep * gam)) <= 1e-14);
    CHECK(std::abs(raw[2] - (al * lam + alp * gam)) <= 1e-14);
    CHECK(std::abs(raw[3] - (al * be * lam + alp * bep * gam)) <= 1e-14);
    CHECK(std::abs(s.n_norm() - norm_squared(raw)) <= 1e-12);

    // The normalized state is the superposition of coherent products.
    const Amplitudes direct = Complex{std::cos(th)} * kron(coherent_ket(al), coherent_ket(be)) +
                              std::polar(std::sin(th), ph) * kron(coherent_ket(alp), coherent_ket(bep));
    const PureTwoQubit psi = entangled_coherent_pure(s);
    CHECK(max_abs_diff(psi.amplitudes(), Complex{1.0 / norm(direct)} * direct) <= 1e-12);
    CHECK(std::abs(psi.norm() * psi.norm() - s.n_norm()) <= 1e-12);
  }
}

TEST_CASE("entangled coherent state that cancels") {
  // cos(theta)|a>|b> + e^{i phi} sin(theta)|a>|b> with theta = 3 pi/4 and phi = 0.
  const CoherentPairSpec s(0.5, 0.5, 0.5, 0.5, 3 * std::numbers::pi / 4, 0.0);
  CHECK_THROWS_AS(entangled_coherent_pure(s), ZeroState);
  CHECK_THROWS_AS(CoherentPairSpec(std::nan(""), 0, 0, 0, 0, 0), DomainError);
}

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix4(Complex{0.25} * CMatrix4::identity()));
  CHECK_THROWS_AS(DensityMatrix4(CMatrix4::identity()), InvalidDensity);
  CHECK_THROWS_AS(DensityMatrix4(CMatrix4::diagonal({1.1, -0.1, 0, 0})), InvalidDensity);
  CMatrix4 m = CMatrix4::diagonal({0.5, 0.5, 0, 0});
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix4{m}, InvalidDensity);
}

TEST_CASE("density_from_decomposition examples") {
  const PureTwoQubit bell(phi_plus());
  const DensityMatrix4 one = density_from_decomposition(make_decomposition({1.0}, {bell}));
  CHECK(max_abs_diff(one.matrix(), bell.projector()) <= 1e-16);

  const DensityMatrix4 three = density_from_decomposition(make_decomposition(
      {1.0 / 3, 1.0 / 3, 1.0 / 3}, {PureTwoQubit(basis(0)), PureTwoQubit(basis(1)), PureTwoQubit(basis(2))}));
  CHECK(max_abs_diff(three.matrix(), CMatrix4::diagonal({1.0 / 3, 1.0 / 3, 1.0 / 3, 0})) <= 1e-16);

  const DensityMatrix4 copies = density_from_decomposition(make_decomposition({0.1, 0.6, 0.3}, {bell, bell, bell}));
  CHECK(max_abs_diff(copies.matrix(), bell.projector()) <= 1e-15);
}

TEST_CASE("decomposition validation") {
  const PureTwoQubit s(basis(0));
  CHECK_THROWS_AS(make_decomposition({0.5, 0.4}, {s, s}), InvalidDecomposition);
  CHECK_THROWS_AS(make_decomposition({1.2, -0.2}, {s, s}), InvalidDecomposition);
  CHECK_THROWS_AS(make_decomposition({1.0}, {s, s}), InvalidDecomposition);
  CHECK_THROWS_AS(make_decomposition({}, {}), InvalidDecomposition);
  CHECK_NOTHROW(make_decomposition({0.5, 0.5 + 5e-13}, {s, s}));
}

TEST_CASE("eigendecompose_density examples") {
  const PureTwoQubit bell(phi_plus());
  const Decomposition one = eigendecompose_density(DensityMatrix4(bell.projector()));
  REQUIRE(one.weights.size() == 1);
  CHECK(one.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(numerical_rank(DensityMatrix4(bell.projector())) == 1);

  const DensityMatrix4 mixed(Complex{0.25} * CMatrix4::identity());
  const Decomposition four = eigendecompose_density(mixed);
  REQUIRE(four.weights.size() == 4);
  for (double w : four.weights) CHECK(w == doctest::Approx(0.25).epsilon(1e-14));

  const DensityMatrix4 rho = density_from_decomposition(make_decomposition({0.5, 0.5}, {PureTwoQubit(basis(0)), bell}));
  const Decomposition two = eigendecompose_density(rho);
  REQUIRE(two.weights.size() == 2);
  CHECK(std::abs(inner(two.states[0].amplitudes(), two.states[1].amplitudes())) <= 1e-12);
  CHECK(max_abs_diff(density_from_decomposition(two).matrix(), rho.matrix()) <= 1e-9);
}

TEST_CASE("spectral decomposition round trip on random densities") {
  Rng rng = make_rng(25);
  for (int k = 0; k < 500; ++k) {
    const CMatrix4 m = random_psd(rng);
    const DensityMatrix4 rho(Complex{1.0 / m.trace().real()} * m);
    CHECK(max_abs_diff(density_from_decomposition(eigendecompose_density(rho)).matrix(), rho.matrix()) <= 1e-9);
  }
}

TEST_CASE("snapped trigonometry is exact at quarter turns") {
  for (int k = -8; k <= 8; ++k) {
    const CosSin cs = cos_sin_snapped(k * std::numbers::pi / 2);
    const int r = ((k % 4) + 4) % 4;
    CHECK(cs.cos == std::array<double, 4>{1, 0, -1, 0}[static_cast<std::size_t>(r)]);
    CHECK(cs.sin == std::array<double, 4>{0, 1, 0, -1}[static_cast<std::size_t>(r)]);
  }
  const CosSin g = cos_sin_snapped(0.3);
  CHECK(g.cos == std::cos(0.3));
  CHECK(g.sin == std::sin(0.3));
}
