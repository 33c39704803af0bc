#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "qconc/app/commands.hpp"
#include "qconc/error.hpp"
#include "qconc/measures.hpp"

namespace qconc::app {

namespace {

// Each group compares computed values against anchors; `shift` is added to
// the group's anchor when the group is the mutation target.
struct Group {
  const char* name;
  std::function<SelftestGroupResult(double shift)> run;
};

SelftestGroupResult verdict(const char* name, double worst, double tol) {
  std::ostringstream os;
  os << "max deviation " << worst << " (tolerance " << tol << ")";
  return {name, worst <= tol, os.str()};
}

Amplitudes bell_phi_plus() { return {std::numbers::sqrt2 / 2, 0, 0, std::numbers::sqrt2 / 2}; }
Amplitudes bell_psi_plus() { return {0, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2, 0}; }
Amplitudes bell_psi_minus() { return {0, std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2, 0}; }

SelftestGroupResult eigensolver(double shift) {
  // Q diag(d) Q^dagger with Q the Bell basis carrying a few phases.
  const std::array<double, 4> d{3.0, 1.0, -0.5, -2.0};
  const std::array<Amplitudes, 4> q{bell_phi_plus(),
                                    Complex{0, 1} * Amplitudes{std::numbers::sqrt2 / 2, 0, 0, -std::numbers::sqrt2 / 2},
                                    bell_psi_plus(), std::polar(1.0, 0.3) * bell_psi_minus()};
  CMatrix4 m;
  for (std::size_t k = 0; k < 4; ++k) m += Complex{d[k]} * CMatrix4::outer(q[k], q[k]);
  const HermEigenSystem eig = herm_eigensystem(m);
  double worst = max_abs_diff(eig.reconstruct(), m);
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(eig.eigenvalues[k] - (d[k] + (k ? 0 : shift))));
  return verdict("eigensolver", worst, 1e-12);
}

SelftestGroupResult spin_flip_involution(double shift) {
  Rng rng = make_rng(101);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const PureTwoQubit psi = random_pure(rng);
    Amplitudes anchor = psi.amplitudes();
    anchor[0] += shift;
    worst = std::max(worst, max_abs_diff(spin_flip_pure(spin_flip_pure(psi)).amplitudes(), anchor));
    const CMatrix4 m = psi.projector();
    worst = std::max(worst, max_abs_diff(spin_flip(spin_flip(m)), m));
  }
  return verdict("spin_flip_involution", worst, 1e-12);
}

SelftestGroupResult vertex_reduction(double shift) {
  Rng rng = make_rng(102);
  const PureTwoQubit filler = make_pure(1, 0, 0, 0);
  double worst = 0.0;
  for (int k = 0; k < 300; ++k) {
    const PureTwoQubit psi = random_pure(rng);
    const double c = concurrence_pure(psi);
    std::array<double, 3> p{};
    std::array<PureTwoQubit, 3> comps{filler, filler, filler};
    p[static_cast<std::size_t>(k % 3)] = 1.0;
    comps[static_cast<std::size_t>(k % 3)] = psi;
    const double c2 = concurrence_squared_rank3(TripleMixture(p, comps)).c_squared;
    worst = std::max(worst, std::abs(c2 - (c * c + shift)));
  }
  return verdict("vertex_reduction", worst, 1e-12);
}

SelftestGroupResult amplitude_form(double shift) {
  Rng rng = make_rng(103);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int k = 0; k < 300; ++k) {
    const CoherentPairSpec s(complex_gaussian(rng), complex_gaussian(rng), complex_gaussian(rng),
                             complex_gaussian(rng), angle(rng), angle(rng));
    const double direct = concurrence_pure(entangled_coherent_pure(s));
    worst = std::max(worst, std::abs(amplitude_concurrence(s) - (direct + shift)));
  }
  return verdict("amplitude_form", worst, 1e-12);
}

SelftestGroupResult upper_bound(double shift) {
  Rng rng = make_rng(104);
  double worst = 0.0;  // largest excess over the upper bound
  for (int k = 0; k < 2000; ++k) {
    const TripleMixture mix = random_triple_mixture(rng, 3, k % 2 == 1);
    const Rank3Result r = concurrence_squared_rank3(mix);
    worst = std::max(worst, r.c_squared - r.upper_bound);
  }
  // Identical Bell components saturate the bound at 1.
  const PureTwoQubit bell(bell_phi_plus());
  const Rank3Result b = concurrence_squared_rank3(TripleMixture({0.2, 0.3, 0.5}, {bell, bell, bell}));
  worst = std::max({worst, std::abs(b.c_squared - (1.0 + shift)), std::abs(b.upper_bound - 1.0)});
  return verdict("upper_bound", worst, 1e-10);
}

SelftestGroupResult wootters_anchors(double shift) {
  const CMatrix4 singlet = PureTwoQubit(bell_psi_minus()).projector();
  const std::array<double, 4> ps{0.2, 1.0 / 3.0, 0.5, 0.9};
  const std::array<double, 4> expected{0.0, 0.0, 0.25, 0.85};
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const DensityMatrix4 rho(Complex{ps[k]} * singlet + Complex{(1.0 - ps[k]) / 4.0} * CMatrix4::identity());
    const double anchor = expected[k] + (k == 3 ? shift : 0.0);
    worst = std::max(worst, std::abs(wootters_concurrence(rho).concurrence - anchor));
  }
  worst = std::max(worst, std::abs(wootters_concurrence(DensityMatrix4(singlet)).concurrence - 1.0));
  return verdict("wootters_anchors", worst, 1e-9);
}

SelftestGroupResult oracle_sanity(double shift) {
  RoofConfig cfg;
  cfg.restarts = 16;
  cfg.seed = 105;
  const PureTwoQubit bell(bell_phi_plus());
  const double pure_dev =
      std::abs(convex_roof_concurrence(DensityMatrix4(bell.projector()), cfg).c_estimate - (1.0 + shift));
  // Equal mixture of Phi+ and Psi+ has a product-state decomposition.
  const CMatrix4 mix = Complex{0.5} * bell.projector() + Complex{0.5} * PureTwoQubit(bell_psi_plus()).projector();
  const double mix_dev = convex_roof_concurrence(DensityMatrix4(mix), cfg).c_estimate;
  std::ostringstream os;
  os << "Bell projector deviation " << pure_dev << " (tolerance 1e-06), separable mixture " << mix_dev
     << " (tolerance 0.001)";
  return {"oracle_sanity", pure_dev <= 1e-6 && mix_dev <= 1e-3, os.str()};
}

SelftestGroupResult symmetric_reduction(double shift) {
  double worst = std::abs(reduced_symmetric_concurrence(1.0 / 3.0, 1.0, -1.0) - (1.0 / 9.0 + shift));
  Rng rng = make_rng(106);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  const std::array<double, 3> p{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  for (int k = 0; k < 50; ++k) {
    const double a = coord(rng);
    const double ap = coord(rng);
    const double z2 = coord(rng);
    const double z3 = coord(rng);
    const TripleMixture mix(p, std::array<CoherentPairSpec, 3>{symmetric_coherent_spec(a, ap),
                                                                CoherentPairSpec(z2, z3, z2, z3, 0.7, 0.0),
                                                                CoherentPairSpec(z3, z2, z3, z2, 0.2, 0.0)});
    const double full = concurrence_squared_rank3(mix).c_squared;
    worst = std::max(worst, std::abs(full - reduced_symmetric_concurrence(p[0], a, ap)));
  }
  return verdict("symmetric_reduction", worst, 1e-10);
}

const std::vector<Group>& groups() {
  static const std::vector<Group> all{
      {"eigensolver", eigensolver},
      {"spin_flip_involution", spin_flip_involution},
      {"vertex_reduction", vertex_reduction},
      {"amplitude_form", amplitude_form},
      {"upper_bound", upper_bound},
      {"wootters_anchors", wootters_anchors},
      {"oracle_sanity", oracle_sanity},
      {"symmetric_reduction", symmetric_reduction},
  };
  return all;
}

constexpr double kMutationShift = 1e-3;

}  // namespace

std::vector<std::string> selftest_group_names() {
  std::vector<std::string> names;
  for (const Group& g : groups()) names.emplace_back(g.name);
  return names;
}

std::vector<SelftestGroupResult> run_selftest(const std::optional<std::string>& mutate) {
  if (mutate) {
    const auto names = selftest_group_names();
    if (std::find(names.begin(), names.end(), *mutate) == names.end()) {
      throw InputError("unknown selftest group \"" + *mutate + "\"");
    }
  }
  std::vector<SelftestGroupResult> results;
  for (const Group& g : groups()) {
    const double shift = mutate && *mutate == g.name ? kMutationShift : 0.0;
    try {
      results.push_back(g.run(shift));
    } catch (const Error& e) {
      results.push_back({g.name, false, std::string("threw: ") + e.what()});
    }
  }
  return results;
}

int cmd_selftest(std::ostream& out, const std::optional<std::string>& mutate) {
  std::vector<SelftestGroupResult> results;
  try {
    results = run_selftest(mutate);
  } catch (const InputError& e) {
    out << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    passed += r.passed;
  }
  out << passed << '/' << results.size() << " groups passed\n";
  return passed == results.size() ? kExitOk : kExitSelftestFailure;
}

}  // namespace qconc::app
