#pragma once

// Closed-form squared concurrence for a mixture of three pure two-qubit
// states, its bounds, the real-amplitude case analysis and the symmetric
// coherent-state reduction.
//
// Notation: for components psi_1..psi_3 with weights p_1..p_3,
//   c_i       = 2(a_i d_i - b_i c_i)                       (complex)
//   c_+/-     = 4/3 [(a1+-a2)(d1+-d2) - (b1+-b2)(c1+-c2) + a3 d3 - b3 c3]
//   c'_+/-    = the same with the roles (1, 3 | 2)
//   c''_+/-   = the same with the roles (2, 3 | 1)
// and
//   C^2 = sum_i p_i^2 |c_i|^2
//       + sum_{i<j} 1/2 p_i p_j [ |D_ij|^2 - |D_ij^2 - 4 c_i c_j| ],
// with D_12 = c_+ - c_-, D_13 = c'_+ - c'_-, D_23 = c''_+ - c''_-.

#include <array>
#include <optional>
#include <string_view>

#include "qconc/measures.hpp"
#include "qconc/states.hpp"

namespace qconc {

/// Three pure components with probabilities. Coherent-state parameters are
/// kept when the mixture was built from them.
class TripleMixture {
 public:
  /// Throws InvalidDecomposition when a weight is negative or the weights do
  /// not sum to one within 1e-12.
  TripleMixture(std::array<double, 3> p, std::array<PureTwoQubit, 3> components);
  TripleMixture(std::array<double, 3> p, const std::array<CoherentPairSpec, 3>& specs);

  const std::array<double, 3>& p() const { return p_; }
  const std::array<PureTwoQubit, 3>& components() const { return components_; }
  const std::optional<std::array<CoherentPairSpec, 3>>& coherent_specs() const { return specs_; }

  /// Pure-state concurrence of component i, from the amplitude form when
  /// coherent parameters are present and from 2|ad - bc| otherwise.
  double component_concurrence(std::size_t i) const;

  /// Largest |<psi_i|psi_j>| over the three pairs.
  double max_overlap() const;
  bool orthogonal() const;

  Decomposition decomposition() const;
  DensityMatrix4 density() const;

 private:
  std::array<double, 3> p_;
  std::array<PureTwoQubit, 3> components_;
  std::optional<std::array<CoherentPairSpec, 3>> specs_;
};

inline constexpr double kOrthogonalityThreshold = 1e-10;

/// The four superpositions (psi_1 +- psi_2 +- psi_3) / sqrt(3), sign patterns
/// (+,+,+), (+,+,-), (+,-,+), (+,-,-), left unnormalized. Throws ZeroState if
/// one of them cancels entirely.
std::array<Amplitudes, 4> quartet_states(const TripleMixture& mix);

struct PairwiseConcurrences {
  Complex c1, c2, c3;
  Complex c_plus, c_minus;
  Complex c_plus_p, c_minus_p;
  Complex c_plus_pp, c_minus_pp;
  /// Complex concurrences of the four quartet superpositions.
  std::array<Complex, 4> quartet{};
};

PairwiseConcurrences pairwise_complex_concurrences(const TripleMixture& mix);

enum class CaseLabel { kUpperB1, kIntermediateB2, kLowerB3, kLowerC, kGeneric };

std::string_view to_string(CaseLabel label);

/// Tolerance at which the bound flags are raised.
inline constexpr double kBoundTolerance = 1e-10;

struct Rank3Result {
  double c_squared = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  CaseLabel case_label = CaseLabel::kGeneric;
  /// p_1^2 C_1^2 + p_2^2 C_2^2 + p_3^2 C_3^2
  double diagonal_term = 0.0;
  /// Pair contributions for (1,2), (1,3), (2,3).
  std::array<double, 3> pair_terms{};
  bool orthogonal = false;
  bool negative = false;          // c_squared < -1e-10
  bool lower_violation = false;   // c_squared < lower_bound - 1e-10
  bool upper_violation = false;   // c_squared > upper_bound + 1e-10
};

/// Evaluates the closed form. Negative values are reported, not clamped.
Rank3Result concurrence_squared_rank3(const TripleMixture& mix);

/// Same quantity written through the quartet concurrences,
///   D_12 = C1 + C2 - C3 - C4, D_13 = C1 + C3 - C2 - C4, D_23 = C1 + C4 - C2 - C3.
double concurrence_squared_rank3_quartet(const TripleMixture& mix);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// lower = (p1 C1 - p2 C2 - p3 C3)^2, upper = (p1 C1 + p2 C2 + p3 C3)^2.
Bounds concurrence_bounds(const TripleMixture& mix);

/// Sign-pattern classification for mixtures whose twelve amplitudes are real
/// within 1e-12; anything else is kGeneric. Checked in the order C, B1, B3, B2.
/// The two lower-bound labels additionally require p_2 p_3 c_2 c_3 = 0, the
/// only configuration in which the printed lower bound is attained.
CaseLabel classify_real_case(const TripleMixture& mix);

/// X = ((alpha alpha' + 1) / (alpha - alpha'))^2, +infinity when alpha = alpha'.
double symmetric_ratio(double alpha, double alpha_p);

struct SymmetricCaseParams {
  double x = 0.0;
  double p_i = 0.0;
  double alpha = 0.0;
  double alpha_p = 0.0;
};

SymmetricCaseParams symmetric_case_params(double p_i, double alpha, double alpha_p);

/// (p_i / (1 + 2X))^2; zero when alpha = alpha'.
double reduced_symmetric_concurrence(double p_i, double alpha, double alpha_p);

/// Coherent pair with alpha = beta, alpha' = beta', theta = pi/4, phi = 0:
/// the family on which the symmetric reduction holds.
CoherentPairSpec symmetric_coherent_spec(double alpha, double alpha_p);

/// (p_i C_i)^2 for the single entangled component when the other two are
/// separable (|c| <= 1e-12). PreconditionFailed otherwise.
double case_d_concurrence(const TripleMixture& mix);

}  // namespace qconc
