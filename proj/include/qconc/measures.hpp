#pragma once

// Entanglement measures for two-qubit pure states and density matrices.

#include <array>

#include "qconc/states.hpp"

namespace qconc {

/// Values within this distance outside [0, 1] are treated as round-off and
/// clipped; anything further out raises InvariantViolation.
inline constexpr double kUnitIntervalSlack = 1e-9;

/// 2(ad - bc) of arbitrary, possibly unnormalized, amplitudes.
Complex complex_concurrence(const Amplitudes& v);

/// 2(ad - bc) of a normalized state; its modulus is the concurrence.
Complex complex_concurrence_pure(const PureTwoQubit& psi);

/// 2|ad - bc|, in [0, 1].
double concurrence_pure(const PureTwoQubit& psi);

/// -x log2 x - (1-x) log2 (1-x) with 0 log 0 = 0. DomainError outside [0, 1]
/// beyond 1e-12.
double binary_entropy(double x);

/// h((1 + sqrt(1 - c^2)) / 2). DomainError outside [0, 1] beyond 1e-12.
double entanglement_of_formation(double c);

struct MeasureValue {
  double concurrence = 0.0;
  double eof = 0.0;
};

MeasureValue measure_pure(const PureTwoQubit& psi);

/// Square roots of the eigenvalues of rho * rho_tilde, descending.
struct WoottersSpectrum {
  std::array<double, 4> lambdas{};
};

struct WoottersResult {
  double concurrence = 0.0;
  WoottersSpectrum spectrum;
};

/// max(l1 - l2 - l3 - l4, 0). The l_i are obtained as the singular values of
/// sqrt(rho) Y sqrt(rho)^*, Y = sigma_y (x) sigma_y, whose squares are the
/// eigenvalues of sqrt(rho) rho_tilde sqrt(rho).
WoottersResult wootters_concurrence(const DensityMatrix4& rho);

/// 2 |lambda gamma / N (alpha - alpha')(beta - beta')|
double amplitude_concurrence(const CoherentPairSpec& spec);

/// Clips v into [0, 1] when it lies within kUnitIntervalSlack of the interval;
/// throws InvariantViolation otherwise. `what` names the quantity.
double clip_unit(double v, const char* what);

}  // namespace qconc
