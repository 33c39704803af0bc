#pragma once

// Seeded sampling helpers shared by the optimizer, the CLI and the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "qconc/states.hpp"

namespace qconc {

using Rng = std::mt19937_64;

/// Generator for stream `stream` of `seed`. Distinct streams are
/// statistically independent and reproducible.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
Complex complex_gaussian(Rng& rng);

/// Gaussian amplitudes, i.e. a Haar-distributed direction once normalized.
Amplitudes random_amplitudes(Rng& rng);

PureTwoQubit random_pure(Rng& rng);

/// Gaussian amplitudes with zero imaginary parts.
PureTwoQubit random_real_pure(Rng& rng);

/// Flat Dirichlet sample of length n.
std::vector<double> random_simplex(Rng& rng, std::size_t n);

}  // namespace qconc
