#include "qconc/random.hpp"

#include <cmath>
#include <numeric>

namespace qconc {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Amplitudes random_amplitudes(Rng& rng) {
  Amplitudes v;
  for (auto& z : v) z = complex_gaussian(rng);
  return v;
}

PureTwoQubit random_pure(Rng& rng) { return PureTwoQubit(random_amplitudes(rng)); }

PureTwoQubit random_real_pure(Rng& rng) {
  std::normal_distribution<double> normal;
  Amplitudes v;
  for (auto& z : v) z = normal(rng);
  return PureTwoQubit(v);
}

std::vector<double> random_simplex(Rng& rng, std::size_t n) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = expo(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace qconc
