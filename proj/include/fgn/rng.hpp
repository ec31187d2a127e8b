#pragma once

// Deterministic seeding helpers. Per-instance seeds are derived from a base
// seed by the splittable scheme split_seed(base, i) = splitmix64(base + i),
// so serial and parallel runs over instances agree.

#include <complex>
#include <cstdint>
#include <random>

namespace fgn {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t split_seed(std::uint64_t base, std::uint64_t i) {
  return splitmix64(base + i);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed ^ 0xf9c5d1a4bb1e3c7dull));
}

inline std::complex<double> complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  double re = n01(rng);
  double im = n01(rng);
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

}  // namespace fgn
