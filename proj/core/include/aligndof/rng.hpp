// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace aligndof::rng {

// Counter-based generation: every random value is a pure function of a key
// and a counter, so matrices are reproducible independently of generation
// order and trials can run on any thread schedule.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Folds a path of indices into a seed, one mixing round per component.
inline std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t k = splitmix64(seed);
  for (std::uint64_t p : path) k = splitmix64(k ^ (p + 0x9E3779B97F4A7C15ULL));
  return k;
}

/// Uniform draw in (0, 1], safe as a log() argument.
inline double uniform01(std::uint64_t key, std::uint64_t counter) {
  const std::uint64_t bits = splitmix64(key ^ splitmix64(counter + 0x243F6A8885A308D3ULL));
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

/// Circularly symmetric complex normal CN(0, 1): real and imaginary parts are
/// independent N(0, 1/2) draws, produced by Box-Muller from two uniforms.
inline std::complex<double> complex_normal(std::uint64_t key, std::uint64_t counter) {
  const double u1 = uniform01(key, 2 * counter);
  const double u2 = uniform01(key, 2 * counter + 1);
  const double radius = std::sqrt(-std::log(u1));  // sqrt(-2 ln u) / sqrt(2)
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// Standard real normal N(0, 1).
inline double normal(std::uint64_t key, std::uint64_t counter) {
  const double u1 = uniform01(key, 2 * counter);
  const double u2 = uniform01(key, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace aligndof::rng
