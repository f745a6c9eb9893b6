#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "bjorth/matrix.hpp"

namespace bjorth {

/// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t mix64(std::uint64_t x);

/// Seed for the substream identified by (seed, k1, k2, ...).
std::uint64_t substream_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

/// mt19937_64 seeded through SplitMix64, with the few draws the toolkit needs.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  double normal(double stddev = 1.0) { return std::normal_distribution<double>(0.0, stddev)(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  /// Standard Gaussian scalar of the field: N(0,1) real, or re/im ~ N(0,1/2).
  cx gaussian(Field field);

  /// Uniformly distributed unit vector of 𝕂ⁿ.
  Vector unit_vector(std::size_t n, Field field);

  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

}  // namespace bjorth
