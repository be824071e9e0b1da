#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cdet/rational.hpp"

namespace cdet {

/// Seeded source of exact rationals. Built on std::mt19937_64, whose output
/// sequence is fixed by the C++ standard, so a seed reproduces everywhere.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [1, 2^32]: the high 32 bits of one draw, plus one.
  std::uint64_t next_u32_plus_one() { return (engine_() >> 32) + 1; }

  /// r = u/v with u, v uniform in [1, 2^32].
  Rational next_root();
  /// r^2 for r = next_root(); valid under any half-unit exponent.
  Rational next_square();
  /// Element of (0, 1) with 16-bit numerator and denominator.
  Rational next_unit_interval();

 private:
  std::mt19937_64 engine_;
};

/// `count` squares that are pairwise distinct, different from 0 and 1, and
/// with x_i * x_j != 1 for every pair. Redraws the whole point up to
/// `max_retries` times, then throws DomainError.
std::vector<Rational> sample_admissible_point(RationalSampler& rng, std::size_t count, int max_retries = 32);

/// The admissibility predicate used by sample_admissible_point.
bool is_admissible_point(const std::vector<Rational>& x);

}  // namespace cdet
