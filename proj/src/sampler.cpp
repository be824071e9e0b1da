#include "cdet/sampler.hpp"

#include "cdet/errors.hpp"

namespace cdet {

Rational RationalSampler::next_root() {
  const std::uint64_t u = next_u32_plus_one();
  const std::uint64_t v = next_u32_plus_one();
  return Rational(mpz_class(std::to_string(u)), mpz_class(std::to_string(v)));
}

Rational RationalSampler::next_square() {
  Rational r = next_root();
  return r * r;
}

Rational RationalSampler::next_unit_interval() {
  const std::uint64_t den = 2 + (engine_() >> 48) % 65535;  // [2, 65536]
  const std::uint64_t num = 1 + (engine_() >> 48) % (den - 1);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

bool is_admissible_point(const std::vector<Rational>& x) {
  const Rational one(1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || x[i] == one) return false;
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j] || x[i] * x[j] == one) return false;
    }
  }
  return true;
}

std::vector<Rational> sample_admissible_point(RationalSampler& rng, std::size_t count, int max_retries) {
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::vector<Rational> x;
    x.reserve(count);
    for (std::size_t i = 0; i < count; ++i) x.push_back(rng.next_square());
    if (is_admissible_point(x)) return x;
  }
  throw DomainError("no admissible sample point after " + std::to_string(max_retries) + " retries");
}

}  // namespace cdet
