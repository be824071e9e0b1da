#include "cdet/rational.hpp"

#include <ostream>

#include "cdet/errors.hpp"

namespace cdet {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den = 1;
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse rational '" + s + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero raised to a negative power");
    mpq_class inv = 1 / v_;
    return Rational(inv).pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

bool Rational::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(v_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(v_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt() const {
  if (!is_perfect_square()) throw DomainError("half power of a non-square rational " + str());
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
  return Rational(n, d);
}

Rational Rational::half_pow(long half_units) const {
  if (half_units % 2 == 0) return pow(half_units / 2);
  return sqrt().pow(half_units);
}

std::string Rational::canonical() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return canonical();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t binomial(std::int64_t a, std::int64_t k) {
  if (a < 0 || k < 0 || k > a) return 0;
  if (k > a - k) k = a - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (a - k + i) / i;
  return r;
}

}  // namespace cdet
