#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cdet {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "p/q" or "-p/q".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }

  /// Integer power; negative exponents invert (domain error at zero).
  Rational pow(long e) const;

  /// Exact square root; throws DomainError when not a perfect square.
  Rational sqrt() const;
  bool is_perfect_square() const;

  /// x^(h/2) for an exponent given in half units.
  Rational half_pow(long half_units) const;

  /// Canonical form "num/den" (denominator always printed).
  std::string canonical() const;
  /// Human form: "num" for integers, else "num/den".
  std::string str() const;

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient with C(a, k) = 0 for a < 0, k < 0 or k > a.
std::int64_t binomial(std::int64_t a, std::int64_t k);

}  // namespace cdet
