#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdet/rational.hpp"

namespace cdet {

/// Exponent vector in half units: the stored value is twice the exponent,
/// so x^(1/2) is stored as 1 and x^2 as 4.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : e_(num_vars, 0) {}
  explicit Monomial(std::vector<std::int32_t> half_exponents) : e_(std::move(half_exponents)) {}

  /// Builds a monomial from whole-unit exponents.
  static Monomial from_exponents(const std::vector<int>& exponents);

  std::size_t num_vars() const { return e_.size(); }
  std::int32_t half_exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::int32_t>& half_exponents() const { return e_; }
  bool is_unit() const;
  bool is_integral() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;

  /// Lex order with x1 >> x2 >> ... : the larger monomial has the larger
  /// exponent at the first differing position.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.e_ <=> b.e_;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// "x1^2*x3^(5/2)"; empty string for the unit monomial.
  std::string canonical() const;

 private:
  std::vector<std::int32_t> e_;
};

/// Sparse multivariate Laurent polynomial over Q. Terms are kept sorted
/// by decreasing lex order with no zero coefficients, so equality is
/// structural and the canonical text form is reproducible.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static LaurentPoly constant(std::size_t num_vars, const Rational& c);
  /// x_index^(half_units/2), index 0-based.
  static LaurentPoly variable(std::size_t num_vars, std::size_t index, std::int32_t half_units = 2);
  static LaurentPoly term(Monomial mono, const Rational& c);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static LaurentPoly from_terms(std::size_t num_vars, std::vector<Term> terms);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_integral_exponent() const;
  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly pow(unsigned e) const;

  /// Exact quotient in the Laurent ring, or nullopt when d does not divide.
  /// Throws DomainError when d is zero.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  /// Greatest term in lex order. Throws DomainError on the zero polynomial.
  const Term& leading_term() const;

  /// Exact value at a point. Negative powers need nonzero coordinates and
  /// odd half-unit powers need perfect-square coordinates.
  Rational eval(std::span<const Rational> point) const;

  /// Canonical text: terms in decreasing lex order, "num/den*x1^2*x3^(5/2)"
  /// joined by " + "; "0" for the zero polynomial.
  std::string canonical() const;

 private:
  void check_compatible(const LaurentPoly& o) const;

  std::size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace cdet
