#include "cdet/laurent_poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "cdet/errors.hpp"

namespace cdet {

Monomial Monomial::from_exponents(const std::vector<int>& exponents) {
  std::vector<std::int32_t> h(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) h[i] = 2 * exponents[i];
  return Monomial(std::move(h));
}

bool Monomial::is_unit() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int32_t v) { return v == 0; });
}

bool Monomial::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](std::int32_t v) { return v % 2 == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.e_.size() != e_.size()) throw UsageError("monomials from different rings");
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (o.e_.size() != e_.size()) throw UsageError("monomials from different rings");
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

std::string Monomial::canonical() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    const std::int32_t h = e_[i];
    if (h == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (h == 2) continue;
    if (h % 2 == 0) {
      out += '^' + std::to_string(h / 2);
    } else {
      out += "^(" + std::to_string(h) + "/2)";
    }
  }
  return out;
}

namespace {

using TermVec = std::vector<LaurentPoly::Term>;

// Sorts by decreasing monomial and merges equal monomials.
void normalize(TermVec& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LaurentPoly::Term& a, const LaurentPoly::Term& b) { return a.mono > b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coef;
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coef;
    if (!c.is_zero()) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

TermVec merge(const TermVec& a, const TermVec& b, bool subtract) {
  TermVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, subtract ? -b[j].coef : b[j].coef});
      ++j;
    } else {
      Rational c = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Rational& c) {
  LaurentPoly p(num_vars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(num_vars), c});
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t index, std::int32_t half_units) {
  if (index >= num_vars) throw UsageError("variable index out of range");
  std::vector<std::int32_t> e(num_vars, 0);
  e[index] = half_units;
  LaurentPoly p(num_vars);
  p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
  return p;
}

LaurentPoly LaurentPoly::term(Monomial mono, const Rational& c) {
  LaurentPoly p(mono.num_vars());
  if (!c.is_zero()) p.terms_.push_back({std::move(mono), c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t num_vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.num_vars() != num_vars) throw UsageError("term has wrong number of variables");
  }
  LaurentPoly p(num_vars);
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

bool LaurentPoly::is_integral_exponent() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_integral(); });
}

Rational LaurentPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rational(0);
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (o.num_vars_ != num_vars_) {
    throw UsageError("polynomials over different rings (" + std::to_string(num_vars_) + " vs " +
                     std::to_string(o.num_vars_) + " variables)");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_compatible(o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly r(a.num_vars_);
  if (a.is_zero() || b.is_zero()) return r;
  TermVec out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) out.push_back({ta.mono * tb.mono, ta.coef * tb.coef});
  }
  normalize(out);
  r.terms_ = std::move(out);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(num_vars_, Rational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  check_compatible(d);
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  LaurentPoly q(num_vars_);
  if (is_zero()) return q;

  // Per-variable exponent window any exact quotient must fit in. Lex order on
  // Z^n is not a well-order, so this window is what guarantees termination.
  std::vector<std::int32_t> lo(num_vars_), hi(num_vars_);
  for (std::size_t v = 0; v < num_vars_; ++v) {
    std::int32_t amin = std::numeric_limits<std::int32_t>::max(), amax = std::numeric_limits<std::int32_t>::min();
    std::int32_t dmin = amin, dmax = amax;
    for (const auto& t : terms_) {
      amin = std::min(amin, t.mono.half_exponent(v));
      amax = std::max(amax, t.mono.half_exponent(v));
    }
    for (const auto& t : d.terms_) {
      dmin = std::min(dmin, t.mono.half_exponent(v));
      dmax = std::max(dmax, t.mono.half_exponent(v));
    }
    lo[v] = amin - dmin;
    hi[v] = amax - dmax;
    if (lo[v] > hi[v]) return std::nullopt;
  }

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coef);
  const Term& lead = d.terms_.front();
  TermVec quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    Monomial qm = top->first / lead.mono;
    for (std::size_t v = 0; v < num_vars_; ++v) {
      if (qm.half_exponent(v) < lo[v] || qm.half_exponent(v) > hi[v]) return std::nullopt;
    }
    Rational qc = top->second / lead.coef;
    rem.erase(top);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      Monomial m = qm * d.terms_[k].mono;
      Rational c = qc * d.terms_[k].coef;
      auto [it, inserted] = rem.try_emplace(std::move(m), -c);
      if (!inserted) {
        it->second -= c;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  q.terms_ = std::move(quotient);  // produced in strictly decreasing order
  return q;
}

const LaurentPoly::Term& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Rational LaurentPoly::eval(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw UsageError("evaluation point has wrong length");
  std::vector<std::map<std::int32_t, Rational>> cache(num_vars_);
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      const std::int32_t h = t.mono.half_exponent(i);
      if (h == 0) continue;
      auto it = cache[i].find(h);
      if (it == cache[i].end()) {
        if (h < 0 && point[i].is_zero()) {
          throw DomainError("x" + std::to_string(i + 1) + " = 0 at a negative power");
        }
        it = cache[i].emplace(h, point[i].half_pow(h)).first;
      }
      v *= it->second;
    }
    sum += v;
  }
  return sum;
}

std::string LaurentPoly::canonical() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    out += terms_[i].coef.canonical();
    std::string m = terms_[i].mono.canonical();
    if (!m.empty()) out += '*' + m;
  }
  return out;
}

}  // namespace cdet
