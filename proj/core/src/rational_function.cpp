#include "gml/rational_function.hpp"

#include <numeric>
#include <utility>
#include <vector>

#include "gml/errors.hpp"

namespace gml {

namespace {

// Dense coefficient vectors, index = degree, no trailing zeros.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Drops the x^k factor: returns the polynomial part with nonzero constant term.
Dense to_dense_unit_free(const LaurentPoly& p) {
  Dense out;
  if (p.is_zero()) return out;
  const auto lo = p.min_exponent();
  out.assign(static_cast<std::size_t>(p.max_exponent() - lo + 1), Rational(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

LaurentPoly from_dense(const Dense& p, LaurentPoly::Exponent shift = 0) {
  LaurentPoly::TermMap terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) terms.emplace(static_cast<LaurentPoly::Exponent>(i) + shift, p[i]);
  }
  return LaurentPoly(std::move(terms));
}

// a = q*b + r with deg r < deg b.
void divmod(const Dense& a, const Dense& b, Dense& quot, Dense& rem) {
  rem = a;
  trim(rem);
  quot.clear();
  if (rem.size() < b.size()) return;
  quot.assign(rem.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    const std::size_t shift = rem.size() - b.size();
    const Rational factor = rem.back() / lead;
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
    rem.pop_back();
    trim(rem);
  }
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    // Keep the remainder sequence monic to contain coefficient growth.
    if (!b.empty()) {
      const Rational lead = b.back();
      for (auto& c : b) c /= lead;
    }
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

namespace poly {

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return from_dense(dense_gcd(to_dense_unit_free(b), {}));
  if (b.is_zero()) return from_dense(dense_gcd(to_dense_unit_free(a), {}));
  return from_dense(dense_gcd(to_dense_unit_free(a), to_dense_unit_free(b)));
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  Dense q, r;
  divmod(to_dense_unit_free(a), to_dense_unit_free(b), q, r);
  return r.empty();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Precondition, "division by zero polynomial");
  if (a.is_zero()) return {};
  Dense q, r;
  divmod(to_dense_unit_free(a), to_dense_unit_free(b), q, r);
  if (!r.empty()) throw Error(ErrorKind::Precondition, "inexact polynomial division");
  return from_dense(q, a.min_exponent() - b.min_exponent());
}

}  // namespace poly

RationalFunction::RationalFunction(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(Rational(1))) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::Precondition, "rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(Rational(1));
    return;
  }
  // Move the monomial part of den into num.
  const auto lo = den_.min_exponent();
  if (lo != 0) {
    den_ = den_.shifted(-lo);
    num_ = num_.shifted(-lo);
  }
  if (den_.max_exponent() > 0) {
    LaurentPoly g = poly::gcd(num_, den_);
    if (g.max_exponent() > 0) {
      num_ = poly::exact_divide(num_, g);
      den_ = poly::exact_divide(den_, g);
      const auto shift = den_.min_exponent();
      if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
      }
    }
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

LaurentPoly::Exponent RationalFunction::exponent_gcd() const {
  return std::gcd(num_.exponent_gcd(), den_.exponent_gcd());
}

RationalFunction RationalFunction::substitute_power(LaurentPoly::Exponent k) const {
  if (k > 0) return RationalFunction(Reduced{}, num_.substitute_power(k), den_.substitute_power(k));
  return RationalFunction(num_.substitute_power(k), den_.substitute_power(k));
}

RationalFunction RationalFunction::compress_exponents(LaurentPoly::Exponent k) const {
  return RationalFunction(Reduced{}, num_.compress_exponents(k), den_.compress_exponents(k));
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
  if (c == 0) return {};
  return RationalFunction(Reduced{}, num_.scaled(c), den_);
}

RationalFunction RationalFunction::times_monomial(LaurentPoly::Exponent e) const {
  return RationalFunction(Reduced{}, num_.shifted(e), den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RationalFunction(RationalFunction::Reduced{}, a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) {
    return RationalFunction(RationalFunction::Reduced{}, a.num_ * b.num_, a.den_);
  }
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::Precondition, "division by the zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string(const std::string& var, LaurentPoly::Exponent unit) const {
  if (den_.is_one()) return num_.to_string(var, unit);
  const std::string n = num_.term_count() > 1 ? "(" + num_.to_string(var, unit) + ")" : num_.to_string(var, unit);
  return n + "/(" + den_.to_string(var, unit) + ")";
}

}  // namespace gml
