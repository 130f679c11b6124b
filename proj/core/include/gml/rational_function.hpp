#pragma once

#include <string>

#include "gml/laurent.hpp"

namespace gml {

/// Quotient num/den of Laurent polynomials in one variable, always stored
/// reduced: gcd(num, den) = 1, den has minimal exponent 0 and is monic in its
/// top coefficient. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(LaurentPoly::constant(Rational(1))) {}
  RationalFunction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly num, LaurentPoly den);

  static RationalFunction constant(const Rational& c) { return RationalFunction(LaurentPoly::constant(c)); }

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  /// gcd of every exponent in num and den (0 for constants).
  LaurentPoly::Exponent exponent_gcd() const;

  RationalFunction substitute_power(LaurentPoly::Exponent k) const;
  RationalFunction compress_exponents(LaurentPoly::Exponent k) const;
  /// x -> 1/x.
  RationalFunction invert_variable() const { return substitute_power(-1); }
  RationalFunction scaled(const Rational& c) const;
  RationalFunction times_monomial(LaurentPoly::Exponent e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "x", LaurentPoly::Exponent unit = 1) const;

 private:
  struct Reduced {};
  RationalFunction(Reduced, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

namespace poly {

/// Monic gcd of two Laurent polynomials viewed in Q[x, 1/x] (powers of x are
/// units there, so the result has minimal exponent 0).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in Q[x, 1/x]; throws Precondition if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// True iff b divides a in Q[x, 1/x].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

}  // namespace poly

}  // namespace gml
