#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gml/rational.hpp"

namespace gml {

/// Finite sum of c_e x^e with integer (possibly negative) exponents e and
/// rational coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(TermMap terms);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, Exponent e);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const;
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Both require a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const Rational& leading_coefficient() const;
  const Rational& trailing_coefficient() const;

  Rational coefficient(Exponent e) const;
  void add_term(const Rational& c, Exponent e);

  /// gcd of all exponents; 0 when the polynomial is zero or constant.
  Exponent exponent_gcd() const;

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(Exponent by) const;
  /// x -> x^k for nonzero integer k.
  LaurentPoly substitute_power(Exponent k) const;
  /// Exponents divided by k; every exponent must be divisible by k.
  LaurentPoly compress_exponents(Exponent k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Human readable form in the variable `var`, exponents divided by `unit`.
  std::string to_string(const std::string& var = "x", Exponent unit = 1) const;

 private:
  TermMap terms_;
};

}  // namespace gml
