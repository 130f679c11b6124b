#pragma once

// Exact algebra of quasi-rational functions of r: on each residue class of r
// modulo M the function is a rational function in x = q^(r/N).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gml/rational_function.hpp"

namespace gml {

class ClassFunction {
 public:
  using Exponent = LaurentPoly::Exponent;

  /// The zero function.
  ClassFunction();
  /// Builds and canonicalizes: classes[j] represents f(r) for r = j (mod modulus)
  /// as a rational function of x = q^(r/root_order).
  ClassFunction(Exponent modulus, Exponent root_order, std::vector<RationalFunction> classes);

  static ClassFunction constant(const Rational& c);
  /// q^(c r).
  static ClassFunction q_power(const Rational& c);
  /// p(Q) with Q = q^r; exponents of p are integers.
  static ClassFunction polynomial_in_Q(const LaurentPoly& p);
  /// Per residue class j: sum of coeff * q^(exponent * r).
  static ClassFunction from_class_sums(Exponent modulus,
                                       const std::vector<std::vector<std::pair<Rational, Rational>>>& sums);

  Exponent modulus() const noexcept { return modulus_; }
  Exponent root_order() const noexcept { return root_order_; }
  const std::vector<RationalFunction>& classes() const noexcept { return classes_; }
  const RationalFunction& at_residue(Exponent r) const { return classes_[static_cast<std::size_t>(mod64(r, modulus_))]; }

  bool is_zero() const;
  /// No denominators on any class.
  bool is_laurent() const;

  /// Class entries expressed over a multiple of the modulus and root order.
  std::vector<RationalFunction> expanded(Exponent modulus, Exponent root_order) const;

  /// this * q^(c r).
  ClassFunction scale_pow(const Rational& c) const;
  ClassFunction scaled(const Rational& c) const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a) { return a.scaled(Rational(-1)); }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.modulus_ == b.modulus_ && a.root_order_ == b.root_order_ && a.classes_ == b.classes_;
  }

  /// Display form in Q = q^r, e.g. "Q^2 + Q + 1"; several classes are listed
  /// as "[r=j mod M] ...".
  std::string to_string() const;

 private:
  Exponent modulus_ = 1;
  Exponent root_order_ = 1;
  std::vector<RationalFunction> classes_;
};

enum class RingOp { Add, Sub, Mul, Neg, ScalePow };

/// Uniform entry point for the ring operations. `b` is used by Add/Sub/Mul,
/// `exponent` by ScalePow.
ClassFunction ring_op(RingOp op, const ClassFunction& a, const ClassFunction& b = ClassFunction(),
                      const Rational& exponent = Rational(0));

/// One summand n * omega^(root_exp * r) * q^(q_exp * r), omega = exp(2 pi i / M).
struct ExpTerm {
  Rational coeff;
  ClassFunction::Exponent root_exp = 0;
  Rational q_exp;
};

/// f(r) = sum_i n_i omega^(b_i r) q^(c_i r) / (q^(c r) - 1), or without the
/// denominator when `den_exp` is empty. Throws ZeroDenominatorExponent for
/// c = 0 and NonRealInput if some residue class has an irrational coefficient.
ClassFunction from_terms(ClassFunction::Exponent modulus, std::span<const ExpTerm> terms,
                         const std::optional<Rational>& den_exp = std::nullopt);

/// The duality involution: q^(c r) -> q^(-c r) on every class.
ClassFunction dual(const ClassFunction& f);

/// a / b classwise. Throws Precondition if b vanishes on some class.
ClassFunction divide(const ClassFunction& a, const ClassFunction& b);

/// Result of evaluating at (q0, r0): exact when q0^(r0/N) is rational for the
/// exponents that occur, otherwise a decimal rounded to `digits` significant digits.
struct EvalResult {
  std::optional<Rational> exact;
  std::string decimal;
  int digits = 0;

  bool is_exact() const noexcept { return exact.has_value(); }
  /// Relative error bound of the decimal form ("0" when exact).
  std::string error_bound() const;
  std::string to_string() const;
};

inline constexpr int kDefaultPrecision = 50;

EvalResult evaluate(const ClassFunction& f, const Rational& q0, ClassFunction::Exponent r0,
                    int precision = kDefaultPrecision);

/// sum_{i=i0}^{i1} coeff(Q) * Q^(a i + b), Q = q^r. i1 = nullopt means infinity,
/// which requires a < 0 (DivergentSeries otherwise).
ClassFunction geometric_sum(const LaurentPoly& coeff, const Rational& a, const Rational& b, std::int64_t i0,
                            std::optional<std::int64_t> i1);

/// True iff f * (q^(c r) - 1) has no denominator on any residue class.
bool admissible_witness(const ClassFunction& f, const Rational& c);

}  // namespace gml
