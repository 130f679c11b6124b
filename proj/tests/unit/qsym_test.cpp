#include <gml/errors.hpp>
#include <gml/qsym.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace gml;

namespace {
ClassFunction Q(const Rational& e) { return ClassFunction::q_power(e); }
ClassFunction C(const Rational& c) { return ClassFunction::constant(c); }
ClassFunction inv_q_minus_one() { return divide(C(1), Q(1) - C(1)); }

ErrorKind kind_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Precondition;
}
}  // namespace

TEST(FromTerms, SingleMonomial) {
  const std::vector<ExpTerm> t = {{Rational(1), 0, Rational(1)}};
  const auto f = from_terms(1, t);
  EXPECT_EQ(f, Q(1));
  EXPECT_EQ(f.modulus(), 1);
  EXPECT_EQ(f.root_order(), 1);
  EXPECT_EQ(f.classes()[0].num(), LaurentPoly::monomial(Rational(1), 1));
}

TEST(FromTerms, SignCharacter) {
  const std::vector<ExpTerm> t = {{Rational(1), 1, Rational(0)}};
  const auto f = from_terms(2, t);
  ASSERT_EQ(f.modulus(), 2);
  EXPECT_EQ(f.at_residue(0), RationalFunction::constant(Rational(1)));
  EXPECT_EQ(f.at_residue(1), RationalFunction::constant(Rational(-1)));
  EXPECT_EQ(f.at_residue(7), RationalFunction::constant(Rational(-1)));
}

TEST(FromTerms, SimplePole) {
  const std::vector<ExpTerm> t = {{Rational(1), 0, Rational(0)}};
  const auto f = from_terms(1, t, Rational(1));
  EXPECT_EQ(f, inv_q_minus_one());
  LaurentPoly den;
  den.add_term(Rational(1), 1);
  den.add_term(Rational(-1), 0);
  EXPECT_EQ(f.classes()[0].den(), den);
}

TEST(FromTerms, CubeRootsSumToIndicator) {
  // 1 + w^r + w^(2r) is 3 on r = 0 mod 3 and 0 elsewhere.
  const std::vector<ExpTerm> t = {{Rational(1), 0, Rational(0)}, {Rational(1), 1, Rational(0)}, {Rational(1), 2, Rational(0)}};
  const auto f = from_terms(3, t);
  EXPECT_EQ(f.at_residue(0), RationalFunction::constant(Rational(3)));
  EXPECT_TRUE(f.at_residue(1).is_zero());
  EXPECT_TRUE(f.at_residue(2).is_zero());
  EXPECT_EQ(dual(f), f);
}

TEST(FromTerms, Errors) {
  const std::vector<ExpTerm> t = {{Rational(1), 0, Rational(0)}};
  EXPECT_EQ(kind_of([&] { from_terms(1, t, Rational(0)); }), ErrorKind::ZeroDenominatorExponent);
  const std::vector<ExpTerm> complex = {{Rational(1), 1, Rational(0)}};  // omega_3^r alone
  EXPECT_EQ(kind_of([&] { from_terms(3, complex); }), ErrorKind::NonRealInput);
  const std::vector<ExpTerm> i4 = {{Rational(1), 1, Rational(0)}};  // i^r
  EXPECT_EQ(kind_of([&] { from_terms(4, i4); }), ErrorKind::NonRealInput);
}

TEST(Canonical, ModulusAndRootOrderAreMinimal) {
  const auto f = ClassFunction(4, 6, std::vector<RationalFunction>(4, RationalFunction(LaurentPoly::monomial(Rational(2), 6))));
  EXPECT_EQ(f.modulus(), 1);
  EXPECT_EQ(f.root_order(), 1);
  EXPECT_EQ(f, Q(1).scaled(Rational(2)));
  EXPECT_EQ(Q(ratio(2, 4)).root_order(), 2);
}

TEST(Ring, Examples) {
  EXPECT_EQ(Q(1) + Q(-1), ClassFunction::polynomial_in_Q(LaurentPoly({{1, Rational(1)}, {-1, Rational(1)}})));
  EXPECT_EQ(inv_q_minus_one() * (Q(1) - C(1)), C(1));
  EXPECT_EQ((C(1) + Q(-1)).scale_pow(Rational(2)), Q(2) + Q(1));
  EXPECT_EQ(ring_op(RingOp::ScalePow, C(1) + Q(-1), {}, Rational(2)), Q(2) + Q(1));
  EXPECT_EQ(ring_op(RingOp::Add, Q(1), Q(-1)), Q(1) + Q(-1));
  EXPECT_EQ(ring_op(RingOp::Sub, Q(1), Q(1)), ClassFunction());
  EXPECT_EQ(ring_op(RingOp::Mul, Q(1), Q(-1)), C(1));
  EXPECT_EQ(ring_op(RingOp::Neg, Q(1)), -Q(1));
}

TEST(Ring, AlignsModuliAndRootOrders) {
  const std::vector<ExpTerm> sign = {{Rational(1), 1, Rational(0)}};
  const auto s2 = from_terms(2, sign);
  const std::vector<ExpTerm> third = {{Rational(2), 0, Rational(0)}, {Rational(-1), 1, Rational(0)}, {Rational(-1), 2, Rational(0)}};
  const auto s3 = from_terms(3, third);  // 3 on r = 0 mod 3, 0 elsewhere
  const auto prod = s2 * s3 * Q(Rational(1, 2)) * Q(Rational(1, 3));
  EXPECT_EQ(prod.modulus(), 6);
  EXPECT_EQ(prod.root_order(), 6);
  EXPECT_EQ(prod * prod, s3 * s3 * Q(Rational(5, 3)));
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(Q(1)), Q(-1));
  EXPECT_EQ(dual(Q(1) + Q(Rational(1, 2))), Q(-1) + Q(Rational(-1, 2)));
  const Rational n(3);
  const auto den = C(1) - Q(1 - n);
  EXPECT_EQ(dual(C(1) + divide(Q(1) - C(1), den)), C(1) + divide((Q(1) - C(1)) * Q(-n), den));
  EXPECT_EQ(dual(inv_q_minus_one()), divide(-Q(1), Q(1) - C(1)));
}

TEST(Evaluate, ExactExamples) {
  auto e = evaluate(C(1) + Q(-1), Rational(2), 3);
  ASSERT_TRUE(e.exact);
  EXPECT_EQ(*e.exact, Rational(9, 8));
  EXPECT_EQ(e.error_bound(), "0");
  e = evaluate(C(1) + Q(-1).scaled(Rational(2)) + Q(-2).scaled(Rational(2)), Rational(3), 1);
  EXPECT_EQ(*e.exact, Rational(17, 9));
  e = evaluate(Q(1) + Q(Rational(1, 2)), Rational(4), 1);
  EXPECT_EQ(*e.exact, Rational(6));
  e = evaluate(Q(Rational(1, 3)), Rational(27, 8), 2);
  EXPECT_EQ(*e.exact, Rational(9, 4));
}

TEST(Evaluate, DecimalWhenIrrational) {
  const auto e = evaluate(Q(Rational(1, 2)), Rational(2), 1, 30);
  EXPECT_FALSE(e.is_exact());
  EXPECT_EQ(e.digits, 30);
  EXPECT_EQ(e.decimal.substr(0, 20), "1.414213562373095048");
  EXPECT_NEAR(static_cast<double>(oracle::as_long_double(e)), 1.4142135623730951, 1e-15);
  const auto hi = evaluate(Q(Rational(1, 2)), Rational(2), 1, 80);
  EXPECT_EQ(hi.decimal.substr(0, 60), "1.4142135623730950488016887242096980785696718753769480731766");
}

TEST(Evaluate, UsesResidueClass) {
  const std::vector<ExpTerm> sign = {{Rational(1), 1, Rational(0)}};
  const auto f = from_terms(2, sign) * Q(1);
  EXPECT_EQ(*evaluate(f, Rational(3), 1).exact, Rational(-3));
  EXPECT_EQ(*evaluate(f, Rational(3), 2).exact, Rational(9));
}

TEST(Evaluate, Poles) {
  EXPECT_EQ(kind_of([] { evaluate(inv_q_minus_one(), Rational(1), 1); }), ErrorKind::InvalidParams);
  const auto f = divide(C(1), Q(Rational(1, 2)) - C(1));
  EXPECT_EQ(kind_of([] { evaluate(divide(C(1), Q(1) - C(4)), Rational(2), 2); }), ErrorKind::PoleAtEvaluationPoint);
  EXPECT_NO_THROW(evaluate(f, Rational(2), 1));
  EXPECT_EQ(kind_of([] { evaluate(divide(C(1), Q(Rational(1, 2)) - C(2)), Rational(2), 2); }),
            ErrorKind::PoleAtEvaluationPoint);
}

TEST(GeometricSum, Examples) {
  const LaurentPoly q_minus_one({{1, Rational(1)}, {0, Rational(-1)}});
  EXPECT_EQ(geometric_sum(q_minus_one, Rational(-1), Rational(0), 1, std::nullopt), C(1));
  EXPECT_EQ(geometric_sum(q_minus_one, Rational(-1), Rational(-1), 1, std::nullopt), Q(-1));
  EXPECT_EQ(kind_of([] { geometric_sum(LaurentPoly::constant(Rational(1)), Rational(1), Rational(0), 1, std::nullopt); }),
            ErrorKind::DivergentSeries);
  EXPECT_EQ(kind_of([] { geometric_sum(LaurentPoly::constant(Rational(1)), Rational(0), Rational(0), 1, std::nullopt); }),
            ErrorKind::DivergentSeries);
  // Finite ranges, including empty ones and the ratio-one case.
  EXPECT_EQ(geometric_sum(LaurentPoly::constant(Rational(1)), Rational(0), Rational(0), 1, 5), C(5));
  EXPECT_EQ(geometric_sum(LaurentPoly::constant(Rational(1)), Rational(1), Rational(0), 0, 2), C(1) + Q(1) + Q(2));
  EXPECT_TRUE(geometric_sum(LaurentPoly::constant(Rational(1)), Rational(1), Rational(0), 3, 2).is_zero());
  EXPECT_EQ(geometric_sum(LaurentPoly::constant(Rational(1)), Rational(-1, 2), Rational(0), 0, std::nullopt),
            divide(C(1), C(1) - Q(Rational(-1, 2))));
}

TEST(AdmissibleWitness, Examples) {
  EXPECT_TRUE(admissible_witness(inv_q_minus_one(), Rational(1)));
  EXPECT_FALSE(admissible_witness(inv_q_minus_one() * inv_q_minus_one(), Rational(1)));
  EXPECT_FALSE(admissible_witness(inv_q_minus_one() * inv_q_minus_one(), Rational(6)));
  EXPECT_TRUE(admissible_witness(Q(1) + C(1), Rational(1)));
  EXPECT_TRUE(admissible_witness(inv_q_minus_one(), Rational(3)));
  EXPECT_FALSE(admissible_witness(inv_q_minus_one(), Rational(1, 2)));
  EXPECT_TRUE(admissible_witness(divide(C(1), Q(Rational(1, 2)) - C(1)), Rational(1)));
}

TEST(ClassFunction, Printing) {
  EXPECT_EQ((Q(2) + Q(1).scaled(Rational(3)) - C(1)).to_string(), "Q^2 + 3*Q - 1");
  EXPECT_EQ(ClassFunction().to_string(), "0");
  const std::vector<ExpTerm> sign = {{Rational(1), 1, Rational(0)}};
  EXPECT_EQ(from_terms(2, sign).to_string(), "[r=0 mod 2] 1; [r=1 mod 2] -1");
}
