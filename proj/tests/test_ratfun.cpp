#include <gtest/gtest.h>

#include "support.hpp"

namespace qrcybe {
namespace {

using namespace test;

TEST(RatFun, CommonDenominatorCancels) {
  EXPECT_EQ(ru() / (rv() - ru()) + rv() / (ru() - rv()), RatFun(-1));
}

TEST(RatFun, ZeroIsAbsorbing) { EXPECT_TRUE((ru() * rv() / (rv() - ru()) * RatFun(0)).is_zero()); }

TEST(RatFun, AdditiveInverse) { EXPECT_TRUE((1 / (ru() - rv()) + 1 / (rv() - ru())).is_zero()); }

TEST(RatFun, ReducedFormIsCanonical) {
  const RatFun a = (ru() * ru() - rv() * rv()) / (ru() - rv());
  EXPECT_TRUE(a.is_polynomial());
  EXPECT_EQ(a, ru() + rv());
  const RatFun b = (2 * ru() + 2) / (4 * rv());
  EXPECT_EQ(b.den().leading_coeff(), Rational(1));
  EXPECT_EQ(b, (ru() + 1) / (2 * rv()));
}

TEST(RatFun, GcdFindsCommonFactor) {
  const Poly u = Poly::variable(U), v = Poly::variable(V);
  const Poly g = gcd((u - v) * (u + 1), (u - v) * (v + 2));
  EXPECT_EQ(g.monic(), (u - v).monic());
  EXPECT_EQ(gcd(u * u - 1, u + 1).monic(), u + 1);
  EXPECT_TRUE(gcd(u + v, u - v).is_constant());
}

// Field operations agree with evaluation at rational points done in plain
// mpq arithmetic.
TEST(RatFun, ArithmeticMatchesPointEvaluation) {
  std::mt19937_64 rng(12345);
  const std::vector<std::map<std::uint32_t, Rational>> points{
      {{U.id(), Rational(3, 7)}, {V.id(), Rational(-5, 2)}},
      {{U.id(), Rational(11)}, {V.id(), Rational(2, 9)}},
      {{U.id(), Rational(-1, 3)}, {V.id(), Rational(17, 4)}}};
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3);
    const Poly c = random_poly(rng, 2, 3), d = random_poly(rng, 2, 3);
    if (b.is_zero() || d.is_zero() || c.is_zero()) continue;
    const RatFun x = RatFun(a, b), y = RatFun(c, d);
    const RatFun sum = x + y, prod = x * y, quot = x / y;
    for (const auto& pt : points) {
      const Rational bb = eval_poly(b, pt), dd = eval_poly(d, pt), cc = eval_poly(c, pt);
      if (bb == 0 || dd == 0 || cc == 0) continue;
      const Rational xv = eval_poly(a, pt) / bb, yv = cc / dd;
      EXPECT_EQ(eval_ratfun(sum, pt), xv + yv);
      EXPECT_EQ(eval_ratfun(prod, pt), xv * yv);
      EXPECT_EQ(eval_ratfun(quot, pt), xv / yv);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(RatFun, RenamingToSlotVariables) {
  const Var u1 = Var::u1(), u2 = Var::u2();
  const RatFun a = ru() * rv() / (rv() - ru());
  const RatFun b = a.rename({{U, u1}, {V, u2}});
  EXPECT_EQ(b, RatFun::var(u1) * RatFun::var(u2) / (RatFun::var(u2) - RatFun::var(u1)));
}

TEST(RatFun, SubstitutionKillingTheDenominatorThrows) {
  EXPECT_THROW(substitute(1 / (ru() - rv()), {{U, rv()}}), invalid_input);
}

TEST(RatFun, InversionSubstitution) {
  EXPECT_EQ(substitute(ru(), {{U, 1 / ru()}}), 1 / ru());
  EXPECT_EQ(substitute(ru() * ru() + rv(), {{U, 1 / ru()}}), (1 + ru() * ru() * rv()) / (ru() * ru()));
}

TEST(RatFun, DivisionByZeroThrows) { EXPECT_THROW(ru() / RatFun(0), invalid_input); }

TEST(RatFun, ParseAndPrint) {
  EXPECT_EQ(parse_ratfun("u*v/(v-u)"), ru() * rv() / (rv() - ru()));
  EXPECT_EQ(parse_ratfun("(1/2)*u^2 - 3"), RatFun(Rational(1, 2)) * ru() * ru() - 3);
  EXPECT_EQ(parse_ratfun(to_string(ru() * rv() / (rv() - ru()))), ru() * rv() / (rv() - ru()));
  EXPECT_THROW(parse_ratfun("u*/v"), parse_error);
}

TEST(Laurent, GeometricSeriesOfQuasiRationalKernel) {
  const LaurentPoly p = expand_at_infinity(ru() * rv() / (rv() - ru()), V, 2);
  EXPECT_EQ(p.coeff(0), ru());
  EXPECT_EQ(p.coeff(-1), ru() * ru());
  EXPECT_EQ(p.coeff(-2), ru() * ru() * ru());
  EXPECT_EQ(p.terms().size(), 3u);
}

TEST(Laurent, RationalKernel) {
  const LaurentPoly p = expand_at_infinity(1 / (ru() - rv()), V, 2);
  EXPECT_EQ(p.coeff(-1), RatFun(-1));
  EXPECT_EQ(p.coeff(-2), -ru());
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_EQ(expand_at_infinity(1 / (ru() - rv()), V, 1).terms().size(), 1u);
}

TEST(Laurent, NoVariableDependence) {
  const LaurentPoly p = expand_at_infinity(ru() * ru(), V, 5);
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coeff(0), ru() * ru());
}

// 1/(v-u)^2 = Σ (m+1) u^m v^(-m-2), checked against the binomial formula.
TEST(Laurent, DoublePoleMatchesBinomialSeries) {
  const RatFun a = 1 / ((rv() - ru()) * (rv() - ru()));
  const int order = 9;
  const LaurentPoly p = expand_at_infinity(a, V, order);
  for (int m = 0; m + 2 <= order; ++m) EXPECT_EQ(p.coeff(-m - 2), RatFun(m + 1) * ru().pow(m)) << m;
  EXPECT_TRUE(p.coeff(0).is_zero());
  EXPECT_TRUE(p.coeff(-1).is_zero());
}

// Multiplying the truncated series back by the denominator reproduces the
// numerator up to the truncation.
TEST(Laurent, TruncatedSeriesTimesDenominator) {
  const RatFun a = (ru() * ru() + 3 * rv()) / (rv() * rv() - 2 * ru() * rv() + 5);
  const int order = 8;
  const LaurentPoly p = expand_at_infinity(a, V, order);
  LaurentPoly den(V);
  den.add_term(2, RatFun(1));
  den.add_term(1, -2 * ru());
  den.add_term(0, RatFun(5));
  const LaurentPoly back = p * den;
  EXPECT_EQ(back.coeff(1), RatFun(3));
  EXPECT_EQ(back.coeff(0), ru() * ru());
  for (int k = -1; k >= 2 - order; --k) EXPECT_TRUE(back.coeff(k).is_zero()) << k;
}

TEST(Laurent, Coefficients) {
  LaurentPoly p(U);
  p.add_term(-1, RatFun(3));
  p.add_term(1, RatFun(5));
  EXPECT_EQ(laurent_coeff(p, U, -1), RatFun(3));
  LaurentPoly q(U);
  q.add_term(2, RatFun(1));
  EXPECT_TRUE(laurent_coeff(q, U, -1).is_zero());
  EXPECT_THROW(laurent_coeff(q, V, 0), invalid_input);
}

TEST(Laurent, CoefficientFromKillingValue) {
  const Sl2 s;
  LaurentPoly p(U);
  p.add_term(1, RatFun(killing(*s.g, s.e, s.f)));
  EXPECT_EQ(laurent_coeff(p, U, 1), RatFun(4));
}

TEST(Laurent, BelowFloorThrows) {
  const LaurentPoly p = expand_at_infinity(1 / (ru() - rv()), V, 2);
  EXPECT_THROW(laurent_coeff(p, V, -3), invalid_input);
  EXPECT_THROW(expand_at_infinity(ru(), V, -1), invalid_input);
}

}  // namespace
}  // namespace qrcybe
