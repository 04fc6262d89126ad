#include <gtest/gtest.h>

#include "support.hpp"

namespace qrcybe {
namespace {

using namespace test;

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

TEST(TwoCocycle, Validation) {
  const Sl2 s;
  const GSubspace eh = GSubspace::spanned_by(3, {s.e, s.h});
  EXPECT_NO_THROW(TwoCocycle(s.g, eh, mat({{0, 1}, {-1, 0}})));
  EXPECT_THROW(TwoCocycle(s.g, eh, mat({{0, 1}, {1, 0}})), invalid_input);
  EXPECT_THROW(TwoCocycle(s.g, eh, mat({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}})), invalid_input);
  const GSubspace ef = GSubspace::spanned_by(3, {s.e, s.f});
  EXPECT_THROW(TwoCocycle(s.g, ef, mat({{0, 1}, {-1, 0}})), invalid_input);
  // B(E13, H1) = 1 on span{E12, E23, E13, H1} violates the cocycle identity.
  const Algebra g3 = make_sl(3);
  auto at = [&](int i, int j) { return g3->basis(*g3->index_of({BasisLabel::Kind::root, i, j})); };
  // kept in the listed order; spanned_by would echelonize it
  const GSubspace l(8, {at(1, 2), at(2, 3), at(1, 3), g3->basis(6)});
  EXPECT_THROW(TwoCocycle(g3, l, mat({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}})), invalid_input);
}

TEST(Frobenius, BorelGivesQ1ConstantPart) {
  const Sl2 s;
  const TwoCocycle B(s.g, GSubspace::spanned_by(3, {s.e, s.h}), mat({{0, 1}, {-1, 0}}));
  const FrobeniusR fr = skew_r_with_convention(B);
  EXPECT_EQ(fr.convention, FrobeniusConvention::transpose_inverse);
  EXPECT_EQ(fr.r, Tensor2::simple(s.g, s.e, s.h) - Tensor2::simple(s.g, s.h, s.e));
  EXPECT_TRUE(cyb(fr.r).is_zero());
  const CasimirSpec om = casimir(s.g, calibrated_scale());
  EXPECT_EQ(quasi_rational_lift(B, om), catalog_entry(CatalogName::q1).matrix);
}

TEST(Frobenius, ScalingTheForm) {
  const Sl2 s;
  const TwoCocycle B(s.g, GSubspace::spanned_by(3, {s.e, s.h}), mat({{0, 2}, {-2, 0}}));
  const Tensor2 r = skew_r_from_frobenius(B);
  EXPECT_EQ(r, RatFun(Rational(1, 2)) * (Tensor2::simple(s.g, s.e, s.h) - Tensor2::simple(s.g, s.h, s.e)));
  EXPECT_TRUE(cyb(r).is_zero());
}

TEST(Frobenius, EmptySubalgebraGivesQ0) {
  const Sl2 s;
  const TwoCocycle B(s.g, GSubspace::spanned_by(3, {}), QMatrix(0, 0));
  EXPECT_TRUE(skew_r_from_frobenius(B).is_zero());
  EXPECT_EQ(quasi_rational_lift(B, casimir(s.g, calibrated_scale())), catalog_entry(CatalogName::q0).matrix);
}

TEST(Frobenius, Sl3BorelLikeExample) {
  // L = span{H1, H2, E12, E13} with functional K(E21 + E31, ·).  E31 alone
  // kills every bracket landing in E12, so both roots are needed.
  const Algebra g = make_sl(3);
  auto at = [&](int i, int j) { return g->basis(*g->index_of({BasisLabel::Kind::root, i, j})); };
  const GSubspace l = GSubspace::spanned_by(8, {g->basis(6), g->basis(7), at(1, 2), at(1, 3)});
  ASSERT_TRUE(is_subalgebra(*g, l));
  const TwoCocycle B = cocycle_from_functional(g, l, at(2, 1) + at(3, 1));
  ASSERT_NE(determinant(B.matrix()), Rational(0));
  EXPECT_EQ(determinant(cocycle_from_functional(g, l, at(3, 1)).matrix()), Rational(0));
  const Tensor2 r = skew_r_from_frobenius(B);
  EXPECT_TRUE(is_skew(r));
  EXPECT_TRUE(cyb(r).is_zero());
  EXPECT_TRUE(is_quasi_rational(quasi_rational_lift(B, casimir(g, 4)), casimir(g, 4)));
}

TEST(ParabolicPair, Sl2WithFunctionalF) {
  const Sl2 s;
  const GSubspace all = GSubspace::spanned_by(3, {s.e, s.f, s.h});
  const TwoCocycle B = cocycle_from_functional(s.g, all, s.f);
  // oracle: K from traces, bracket from matrices
  EXPECT_EQ(B(s.e, s.h), trace_killing(*s.g, s.f, matrix_bracket(*s.g, s.e, s.h)));
  EXPECT_EQ(B(s.e, s.h), Rational(-8));
  const ParabolicPairReport rep = check_theorem5_pair(B, 1);
  EXPECT_TRUE(rep.all());
  EXPECT_EQ(rep.intersection_dim, 2u);
  EXPECT_EQ(rep.restricted_determinant, Rational(64));
}

TEST(ParabolicPair, BorelDoesNotSumToG) {
  const Sl2 s;
  const TwoCocycle B(s.g, GSubspace::spanned_by(3, {s.e, s.h}), mat({{0, 1}, {-1, 0}}));
  EXPECT_FALSE(check_theorem5_pair(B, 1).sums_to_g);
}

TEST(ParabolicPair, ZeroFormIsDegenerate) {
  const Sl2 s;
  const TwoCocycle B(s.g, GSubspace::spanned_by(3, {s.e, s.f, s.h}), QMatrix(3, 3));
  const ParabolicPairReport rep = check_theorem5_pair(B, 1);
  EXPECT_TRUE(rep.sums_to_g);
  EXPECT_FALSE(rep.nondegenerate_on_intersection);
  EXPECT_THROW(check_theorem5_pair(B, 2), invalid_input);
}

TEST(Frobenius, DegenerateFormRejected) {
  const Sl2 s;
  const TwoCocycle B = cocycle_from_functional(s.g, GSubspace::spanned_by(3, {s.e, s.f, s.h}), s.f);
  EXPECT_THROW(skew_r_from_frobenius(B), invalid_input);
}

}  // namespace
}  // namespace qrcybe
