#include <gtest/gtest.h>

#include "support.hpp"

namespace qrcybe {
namespace {

using namespace test;

// Matrix oracle: a tensor over sl(n) evaluated at a point becomes an operator
// on V⊗V⊗V (V the defining representation), built from Kronecker products.

using Point = std::map<std::uint32_t, Rational>;

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0)
        for (std::size_t p = 0; p < b.rows(); ++p)
          for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

QMatrix scaled(const QMatrix& m, const Rational& c) {
  QMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= c;
  return out;
}

QMatrix minus(const QMatrix& a, const QMatrix& b) { return a + scaled(b, -1); }

/// r(x, y) placed on legs (i, j) of V⊗V⊗V.
QMatrix leg_operator(const Tensor2& r, int i, int j, const Rational& x, const Rational& y) {
  const LieTable& g = r.table();
  const std::size_t n = static_cast<std::size_t>(g.n());
  const QMatrix id = QMatrix::identity(n);
  QMatrix total(n * n * n, n * n * n);
  const Point pt{{U.id(), x}, {V.id(), y}};
  for (const auto& [ix, c] : r.terms()) {
    std::array<QMatrix, 3> f{id, id, id};
    f[i] = g.to_matrix(g.basis(ix.first));
    f[j] = g.to_matrix(g.basis(ix.second));
    total = total + scaled(kron(kron(f[0], f[1]), f[2]), eval_ratfun(c, pt));
  }
  return total;
}

QMatrix tensor3_operator(const Tensor3& t, const std::array<Rational, 3>& at) {
  const LieTable& g = t.table();
  const std::size_t n = static_cast<std::size_t>(g.n());
  QMatrix total(n * n * n, n * n * n);
  const Point pt{{Var::u1().id(), at[0]}, {Var::u2().id(), at[1]}, {Var::u3().id(), at[2]}};
  for (const auto& [ix, c] : t.terms())
    total = total + scaled(kron(kron(g.to_matrix(g.basis(ix[0])), g.to_matrix(g.basis(ix[1]))),
                                g.to_matrix(g.basis(ix[2]))),
                           eval_ratfun(c, pt));
  return total;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return minus(a * b, b * a); }

QMatrix cyb_oracle(const Tensor2& r, const std::array<Rational, 3>& x) {
  const QMatrix r12 = leg_operator(r, 0, 1, x[0], x[1]);
  const QMatrix r13 = leg_operator(r, 0, 2, x[0], x[2]);
  const QMatrix r23 = leg_operator(r, 1, 2, x[1], x[2]);
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

const std::array<Rational, 3> kPoint{Rational(2, 3), Rational(-7, 5), Rational(9, 4)};

TEST(Tensor, EmbedRenamesSlots) {
  const Sl2 s;
  const Tensor2 r = Tensor2::simple(s.g, s.e, s.h, ru() * rv() + 1);
  const EmbeddedTensor t = embed(r, Legs::l13);
  EXPECT_EQ(t.tensor.coeff(0, 2), RatFun::var(Var::u1()) * RatFun::var(Var::u3()) + 1);
  EXPECT_TRUE(embed(Tensor2(s.g), Legs::l12).tensor.is_zero());
  EXPECT_EQ(embed(swap(r), Legs::l12), swap_legs12(embed(r, Legs::l12)));
}

TEST(Tensor, SingleTermLegBracket) {
  const Sl2 s;
  const Tensor3 t = leg_bracket(Tensor2::simple(s.g, s.e, s.h), Tensor2::simple(s.g, s.f, s.e), LegPair::p12_13);
  // [e,f] ⊗ h ⊗ e = h⊗h⊗e
  EXPECT_EQ(t.term_count(), 1u);
  EXPECT_EQ(t.coeff({2, 2, 0}), RatFun(1));
  EXPECT_TRUE(leg_bracket(Tensor2::simple(s.g, s.e, s.h), Tensor2(s.g), LegPair::p12_23).is_zero());
}

TEST(Tensor, CasimirLegBracketsCancel) {
  for (int n = 2; n <= 3; ++n) {
    const Tensor2 om = casimir(make_sl(n), calibrated_scale()).tensor;
    EXPECT_TRUE((leg_bracket(om, om, LegPair::p12_13) + leg_bracket(om, om, LegPair::p12_23)).is_zero());
  }
}

TEST(Tensor, LegBracketsMatchMatrixOracle) {
  const Algebra g = make_sl(3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, g->dim() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 6; ++trial) {
    Tensor2 r(g), s(g);
    for (int k = 0; k < 4; ++k) {
      r.add(pick(rng), pick(rng), RatFun(coef(rng)) * ru() + RatFun(coef(rng)) * rv());
      s.add(pick(rng), pick(rng), RatFun(coef(rng)) + ru() * rv());
    }
    const std::array<std::pair<LegPair, std::array<std::array<int, 2>, 2>>, 3> cases{
        {{LegPair::p12_13, {{{0, 1}, {0, 2}}}},
         {LegPair::p12_23, {{{0, 1}, {1, 2}}}},
         {LegPair::p13_23, {{{0, 2}, {1, 2}}}}}};
    for (const auto& [pair, legs] : cases) {
      const auto [a, b] = legs;
      const QMatrix ra = leg_operator(r, a[0], a[1], kPoint[a[0]], kPoint[a[1]]);
      const QMatrix sb = leg_operator(s, b[0], b[1], kPoint[b[0]], kPoint[b[1]]);
      EXPECT_EQ(tensor3_operator(leg_bracket(r, s, pair), kPoint), commutator(ra, sb));
    }
  }
}

TEST(Tensor, Swap) {
  const Sl2 s;
  const Tensor2 skew = Tensor2::simple(s.g, s.e, s.h) - Tensor2::simple(s.g, s.h, s.e);
  EXPECT_EQ(swap(skew), -skew);
  const Tensor2 q0 = catalog_entry(CatalogName::q0).matrix;
  EXPECT_EQ(swap(q0), -q0);
  EXPECT_EQ(swap(Tensor2::simple(s.g, s.e, s.f, ru())), Tensor2::simple(s.g, s.f, s.e, rv()));
}

TEST(Tensor, Ad2Action) {
  const Sl2 s;
  const Tensor2 om = casimir(s.g, 4).tensor;
  for (std::size_t a = 0; a < 3; ++a) EXPECT_TRUE(ad2_action(GPoly::monomial(s.g->basis(a), 0), om).is_zero());
  EXPECT_TRUE(ad2_action(GPoly::monomial(s.h, 0), Tensor2::simple(s.g, s.e, s.f)).is_zero());
  EXPECT_TRUE(ad2_action(GPoly::monomial(s.e, 3), Tensor2(s.g)).is_zero());
  // [e u ⊗ 1 + 1 ⊗ e v, f ⊗ f] = u h⊗f + v f⊗h
  const Tensor2 t = ad2_action(GPoly::monomial(s.e, 1), Tensor2::simple(s.g, s.f, s.f));
  EXPECT_EQ(t, Tensor2::simple(s.g, s.h, s.f, ru()) + Tensor2::simple(s.g, s.f, s.h, rv()));
}

TEST(Tensor, Predicates) {
  const Sl2 s;
  EXPECT_TRUE(is_skew(Tensor2::simple(s.g, s.e, s.h) - Tensor2::simple(s.g, s.h, s.e)));
  EXPECT_FALSE(is_polynomial(catalog_entry(CatalogName::q0).matrix));
  const Tensor2 q2 = catalog_entry(CatalogName::q2).matrix;
  EXPECT_TRUE(is_zero(q2 - q2));
}

TEST(Tensor, MixedAlgebrasRejected) {
  EXPECT_THROW(casimir(make_sl(2), 1).tensor + casimir(make_sl(3), 1).tensor, invalid_input);
}

// The structure-constant CYB agrees with the matrix oracle pointwise.
TEST(Tensor, CybMatchesMatrixOracle) {
  const Sl2 s;
  std::vector<Tensor2> rs{catalog_entry(CatalogName::q1).matrix, catalog_entry(CatalogName::eq5_rational).matrix,
                          Tensor2::simple(s.g, s.e, s.h), Tensor2::simple(s.g, s.e, s.f, ru()) + Tensor2::simple(s.g, s.h, s.h, rv())};
  rs.push_back(Tensor2::simple(make_sl(3), make_sl(3)->basis(0), make_sl(3)->basis(7), ru() - 2 * rv()));
  for (const auto& r : rs) EXPECT_EQ(tensor3_operator(cyb(r), kPoint), cyb_oracle(r, kPoint));
}

TEST(Tensor, CatalogCybZeroAtOraclePoints) {
  for (auto name : all_catalog_names()) {
    const Tensor2 r = catalog_entry(name).matrix;
    const QMatrix z = cyb_oracle(r, kPoint);
    EXPECT_EQ(z, QMatrix(z.rows(), z.cols())) << to_string(name);
  }
}

}  // namespace
}  // namespace qrcybe
