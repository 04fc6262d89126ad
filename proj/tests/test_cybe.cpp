#include <gtest/gtest.h>

#include "support.hpp"

namespace qrcybe {
namespace {

using namespace test;

Tensor2 entry(CatalogName n, int rank = 2) { return catalog_entry(n, rank).matrix; }

/// Σ c_ij [x_i, a] ⊗ x_j for constant Ω, straight from the bracket table.
Tensor2 omega_bracket_left(const Tensor2& om, const GElement& a) {
  const LieTable& g = om.table();
  Tensor2 out(om.algebra());
  for (const auto& [ix, c] : om.terms()) {
    const GElement x = bracket(g, g.basis(ix.first), a);
    for (std::size_t k = 0; k < g.dim(); ++k)
      if (x[k] != 0) out.add(k, ix.second, c * RatFun(x[k]));
  }
  return out;
}

TEST(Calibration, UniqueSurvivorIsFour) {
  const CalibrationReport rep = calibration_report(make_sl(2));
  ASSERT_EQ(rep.survivors.size(), 1u) << rep.describe();
  EXPECT_EQ(rep.survivors.front(), Rational(4));
  EXPECT_EQ(calibrate_casimir(make_sl(2)).scale, Rational(4));
  EXPECT_EQ(calibrated_scale(), Rational(4));
  // The rational matrix alone cannot fix the scale; q2 can.
  for (const auto& c : rep.candidates) {
    EXPECT_EQ(c.eq5_residual_terms, 0u);
    EXPECT_EQ(c.q2_residual_terms == 0, c.scale == 4);
  }
}

TEST(Calibration, YangIsScaleIndependent) {
  const Algebra g = make_sl(2);
  for (const auto& c : calibration_candidates())
    EXPECT_TRUE(cyb(spectral_times(1 / (ru() - rv()), casimir(g, c))).is_zero());
}

TEST(Calibration, DrinfeldJimbo) {
  const Sl2 s;
  const CasimirSpec om = casimir(s.g, 4);
  const DjResult dj = dj_rmatrix(om);
  // Cartan part is symmetric and half of Ω's.
  EXPECT_EQ(dj.r.coeff(2, 2), RatFun(Rational(-1, 4)));
  EXPECT_EQ(dj.r + swap(dj.r), RatFun(dj.sign) * om.tensor);
  EXPECT_TRUE(cyb(spectral_times(rv() / (rv() - ru()), om) + dj.r).is_zero());
  // The orientation with r + swap(r) = +Ω fails the CYBE for this kernel.
  const Tensor2 plus = Tensor2::simple(s.g, s.e, s.f) + Tensor2::simple(s.g, s.h, s.h, RatFun(Rational(1, 4)));
  EXPECT_FALSE(cyb(spectral_times(rv() / (rv() - ru()), om) + plus).is_zero());
  for (int n = 2; n <= 3; ++n) {
    const Tensor2 r = dj_rmatrix(casimir(make_sl(n), 4)).r;
    const LieTable& g = r.table();
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (std::size_t b = 0; b < g.dim(); ++b)
        if (!g.label(a).is_positive_root() && !g.label(a).is_negative_root() && !g.label(b).is_positive_root() &&
            !g.label(b).is_negative_root())
          EXPECT_EQ(r.coeff(a, b), r.coeff(b, a));
  }
}

TEST(Catalog, CybResidualVanishes) {
  for (auto name : all_catalog_names()) EXPECT_TRUE(cyb(entry(name)).is_zero()) << to_string(name);
  for (auto name : {CatalogName::gamma2, CatalogName::gamma3, CatalogName::gamma4})
    for (int n = 3; n <= 4; ++n) EXPECT_TRUE(cyb(entry(name, n)).is_zero()) << to_string(name) << " n=" << n;
}

TEST(Catalog, Gamma4IsGamma2UnderInversion) {
  const Tensor2 g2 = entry(CatalogName::gamma2);
  const Tensor2 inv = g2.map_coefficients([](const RatFun& c) { return substitute(c, {{U, 1 / ru()}, {V, 1 / rv()}}); });
  EXPECT_EQ(inv, entry(CatalogName::gamma4));
}

TEST(Catalog, SingleTermNonSolution) {
  const Sl2 s;
  EXPECT_FALSE(cyb(Tensor2::simple(s.g, s.e, s.h)).is_zero());
}

TEST(Catalog, Sl2OnlyEntriesRejectOtherRanks) {
  EXPECT_THROW(catalog_entry(CatalogName::q1, 3), invalid_input);
  EXPECT_THROW(catalog_entry(CatalogName::eq5_rational, 4), invalid_input);
  EXPECT_EQ(catalog_name_from("q2"), CatalogName::q2);
  EXPECT_FALSE(catalog_name_from("q7").has_value());
}

TEST(QuasiRational, Catalog) {
  const CasimirSpec om = casimir(make_sl(2), calibrated_scale());
  for (auto name : {CatalogName::q0, CatalogName::q1, CatalogName::q2}) {
    const Tensor2 r = entry(name);
    EXPECT_TRUE(is_quasi_rational(r, om)) << to_string(name);
    const Tensor2 poly = r - quasi_rational_leading(om);
    EXPECT_TRUE(is_polynomial(poly));
    EXPECT_TRUE(is_skew(poly));
  }
  EXPECT_FALSE(is_quasi_rational(entry(CatalogName::eq5_rational), om));
  EXPECT_FALSE(quasi_rational_report(entry(CatalogName::eq5_rational), om).polynomial_part);
}

TEST(QuasiRational, NonSkewPolynomialPartRejected) {
  const Sl2 s;
  const CasimirSpec om = casimir(s.g, 4);
  const Tensor2 r = quasi_rational_leading(om) + Tensor2::simple(s.g, s.h, s.h);
  const QuasiRationalReport rep = quasi_rational_report(r, om);
  EXPECT_TRUE(rep.polynomial_part);
  EXPECT_FALSE(rep.skew_part);
  EXPECT_FALSE(rep.quasi_rational());
}

TEST(Cobracket, Gamma1IsZero) {
  const Sl2 s;
  EXPECT_TRUE(cobracket(entry(CatalogName::gamma1), GPoly::monomial(s.e, 3)).is_zero());
}

TEST(Cobracket, ConstantsHaveZeroCobracket) {
  const Sl2 s;
  for (std::size_t a = 0; a < 3; ++a)
    EXPECT_TRUE(cobracket(entry(CatalogName::gamma4), GPoly::monomial(s.g->basis(a), 0)).is_zero());
}

TEST(Cobracket, Gamma4LinearElement) {
  const Sl2 s;
  const Tensor2 om = casimir(s.g, calibrated_scale()).tensor;
  for (std::size_t a = 0; a < 3; ++a) {
    const GElement x = s.g->basis(a);
    const Tensor2 want = -(ru() * rv()) * omega_bracket_left(om, x);
    EXPECT_EQ(cobracket(entry(CatalogName::gamma4), GPoly::monomial(x, 1)), want);
  }
}

TEST(Cobracket, PoleIsReported) {
  const Sl2 s;
  const Tensor2 bad = Tensor2::simple(s.g, s.e, s.e, 1 / (ru() - rv()));
  EXPECT_THROW(cobracket(bad, GPoly::monomial(s.h, 0)), pole_error);
  EXPECT_THROW(cocycle_check(bad, GPoly::monomial(s.h, 0), GPoly::monomial(s.f, 0)), pole_error);
}

TEST(Cobracket, Gamma4DegreeBound) {
  const Sl2 s;
  for (int d = 0; d <= 5; ++d)
    for (std::size_t a = 0; a < 3; ++a) {
      const Tensor2 t = cobracket(entry(CatalogName::gamma4), GPoly::monomial(s.g->basis(a), d));
      for (const auto& [ix, c] : t.terms()) {
        EXPECT_TRUE(c.is_polynomial());
        EXPECT_LE(c.num().degree_in(U), d + 1);
        EXPECT_LE(c.num().degree_in(V), d + 1);
      }
    }
}

TEST(Bialgebra, CocycleExamples) {
  const Sl2 s;
  const Tensor2 g4 = entry(CatalogName::gamma4);
  EXPECT_TRUE(cocycle_check(g4, GPoly::monomial(s.e, 0), GPoly::monomial(s.f, 0)));
  EXPECT_TRUE(cocycle_check(g4, GPoly::monomial(s.e, 1), GPoly::monomial(s.f, 1)));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  std::uniform_int_distribution<int> deg(0, 3);
  const Tensor2 g3 = entry(CatalogName::gamma3);
  for (int i = 0; i < 10; ++i)
    EXPECT_TRUE(cocycle_check(g3, GPoly::monomial(s.g->basis(pick(rng)), deg(rng)),
                              GPoly::monomial(s.g->basis(pick(rng)), deg(rng))));
}

// A constant kernel with a non-invariant CYB residual breaks co-Jacobi.
TEST(Bialgebra, CoJacobiDetectsNonSolution) {
  const Sl2 s;
  const Tensor2 bad = Tensor2::simple(s.g, s.e, s.h);
  bool all = true;
  for (std::size_t a = 0; a < 3; ++a) all = all && cojacobi_check(bad, GPoly::monomial(s.g->basis(a), 0));
  EXPECT_FALSE(all);
}

TEST(Bialgebra, CoJacobi) {
  const Sl2 s;
  EXPECT_TRUE(cojacobi_check(entry(CatalogName::gamma4), GPoly::monomial(s.h, 0)));
  EXPECT_TRUE(cojacobi_check(entry(CatalogName::gamma2), GPoly::monomial(s.e, 2)));
  for (std::size_t a = 0; a < 3; ++a)
    EXPECT_TRUE(cojacobi_check(entry(CatalogName::gamma3), GPoly::monomial(s.g->basis(a), 2)));
}

}  // namespace
}  // namespace qrcybe
