#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

namespace qrcybe {
namespace {

using namespace test;

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(QRCYBE_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Tensor2 parsed(std::string_view text) { return parse_rmatrix(text).tensor(); }

TEST(Document, ParsesQ1) {
  EXPECT_EQ(parsed("algebra sl(2); u*v/(v-u)*Omega + 1*e(x)h - 1*h(x)e"), catalog_entry(CatalogName::q1).matrix);
}

TEST(Document, SingleTerm) {
  const Sl2 s;
  EXPECT_EQ(parsed("algebra sl(2); (1/2)*h(x)e"), Tensor2::simple(s.g, s.h, s.e, RatFun(Rational(1, 2))));
}

TEST(Document, OmegaUsesCalibratedScale) {
  EXPECT_EQ(parsed("algebra sl(2); Omega"), casimir(make_sl(2), calibrated_scale()).tensor);
  EXPECT_EQ(parsed("algebra sl(3); 1/(u-v)*Omega"), catalog_entry(CatalogName::gamma2, 3).matrix);
}

TEST(Document, AliasesOnlyForSl2) {
  EXPECT_THROW(parse_rmatrix("algebra sl(3); e(x)f"), parse_error);
  EXPECT_NO_THROW(parse_rmatrix("algebra sl(3); E(1,2)(x)H(2)"));
}

TEST(Document, Errors) {
  EXPECT_THROW(parse_rmatrix("algebra sl(3); E(4,1)(x)H(1)"), parse_error);
  EXPECT_THROW(parse_rmatrix("algebra sl(3); E(1,1)(x)H(1)"), parse_error);
  EXPECT_THROW(parse_rmatrix("algebra sl(2); H(2)(x)e"), parse_error);
  EXPECT_THROW(parse_rmatrix("algebra so(3); Omega"), parse_error);
  EXPECT_THROW(parse_rmatrix("algebra sl(2); e(x)"), parse_error);
  EXPECT_THROW(parse_rmatrix("algebra sl(2); 1/(u-u)*e(x)f"), invalid_input);
  try {
    parse_rmatrix(slurp("rmatrices/broken.rm"));
    FAIL() << "stray token accepted";
  } catch (const parse_error& e) {
    EXPECT_NE(std::string(e.what()).find("2:27"), std::string::npos) << e.what();
  }
}

TEST(Document, DataFilesMatchCatalog) {
  EXPECT_EQ(parsed(slurp("rmatrices/q0.rm")), catalog_entry(CatalogName::q0).matrix);
  EXPECT_EQ(parsed(slurp("rmatrices/q1.rm")), catalog_entry(CatalogName::q1).matrix);
  EXPECT_EQ(parsed(slurp("rmatrices/q2.rm")), catalog_entry(CatalogName::q2).matrix);
  EXPECT_EQ(parsed(slurp("rmatrices/eq5_rational.rm")), catalog_entry(CatalogName::eq5_rational).matrix);
}

void expect_round_trip(const Tensor2& t, const std::string& label) {
  const std::string text = print_rmatrix(t);
  const Tensor2 back = parsed(text);
  EXPECT_EQ(back, t) << label << "\n" << text;
  EXPECT_EQ(print_rmatrix(back), text) << label;
}

TEST(Document, CatalogRoundTrip) {
  for (auto name : all_catalog_names()) {
    expect_round_trip(catalog_entry(name).matrix, std::string(to_string(name)));
    if (!is_sl2_only(name)) expect_round_trip(catalog_entry(name, 3).matrix, std::string(to_string(name)) + " n=3");
  }
}

TEST(Document, RandomDocumentsRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const std::string doc = random_document(n, seed);
    expect_round_trip(parsed(doc), "seed " + std::to_string(seed) + "\n" + doc);
  }
}

TEST(Document, ZeroTensorPrints) {
  const Algebra g = make_sl(2);
  EXPECT_TRUE(parsed(print_rmatrix(Tensor2(g))).is_zero());
}

TEST(Fixtures, Frobenius) {
  const FrobeniusFixture b = parse_frobenius_fixture(slurp("frobenius/borel_eh.frob"));
  EXPECT_EQ(b.sub.size(), 2u);
  EXPECT_FALSE(b.k.has_value());
  const FrobeniusFixture f = parse_frobenius_fixture(slurp("frobenius/sl2_f_k1.frob"));
  EXPECT_EQ(f.k, 1);
  const Sl2 s;
  EXPECT_EQ(f.form, cocycle_from_functional(s.g, f.sub, s.f).matrix());
  EXPECT_THROW(parse_frobenius_fixture("algebra sl(2); basis e, h; form [0, 1; -1];"), parse_error);
  EXPECT_THROW(parse_frobenius_fixture("algebra sl(2); form [0];"), parse_error);
}

TEST(Fixtures, Subspaces) {
  const SubspaceFixture p = parse_subspace_fixture(slurp("subspaces/pstar_sl2.d4"));
  const Window w(-8, 4);
  const SubspaceBasis built = p.build(Window(-2, 1));
  EXPECT_EQ(built.ambient().window(), w);
  EXPECT_EQ(built, pstar_model(make_ambient(make_sl(2), DoubleKind::d4, w)));

  const SubspaceFixture q = parse_subspace_fixture(slurp("subspaces/q1_lagrangian.d4"));
  const Sl2 s;
  const Tensor2 r = Tensor2::simple(s.g, s.e, s.h) - Tensor2::simple(s.g, s.h, s.e);
  EXPECT_EQ(q.build(w), lagrangian_from_constant_r(r, calibrated_scale(), w));
  EXPECT_THROW(parse_subspace_fixture("algebra sl(2); window 1 2;"), parse_error);
  EXPECT_THROW(parse_subspace_fixture("algebra sl(2); element [ e | e ];"), parse_error);
}

TEST(Fixtures, GaugeAndMonomials) {
  const Algebra g = make_sl(2);
  EXPECT_EQ(parse_gauge("unip(e,1,1)", g), PolyGroupElement::unip(2, 1, 2, 1, 1));
  EXPECT_EQ(parse_gauge("unip(E(1,2),0,2) * unip(f,2,-1/3)", g),
            PolyGroupElement::unip(2, 1, 2, 0, 2) * PolyGroupElement::unip(2, 2, 1, 2, Rational(-1, 3)));
  EXPECT_THROW(parse_gauge("unip(h,1,1)", g), invalid_input);
  EXPECT_EQ(parse_loop_monomial("f:u^3", g), GPoly::monomial(g->basis(1), 3));
  EXPECT_THROW(parse_loop_monomial("f:u^-1", g), parse_error);
}

}  // namespace
}  // namespace qrcybe
