#pragma once

// Independent oracles shared by the unit tests.

#include <map>
#include <random>

#include "qrcybe/qrcybe.hpp"

namespace qrcybe::test {

inline const Var U = Var::u();
inline const Var V = Var::v();

inline RatFun ru() { return RatFun::var(U); }
inline RatFun rv() { return RatFun::var(V); }

/// Evaluates a polynomial term by term with plain mpq arithmetic.
inline Rational eval_poly(const Poly& p, const std::map<std::uint32_t, Rational>& at) {
  Rational s = 0;
  for (const auto& t : p.terms()) {
    Rational m = t.coeff;
    for (const auto& [x, e] : t.mono.factors())
      for (int i = 0; i < e; ++i) m *= at.at(x.id());
    s += m;
  }
  return s;
}

inline Rational eval_ratfun(const RatFun& r, const std::map<std::uint32_t, Rational>& at) {
  return eval_poly(r.num(), at) / eval_poly(r.den(), at);
}

/// Random polynomial in u, v with small integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-4, 4);
  Poly p;
  for (int i = 0; i < terms; ++i) {
    const int c = coef(rng);
    if (c == 0) continue;
    p += Poly::monomial(Monomial::of(U, deg(rng)) * Monomial::of(V, deg(rng)), Rational(c));
  }
  return p;
}

struct Sl2 {
  Algebra g = make_sl(2);
  GElement e = g->basis(0);
  GElement f = g->basis(1);
  GElement h = g->basis(2);
};

/// [X, Y] in the defining representation, read back into g.
inline GElement matrix_bracket(const LieTable& g, const GElement& x, const GElement& y) {
  const QMatrix X = g.to_matrix(x), Y = g.to_matrix(y);
  QMatrix c = X * Y;
  const QMatrix d = Y * X;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) -= d(i, j);
  return g.from_matrix(c);
}

/// K(x, y) = 2n tr(XY) on sl(n).
inline Rational trace_killing(const LieTable& g, const GElement& x, const GElement& y) {
  const QMatrix p = g.to_matrix(x) * g.to_matrix(y);
  Rational tr = 0;
  for (std::size_t i = 0; i < p.rows(); ++i) tr += p(i, i);
  return 2 * g.n() * tr;
}

}  // namespace qrcybe::test
