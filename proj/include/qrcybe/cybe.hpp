#pragma once

// The classical Yang-Baxter residual, quasi-rationality, and the Lie
// bialgebra checks (1-cocycle, co-Jacobi) for co-brackets of the form
// δ(p) = [Γ(u,v), p(u)⊗1 + 1⊗p(v)].

#include <map>
#include <string>
#include <utility>

#include "qrcybe/tensor.hpp"

namespace qrcybe {

/// [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃] in (u1, u2, u3).
inline Tensor3 cyb(const Tensor2& r) {
  return leg_bracket(r, r, LegPair::p12_13) + leg_bracket(r, r, LegPair::p12_23) +
         leg_bracket(r, r, LegPair::p13_23);
}

/// f(u,v) · Ω.
inline Tensor2 spectral_times(const RatFun& f, const CasimirSpec& omega) {
  return f * omega.tensor;
}

/// uvΩ/(v-u).
inline Tensor2 quasi_rational_leading(const CasimirSpec& omega) {
  const Poly u = Poly::variable(Var::u());
  const Poly v = Poly::variable(Var::v());
  return spectral_times(RatFun(u * v, v - u), omega);
}

struct QuasiRationalReport {
  bool cybe_zero = false;
  bool polynomial_part = false;  ///< r - uvΩ/(v-u) is polynomial
  bool skew_part = false;        ///< ... and skew under swap
  std::size_t residual_terms = 0;

  bool quasi_rational() const { return cybe_zero && polynomial_part && skew_part; }
};

inline QuasiRationalReport quasi_rational_report(const Tensor2& r, const CasimirSpec& omega) {
  QuasiRationalReport rep;
  const Tensor3 res = cyb(r);
  rep.residual_terms = res.term_count();
  rep.cybe_zero = res.is_zero();
  const Tensor2 rest = r - quasi_rational_leading(omega);
  rep.polynomial_part = is_polynomial(rest);
  rep.skew_part = is_skew(rest);
  return rep;
}

inline bool is_quasi_rational(const Tensor2& r, const CasimirSpec& omega) {
  return quasi_rational_report(r, omega).quasi_rational();
}

/// δ(p) = [Γ, p(u)⊗1 + 1⊗p(v)]; throws pole_error unless the result is
/// polynomial in u and v.
inline Tensor2 cobracket(const Tensor2& gamma, const GPoly& p) {
  Tensor2 d = -ad2_action(p, gamma);
  for (const auto& [ix, c] : d.terms()) {
    if (!c.is_polynomial())
      throw pole_error("co-bracket has a pole: coefficient of (" + d.table().name(ix.first) + ", " +
                       d.table().name(ix.second) + ") is not polynomial");
  }
  return d;
}

/// δ([p,q]) = p·δ(q) - q·δ(p), where p· is [p(u)⊗1 + 1⊗p(v), ·].
inline bool cocycle_check(const Tensor2& gamma, const GPoly& p, const GPoly& q) {
  const LieTable& g = gamma.table();
  const Tensor2 lhs = cobracket(gamma, bracket_poly(g, p, q));
  const Tensor2 rhs = ad2_action(p, cobracket(gamma, q)) - ad2_action(q, cobracket(gamma, p));
  return lhs == rhs;
}

/// (δ⊗id)δ(p) as a Tensor3 in (u1, u2, u3).
inline Tensor3 cobracket_twice(const Tensor2& gamma, const GPoly& p) {
  const LieTable& g = gamma.table();
  const Tensor2 d = cobracket(gamma, p);
  const std::map<Var, Var, VarPrecedence> to12{{Var::u(), Var::u1()}, {Var::v(), Var::u2()}};
  std::map<std::pair<std::size_t, int>, Tensor2> cache;
  auto delta_of = [&](std::size_t a, int m) -> const Tensor2& {
    auto it = cache.find({a, m});
    if (it == cache.end()) {
      const Tensor2 da = cobracket(gamma, GPoly::monomial(g.basis(a), m));
      it = cache.emplace(std::make_pair(a, m), da.map_coefficients([&](const RatFun& c) {
                                                  return c.rename(to12);
                                                })).first;
    }
    return it->second;
  };

  Tensor3Builder out(gamma.algebra());
  for (const auto& [ix, c] : d.terms()) {
    const auto [a, b] = ix;
    // c is a polynomial in u, v: split off the u-degree to feed δ.
    for (const auto& [m, rest] : c.num().coefficients_in(Var::u())) {
      const Poly tail = rest.rename({{Var::v(), Var::u3()}});
      for (const auto& [jx, dc] : delta_of(a, m).terms())
        out.add_fraction({jx.first, jx.second, b}, dc.num() * tail, dc.den(), 1);
    }
  }
  return out.build();
}

/// (1 + τ + τ²)(δ⊗id)δ(p) = 0 with τ the cyclic rotation of legs.
inline bool cojacobi_check(const Tensor2& gamma, const GPoly& p) {
  const Tensor3 x = cobracket_twice(gamma, p);
  const Tensor3 tx = rotate_legs(x);
  const Tensor3 ttx = rotate_legs(tx);
  return (x + tx + ttx).is_zero();
}

}  // namespace qrcybe
