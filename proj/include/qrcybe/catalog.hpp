#pragma once

// Casimir calibration, the Drinfeld-Jimbo constant, and the built-in
// catalog of co-bracket kernels Γ₁..Γ₄ and sl(2) r-matrices.
//
// The Casimir scale is fixed operationally: among the candidates
// {1/8, ..., 8} times the Killing-dual Casimir, keep those for which both
// the rational matrix Ω/(u-v) + u e⊗h - v h⊗e and the quasi-rational
// matrix q₂ have zero CYB residual. The first one alone does not
// discriminate (its residual vanishes at every scale).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrcybe/cybe.hpp"
#include "qrcybe/expr.hpp"

namespace qrcybe {

namespace detail {

inline Algebra require_sl2(const Algebra& g) {
  if (!g || g->n() != 2) throw invalid_input("this construction is defined for sl(2) only");
  return g;
}

inline GElement e_of(const LieTable& g) { return g.basis(*g.index_of({BasisLabel::Kind::root, 1, 2})); }
inline GElement f_of(const LieTable& g) { return g.basis(*g.index_of({BasisLabel::Kind::root, 2, 1})); }
inline GElement h_of(const LieTable& g) { return g.basis(*g.index_of({BasisLabel::Kind::cartan, 1, 2})); }

inline RatFun u_() { return RatFun::var(Var::u()); }
inline RatFun v_() { return RatFun::var(Var::v()); }

/// u e⊗h - v h⊗e.
inline Tensor2 eq5_polynomial_part(const Algebra& g) {
  const auto e = e_of(*g), h = h_of(*g);
  return Tensor2::simple(g, e, h, u_()) - Tensor2::simple(g, h, e, v_());
}

/// e⊗h - h⊗e.
inline Tensor2 q1_constant_part(const Algebra& g) {
  const auto e = e_of(*g), h = h_of(*g);
  return Tensor2::simple(g, e, h) - Tensor2::simple(g, h, e);
}

/// ½h⊗e - ½e⊗h - u e⊗f + v f⊗e.
inline Tensor2 q2_polynomial_part(const Algebra& g) {
  const auto e = e_of(*g), f = f_of(*g), h = h_of(*g);
  const RatFun half(Rational(1, 2));
  return Tensor2::simple(g, h, e, half) - Tensor2::simple(g, e, h, half) -
         Tensor2::simple(g, e, f, u_()) + Tensor2::simple(g, f, e, v_());
}

}  // namespace detail

/// Ω/(u-v) + u e⊗h - v h⊗e.
inline Tensor2 eq5_rational_matrix(const CasimirSpec& omega) {
  const Algebra& g = detail::require_sl2(omega.tensor.algebra());
  const Poly u = Poly::variable(Var::u()), v = Poly::variable(Var::v());
  return spectral_times(RatFun(Poly(1), u - v), omega) + detail::eq5_polynomial_part(g);
}

inline Tensor2 q2_matrix(const CasimirSpec& omega) {
  const Algebra& g = detail::require_sl2(omega.tensor.algebra());
  return quasi_rational_leading(omega) + detail::q2_polynomial_part(g);
}

inline const std::vector<Rational>& calibration_candidates() {
  static const std::vector<Rational> c{Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1),
                                       Rational(2),    Rational(4),    Rational(8)};
  return c;
}

struct CandidateResidual {
  Rational scale;
  std::size_t eq5_residual_terms = 0;
  std::size_t q2_residual_terms = 0;
  bool survives() const { return eq5_residual_terms == 0 && q2_residual_terms == 0; }
};

struct CalibrationReport {
  std::vector<CandidateResidual> candidates;
  std::vector<Rational> survivors;

  std::string describe() const {
    std::string s;
    for (const auto& c : candidates)
      s += "  scale " + to_string(c.scale) + ": eq5 residual terms " +
           std::to_string(c.eq5_residual_terms) + ", q2 residual terms " +
           std::to_string(c.q2_residual_terms) + (c.survives() ? "  [survives]" : "") + "\n";
    return s;
  }
};

/// Runs every candidate without deciding.
inline CalibrationReport calibration_report(const Algebra& sl2) {
  detail::require_sl2(sl2);
  CalibrationReport rep;
  for (const auto& c : calibration_candidates()) {
    const CasimirSpec omega = casimir(sl2, c);
    CandidateResidual r{c, cyb(eq5_rational_matrix(omega)).term_count(),
                        cyb(q2_matrix(omega)).term_count()};
    if (r.survives()) rep.survivors.push_back(c);
    rep.candidates.push_back(r);
  }
  return rep;
}

/// The unique surviving Casimir; throws verification_error with the
/// per-candidate report when zero or several scales survive.
inline CasimirSpec calibrate_casimir(const Algebra& sl2) {
  const CalibrationReport rep = calibration_report(sl2);
  if (rep.survivors.size() != 1)
    throw verification_error("Casimir calibration found " + std::to_string(rep.survivors.size()) +
                             " surviving scales:\n" + rep.describe());
  return casimir(sl2, rep.survivors.front());
}

/// Calibrated scale, computed once per process.
inline const Rational& calibrated_scale() {
  static const Rational scale = calibrate_casimir(make_sl(2)).scale;
  return scale;
}

struct DjResult {
  enum class Pairing { e_f, f_e };
  Tensor2 r;
  Pairing pairing = Pairing::e_f;
  int sign = 1;  ///< r + swap(r) = sign · Ω

  std::string describe() const {
    return std::string(sign < 0 ? "-" : "+") + (pairing == Pairing::e_f ? "e⊗f" : "f⊗e");
  }
};

namespace detail {

inline Tensor2 dj_candidate(const CasimirSpec& omega, DjResult::Pairing pairing, int sign) {
  const Tensor2& om = omega.tensor;
  const LieTable& g = om.table();
  Tensor2 r(om.algebra());
  for (const auto& [ix, c] : om.terms()) {
    const auto& la = g.label(ix.first);
    const auto& lb = g.label(ix.second);
    if (la.kind == BasisLabel::Kind::cartan && lb.kind == BasisLabel::Kind::cartan) {
      r.add(ix.first, ix.second, c * RatFun(Rational(sign, 2)));
      continue;
    }
    const bool keep = pairing == DjResult::Pairing::e_f ? la.is_positive_root() : la.is_negative_root();
    if (keep) r.add(ix.first, ix.second, c * RatFun(Rational(sign)));
  }
  return r;
}

inline Tensor2 gamma3_from(const CasimirSpec& omega, const Tensor2& r_dj) {
  const Poly u = Poly::variable(Var::u()), v = Poly::variable(Var::v());
  return spectral_times(RatFun(v, v - u), omega) + r_dj;
}

}  // namespace detail

/// Drinfeld-Jimbo constant: half the Cartan block of Ω plus the root-vector
/// pairs of Ω in one orientation. Tried in the order +e⊗f, +f⊗e, -e⊗f,
/// -f⊗e; the first whose Γ₃ = vΩ/(v-u) + r solves the CYBE is returned.
inline DjResult dj_rmatrix(const CasimirSpec& omega) {
  using P = DjResult::Pairing;
  std::string tried;
  for (int sign : {1, -1}) {
    for (P pairing : {P::e_f, P::f_e}) {
      Tensor2 r = detail::dj_candidate(omega, pairing, sign);
      if (!(r + swap(r) == sign * RatFun(1) * omega.tensor))
        throw verification_error("r + swap(r) does not reproduce the Casimir");
      const std::size_t res = cyb(detail::gamma3_from(omega, r)).term_count();
      DjResult out{r, pairing, sign};
      if (res == 0) return out;
      tried += " " + out.describe() + ": " + std::to_string(res) + " residual terms;";
    }
  }
  throw verification_error("no Drinfeld-Jimbo orientation solves the CYBE:" + tried);
}

enum class CatalogName { gamma1, gamma2, gamma3, gamma4, q0, q1, q2, eq5_rational };

inline std::string_view to_string(CatalogName n) {
  switch (n) {
    case CatalogName::gamma1: return "gamma1";
    case CatalogName::gamma2: return "gamma2";
    case CatalogName::gamma3: return "gamma3";
    case CatalogName::gamma4: return "gamma4";
    case CatalogName::q0: return "q0";
    case CatalogName::q1: return "q1";
    case CatalogName::q2: return "q2";
    case CatalogName::eq5_rational: return "eq5_rational";
  }
  return "?";
}

inline const std::vector<CatalogName>& all_catalog_names() {
  static const std::vector<CatalogName> names{
      CatalogName::gamma1, CatalogName::gamma2, CatalogName::gamma3,       CatalogName::gamma4,
      CatalogName::q0,     CatalogName::q1,     CatalogName::q2,           CatalogName::eq5_rational};
  return names;
}

inline std::optional<CatalogName> catalog_name_from(std::string_view s) {
  for (CatalogName n : all_catalog_names())
    if (to_string(n) == s) return n;
  return std::nullopt;
}

/// True for entries that only exist on sl(2).
inline bool is_sl2_only(CatalogName n) {
  return n == CatalogName::q0 || n == CatalogName::q1 || n == CatalogName::q2 ||
         n == CatalogName::eq5_rational;
}

struct CatalogEntry {
  CatalogName name;
  Tensor2 matrix;
  Algebra algebra;
  CasimirSpec omega;
};

inline CatalogEntry catalog_entry(CatalogName name, const CasimirSpec& omega) {
  const Algebra& g = omega.tensor.algebra();
  if (is_sl2_only(name)) detail::require_sl2(g);
  const Poly u = Poly::variable(Var::u()), v = Poly::variable(Var::v());
  Tensor2 m(g);
  switch (name) {
    case CatalogName::gamma1: break;
    case CatalogName::gamma2: m = spectral_times(RatFun(Poly(1), u - v), omega); break;
    case CatalogName::gamma3: m = detail::gamma3_from(omega, dj_rmatrix(omega).r); break;
    case CatalogName::gamma4:
    case CatalogName::q0: m = quasi_rational_leading(omega); break;
    case CatalogName::q1: m = quasi_rational_leading(omega) + detail::q1_constant_part(g); break;
    case CatalogName::q2: m = q2_matrix(omega); break;
    case CatalogName::eq5_rational: m = eq5_rational_matrix(omega); break;
  }
  return {name, m, g, omega};
}

/// Catalog entry on sl(n) with the calibrated Casimir scale.
inline CatalogEntry catalog_entry(CatalogName name, int n = 2) {
  return catalog_entry(name, casimir(make_sl(n), calibrated_scale()));
}

}  // namespace qrcybe
