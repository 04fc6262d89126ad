#pragma once

// Finite-window models of the classical doubles
//   D₂ = g((u⁻¹)),   D₃ = g((u⁻¹)) ⊕ g,   D₄ = g((u⁻¹)) ⊕ g[ε]  (ε² = 0)
// with their invariant forms, the embeddings of P = g[u], Lagrangian and
// transversality checks, the subalgebras W_k and the quotient W_k/W_k^⊥.
//
// Loop parts keep u-exponents in a window [lo, hi]. Everything is turned
// into coordinate vectors over the ambient basis
//   x_a u^k (lo ≤ k ≤ hi, then a), followed by one or two copies of g,
// and every verdict is an exact rank computation over the rationals.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrcybe/catalog.hpp"
#include "qrcybe/linalg.hpp"

namespace qrcybe {

struct Window {
  int lo = 0;
  int hi = 0;

  Window() = default;
  Window(int lo_, int hi_) : lo(lo_), hi(hi_) {
    if (lo > 0 || hi < 0)
      throw invalid_input("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "] must satisfy lo <= 0 <= hi");
  }

  /// [-2·hi, hi]: every in-window element of degree ≥ 1-hi has its Q₄ partner.
  static Window from_trunc(int hi) {
    if (hi < 0) throw invalid_input("truncation order must be non-negative");
    return Window(-2 * hi, hi);
  }

  bool contains(int k) const noexcept { return lo <= k && k <= hi; }
  int width() const noexcept { return hi - lo + 1; }
  std::string describe() const { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// f(u) + A₀ + A₁ε.
struct D4Element {
  GPoly loop;
  GElement a0;
  GElement a1;
};

/// f(u) + a with a in the second summand g.
struct D3Element {
  GPoly loop;
  GElement a;
};

enum class DoubleKind { d2, d3, d4 };

/// Coordinates, invariant form and bracket of a windowed double.
class Ambient {
 public:
  Ambient(Algebra g, DoubleKind kind, Window w) : g_(std::move(g)), kind_(kind), w_(w) {
    if (!g_) throw invalid_input("null algebra");
    build_gram();
  }

  const Algebra& algebra() const noexcept { return g_; }
  const LieTable& table() const noexcept { return *g_; }
  DoubleKind kind() const noexcept { return kind_; }
  const Window& window() const noexcept { return w_; }

  std::size_t gdim() const noexcept { return g_->dim(); }
  std::size_t extra_slots() const noexcept {
    return kind_ == DoubleKind::d4 ? 2 : kind_ == DoubleKind::d3 ? 1 : 0;
  }
  std::size_t loop_dim() const noexcept { return static_cast<std::size_t>(w_.width()) * gdim(); }
  std::size_t dim() const noexcept { return loop_dim() + extra_slots() * gdim(); }

  std::size_t loop_index(int k, std::size_t a) const {
    if (!w_.contains(k))
      throw window_overflow("loop exponent " + std::to_string(k) + " outside " + w_.describe(),
                            std::min(k, w_.lo), std::max(k, w_.hi));
    return static_cast<std::size_t>(k - w_.lo) * gdim() + a;
  }
  std::size_t extra_index(std::size_t slot, std::size_t a) const {
    if (slot >= extra_slots()) throw invalid_input("no such summand in this double");
    return loop_dim() + slot * gdim() + a;
  }

  QVector zero() const { return QVector(dim()); }

  QVector coords(const GPoly& loop) const {
    QVector v = zero();
    put_loop(v, loop);
    return v;
  }
  QVector coords(const D3Element& x) const {
    require(DoubleKind::d3);
    QVector v = coords(x.loop);
    put_extra(v, 0, x.a);
    return v;
  }
  QVector coords(const D4Element& x) const {
    require(DoubleKind::d4);
    QVector v = coords(x.loop);
    put_extra(v, 0, x.a0);
    put_extra(v, 1, x.a1);
    return v;
  }

  GPoly loop_of(const QVector& v) const {
    GPoly p;
    for (int k = w_.lo; k <= w_.hi; ++k) {
      GElement x(gdim());
      bool any = false;
      for (std::size_t a = 0; a < gdim(); ++a) {
        const Rational& c = v[loop_index(k, a)];
        if (c == 0) continue;
        x[a] = c;
        any = true;
      }
      if (any) p.add(k, x);
    }
    return p;
  }
  GElement extra_of(const QVector& v, std::size_t slot) const {
    GElement x(gdim());
    for (std::size_t a = 0; a < gdim(); ++a) x[a] = v[extra_index(slot, a)];
    return x;
  }
  D4Element d4_of(const QVector& v) const {
    require(DoubleKind::d4);
    return {loop_of(v), extra_of(v, 0), extra_of(v, 1)};
  }

  /// Gram matrix of the invariant form over the ambient basis.
  const QMatrix& gram() const noexcept { return gram_; }

  Rational form(const QVector& x, const QVector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (y[j] != 0 && gram_(i, j) != 0) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
  }

  /// Bracket of coordinate vectors. Loop terms outside the window throw
  /// unless `truncate` is set, in which case they are discarded (the
  /// convention for closure checks at a window).
  QVector bracket(const QVector& x, const QVector& y, bool truncate = false) const {
    const LieTable& g = *g_;
    const GPoly l = bracket_poly(g, loop_of(x), loop_of(y));
    GPoly kept;
    for (const auto& [k, z] : l.terms()) {
      if (!w_.contains(k) && !truncate)
        throw window_overflow("bracket leaves the window " + w_.describe(), std::min(k, w_.lo),
                              std::max(k, w_.hi));
      if (w_.contains(k)) kept.add(k, z);
    }
    QVector v = coords(kept);
    if (kind_ == DoubleKind::d3) {
      put_extra(v, 0, qrcybe::bracket(g, extra_of(x, 0), extra_of(y, 0)));
    } else if (kind_ == DoubleKind::d4) {
      const GElement a0 = extra_of(x, 0), a1 = extra_of(x, 1);
      const GElement b0 = extra_of(y, 0), b1 = extra_of(y, 1);
      put_extra(v, 0, qrcybe::bracket(g, a0, b0));
      put_extra(v, 1, qrcybe::bracket(g, a0, b1) + qrcybe::bracket(g, a1, b0));
    }
    return v;
  }

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.g_->n() == b.g_->n() && a.kind_ == b.kind_ && a.w_ == b.w_;
  }

 private:
  void require(DoubleKind k) const {
    if (kind_ != k) throw invalid_input("element does not belong to this double");
  }
  void put_loop(QVector& v, const GPoly& loop) const {
    for (const auto& [k, x] : loop.terms())
      for (std::size_t a = 0; a < gdim(); ++a)
        if (x[a] != 0) v[loop_index(k, a)] = x[a];
  }
  void put_extra(QVector& v, std::size_t slot, const GElement& x) const {
    if (x.dim() != gdim()) throw invalid_input("element of a different algebra");
    for (std::size_t a = 0; a < gdim(); ++a) v[extra_index(slot, a)] = x[a];
  }

  // Q₂ pairs u^k with u^(-1-k), Q₃ pairs u^k with u^(-k) and subtracts K on
  // the g summand, Q₄ pairs u^k with u^(1-k) and subtracts K(A₀,B₁)+K(A₁,B₀).
  void build_gram() {
    gram_ = QMatrix(dim(), dim());
    const int partner_sum = kind_ == DoubleKind::d2 ? -1 : kind_ == DoubleKind::d3 ? 0 : 1;
    const QMatrix& K = g_->killing_matrix();
    for (int k = w_.lo; k <= w_.hi; ++k) {
      const int l = partner_sum - k;
      if (!w_.contains(l)) continue;
      for (std::size_t a = 0; a < gdim(); ++a)
        for (std::size_t b = 0; b < gdim(); ++b) gram_(loop_index(k, a), loop_index(l, b)) = K(a, b);
    }
    for (std::size_t a = 0; a < gdim(); ++a)
      for (std::size_t b = 0; b < gdim(); ++b) {
        if (kind_ == DoubleKind::d3) {
          gram_(extra_index(0, a), extra_index(0, b)) = -K(a, b);
        } else if (kind_ == DoubleKind::d4) {
          gram_(extra_index(0, a), extra_index(1, b)) = -K(a, b);
          gram_(extra_index(1, a), extra_index(0, b)) = -K(a, b);
        }
      }
  }

  Algebra g_;
  DoubleKind kind_;
  Window w_;
  QMatrix gram_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

inline AmbientPtr make_ambient(const Algebra& g, DoubleKind kind, Window w) {
  return std::make_shared<const Ambient>(g, kind, w);
}

/// Linearly independent vectors of one ambient model.
class SubspaceBasis {
 public:
  SubspaceBasis(AmbientPtr amb, std::vector<QVector> vs) : amb_(std::move(amb)), vs_(std::move(vs)) {
    for (const auto& v : vs_)
      if (v.size() != amb_->dim()) throw invalid_input("subspace vector of wrong dimension");
    if (qrcybe::rank(vs_, amb_->dim()) != vs_.size())
      throw invalid_input("subspace basis is linearly dependent");
  }

  /// Independent basis of the span of arbitrary vectors.
  static SubspaceBasis spanned_by(AmbientPtr amb, const std::vector<QVector>& vs) {
    const std::size_t d = amb->dim();
    return SubspaceBasis(std::move(amb), span_basis(vs, d));
  }

  const AmbientPtr& ambient_ptr() const noexcept { return amb_; }
  const Ambient& ambient() const noexcept { return *amb_; }
  std::size_t size() const noexcept { return vs_.size(); }
  const std::vector<QVector>& vectors() const noexcept { return vs_; }

  bool contains(const QVector& v) const { return in_span(vs_, v, amb_->dim()); }
  bool contains(const SubspaceBasis& s) const {
    check_same(s);
    return span_contains(vs_, s.vs_, amb_->dim());
  }

  void check_same(const SubspaceBasis& s) const {
    if (!(*amb_ == *s.amb_)) throw invalid_input("subspaces live in different ambient models");
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    a.check_same(b);
    return span_equal(a.vs_, b.vs_, a.amb_->dim());
  }

 private:
  AmbientPtr amb_;
  std::vector<QVector> vs_;
};

inline SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  a.check_same(b);
  std::vector<QVector> all = a.vectors();
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::spanned_by(a.ambient_ptr(), all);
}

inline SubspaceBasis span_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  a.check_same(b);
  return SubspaceBasis(a.ambient_ptr(), intersection(a.vectors(), b.vectors(), a.ambient().dim()));
}

// ---------------------------------------------------------------------------
// Element-level operations

namespace detail {

inline void check_loop_window(const GPoly& p, const Window& w, const std::string& what) {
  if (p.is_zero()) return;
  if (!w.contains(p.min_degree()) || !w.contains(p.max_degree()))
    throw window_overflow(what + " leaves the window " + w.describe(), std::min(p.min_degree(), w.lo),
                          std::max(p.max_degree(), w.hi));
}

/// Coefficient of u^k in K(p, q).
inline Rational killing_coefficient(const LieTable& g, const GPoly& p, const GPoly& q, int k) {
  Rational s = 0;
  for (const auto& [a, x] : p.terms()) {
    auto it = q.terms().find(k - a);
    if (it != q.terms().end()) s += killing(g, x, it->second);
  }
  return s;
}

}  // namespace detail

/// Componentwise bracket; the ε-part uses ε² = 0.
inline D4Element d4_bracket(const LieTable& g, const D4Element& x, const D4Element& y, const Window& w) {
  D4Element z{bracket_poly(g, x.loop, y.loop), bracket(g, x.a0, y.a0),
              bracket(g, x.a0, y.a1) + bracket(g, x.a1, y.a0)};
  detail::check_loop_window(z.loop, w, "bracket");
  return z;
}

/// Coefficient of u in K(f,g), minus K(A₀,B₁) + K(A₁,B₀).
inline Rational q4_form(const LieTable& g, const D4Element& x, const D4Element& y) {
  return detail::killing_coefficient(g, x.loop, y.loop, 1) - killing(g, x.a0, y.a1) -
         killing(g, x.a1, y.a0);
}

/// Constant coefficient of K(f,g) minus K(a,b).
inline Rational q3_form(const LieTable& g, const D3Element& x, const D3Element& y) {
  return detail::killing_coefficient(g, x.loop, y.loop, 0) - killing(g, x.a, y.a);
}

/// Coefficient of u⁻¹ in K(p,q).
inline Rational q2_form(const LieTable& g, const GPoly& p, const GPoly& q) {
  return detail::killing_coefficient(g, p, q, -1);
}

/// i(p) = p + p₀ + p₁ε.
inline D4Element embed_i(const LieTable& g, const GPoly& p, const Window& w) {
  if (!p.is_zero() && p.min_degree() < 0) throw invalid_input("embed_i expects a polynomial in u");
  detail::check_loop_window(p, w, "embedded polynomial");
  return {p, p.coeff(0, g.dim()), p.coeff(1, g.dim())};
}

/// p ↦ (p(u), p(0)).
inline D3Element embed_case3(const LieTable& g, const GPoly& p, const Window& w) {
  if (!p.is_zero() && p.min_degree() < 0) throw invalid_input("embedding expects a polynomial in u");
  detail::check_loop_window(p, w, "embedded polynomial");
  return {p, p.coeff(0, g.dim())};
}

// ---------------------------------------------------------------------------
// Standard subspaces

/// Image of g[u] (degrees 0..hi) under the embedding of the given double.
inline SubspaceBasis embedded_P(const AmbientPtr& amb) {
  const Ambient& A = *amb;
  const LieTable& g = A.table();
  std::vector<QVector> vs;
  for (int k = 0; k <= A.window().hi; ++k)
    for (std::size_t a = 0; a < g.dim(); ++a) {
      const GPoly p = GPoly::monomial(g.basis(a), k);
      switch (A.kind()) {
        case DoubleKind::d2: vs.push_back(A.coords(p)); break;
        case DoubleKind::d3: vs.push_back(A.coords(embed_case3(g, p, A.window()))); break;
        case DoubleKind::d4: vs.push_back(A.coords(embed_i(g, p, A.window()))); break;
      }
    }
  return SubspaceBasis(amb, std::move(vs));
}

/// Loop elements x_a u^k with lo ≤ k ≤ top.
inline std::vector<QVector> loop_tail(const Ambient& A, int top) {
  std::vector<QVector> vs;
  for (int k = A.window().lo; k <= std::min(top, A.window().hi); ++k)
    for (std::size_t a = 0; a < A.gdim(); ++a) vs.push_back(A.coords(GPoly::monomial(A.table().basis(a), k)));
  return vs;
}

/// The complementary Lagrangian P* of each case:
///   D₂: u⁻¹g[[u⁻¹]];
///   D₃: u⁻¹g[[u⁻¹]] ⊕ {(l, k) ∈ b₊ ⊕ b₋ : l_h + k_h = 0};
///   D₄: g[[u⁻¹]] ⊕ gε.
inline SubspaceBasis pstar_model(const AmbientPtr& amb) {
  const Ambient& A = *amb;
  const LieTable& g = A.table();
  std::vector<QVector> vs = loop_tail(A, A.kind() == DoubleKind::d4 ? 0 : -1);
  if (A.kind() == DoubleKind::d3) {
    for (std::size_t a = 0; a < g.dim(); ++a) {
      const BasisLabel& l = g.label(a);
      const GElement x = g.basis(a);
      if (l.is_positive_root()) vs.push_back(A.coords(D3Element{GPoly::monomial(x, 0), g.zero()}));
      else if (l.is_negative_root()) vs.push_back(A.coords(D3Element{GPoly(), x}));
      else vs.push_back(A.coords(D3Element{GPoly::monomial(x, 0), -x}));
    }
  } else if (A.kind() == DoubleKind::d4) {
    for (std::size_t a = 0; a < g.dim(); ++a)
      vs.push_back(A.coords(D4Element{GPoly(), g.zero(), g.basis(a)}));
  }
  return SubspaceBasis(amb, std::move(vs));
}

// ---------------------------------------------------------------------------
// Lagrangian and transversality checks

inline bool is_isotropic(const SubspaceBasis& s) {
  const Ambient& A = s.ambient();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (A.form(s.vectors()[i], s.vectors()[j]) != 0) return false;
  return true;
}

/// Radical of the truncated form: loop elements whose partner degree
/// falls outside the window.
inline std::vector<QVector> form_radical(const Ambient& A) {
  std::vector<QVector> rad;
  for (const auto& k : nullspace(A.gram())) rad.push_back(k);
  return rad;
}

struct LagrangianReport {
  Window window;
  bool isotropic = false;
  bool maximal = false;
  std::size_t dim_sub = 0;
  std::size_t dim_sub_mod_radical = 0;
  std::size_t dim_ambient = 0;
  std::size_t dim_radical = 0;

  bool lagrangian() const { return isotropic && maximal; }
  /// Maximality is dimensional, modulo the radical of the truncated form;
  /// it approximates the condition on the untruncated double.
  static constexpr const char* caveat =
      "maximality checked dimensionally at the window, modulo the radical of the truncated form";
};

inline LagrangianReport is_lagrangian_truncated(const SubspaceBasis& s) {
  const Ambient& A = s.ambient();
  LagrangianReport rep;
  rep.window = A.window();
  rep.isotropic = is_isotropic(s);
  const auto rad = form_radical(A);
  rep.dim_sub = s.size();
  rep.dim_ambient = A.dim();
  rep.dim_radical = rad.size();
  rep.dim_sub_mod_radical = s.size() - intersection(s.vectors(), rad, A.dim()).size();
  rep.maximal = 2 * rep.dim_sub_mod_radical == rep.dim_ambient - rep.dim_radical;
  return rep;
}

/// Closure under the bracket, discarding terms outside the window.
inline bool is_subalgebra_truncated(const SubspaceBasis& s) {
  const Ambient& A = s.ambient();
  const SpanMembership span(s.vectors(), A.dim());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!span.contains(A.bracket(s.vectors()[i], s.vectors()[j], true))) return false;
  return true;
}

struct TransversalityReport {
  Window window;
  int tail = 0;
  bool trivial_intersection = false;  ///< W ∩ P = {0}
  bool complementary = false;         ///< W ⊕ P fills the window
  bool contains_tail = false;         ///< W ⊇ u^(-N) g[[u⁻¹]] within the window

  bool all() const { return trivial_intersection && complementary && contains_tail; }
};

/// The three conditions on W relative to the embedded P, for tail N.
inline TransversalityReport check_transversality(const SubspaceBasis& w, int tail) {
  const Ambient& A = w.ambient();
  const SubspaceBasis p = embedded_P(w.ambient_ptr());
  TransversalityReport rep;
  rep.window = A.window();
  rep.tail = tail;
  rep.trivial_intersection = intersection(w.vectors(), p.vectors(), A.dim()).empty();
  std::vector<QVector> all = w.vectors();
  all.insert(all.end(), p.vectors().begin(), p.vectors().end());
  rep.complementary = qrcybe::rank(all, A.dim()) == A.dim();
  const SpanMembership span(w.vectors(), A.dim());
  rep.contains_tail = true;
  for (const auto& v : loop_tail(A, -tail))
    if (!span.contains(v)) {
      rep.contains_tail = false;
      break;
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Dual bases and the projection onto the loop component

/// x^a with K(x_a, x^b) = δ_ab.
inline std::vector<GElement> killing_dual_basis(const LieTable& g) {
  const auto inv = inverse(g.killing_matrix());
  if (!inv) throw invalid_input("invariant form is singular");
  std::vector<GElement> out;
  for (std::size_t b = 0; b < g.dim(); ++b) {
    GElement x(g.dim());
    for (std::size_t c = 0; c < g.dim(); ++c) x[c] = (*inv)(c, b);
    out.push_back(x);
  }
  return out;
}

struct DualPair {
  D4Element basis;
  D4Element dual;
};

/// i(x_a u^k) for 0 ≤ k ≤ order, paired with
///   (0, 0, -x^a) for k = 0,  x^a for k = 1,  x^a u^(1-k) for k ≥ 2.
inline std::vector<DualPair> d4_dual_pairs(const LieTable& g, int order) {
  if (order < 1) throw invalid_input("dual basis order must be at least 1");
  const Window w(1 - order, order);
  const auto duals = killing_dual_basis(g);
  std::vector<DualPair> out;
  for (int k = 0; k <= order; ++k)
    for (std::size_t a = 0; a < g.dim(); ++a) {
      DualPair p{embed_i(g, GPoly::monomial(g.basis(a), k), w), {GPoly(), g.zero(), g.zero()}};
      if (k == 0) p.dual.a1 = -duals[a];
      else p.dual.loop = GPoly::monomial(duals[a], 1 - k);
      out.push_back(std::move(p));
    }
  return out;
}

/// q4_form(b_α, b*_β) = δ_αβ over all pairs up to `order`.
inline bool dual_basis_check(const LieTable& g, int order) {
  if (order < 2) throw invalid_input("dual basis order must be at least 2");
  const auto pairs = d4_dual_pairs(g, order);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (q4_form(g, pairs[i].basis, pairs[j].dual) != (i == j ? 1 : 0)) return false;
  return true;
}

/// Each coefficient expanded at v = ∞, keeping v-exponents ≥ -order.
inline Tensor2 expand_tensor_at_infinity(const Tensor2& r, int order) {
  return r.map_coefficients([&](const RatFun& c) {
    return expand_at_infinity(c, Var::v(), order).to_ratfun();
  });
}

/// Σ loop(b_α)(u) ⊗ loop(b*_α)(v) over the dual pairs, v-exponents ≥ -order,
/// compared termwise with the expansion of uvΩ/(v-u). Ω defaults to the
/// Killing-dual Casimir (the form Q₄ is built from K). Throws
/// verification_error naming the first differing term.
inline Tensor2 dual_sum_projection(const Algebra& g, int order,
                                   const std::optional<Tensor2>& omega = std::nullopt) {
  if (order < 0) throw invalid_input("projection order must be non-negative");
  const LieTable& t = *g;
  Tensor2 sum(g);
  const Poly u = Poly::variable(Var::u()), v = Poly::variable(Var::v());
  for (const auto& p : d4_dual_pairs(t, order + 1)) {
    for (const auto& [k, x] : p.basis.loop.terms())
      for (const auto& [l, y] : p.dual.loop.terms()) {
        if (l < -order) continue;
        const RatFun c = RatFun(u.pow(k)) * (l >= 0 ? RatFun(v.pow(l)) : RatFun(Poly(1), v.pow(-l)));
        for (std::size_t a = 0; a < t.dim(); ++a)
          for (std::size_t b = 0; b < t.dim(); ++b)
            if (x[a] != 0 && y[b] != 0) sum.add(a, b, c * RatFun(Rational(x[a] * y[b])));
      }
  }
  const CasimirSpec om = omega ? CasimirSpec{Rational(0), *omega} : casimir(g, 1);
  const Tensor2 expected = expand_tensor_at_infinity(quasi_rational_leading(om), order);
  const Tensor2 diff = sum - expected;
  if (!diff.is_zero()) {
    const auto& [ix, c] = *diff.terms().begin();
    throw verification_error("dual sum projection differs from the expansion of uvΩ/(v-u) at (" +
                             t.name(ix.first) + ", " + t.name(ix.second) + "): " + to_string(c));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// W_k = d_k⁻¹ sl(n)[[u⁻¹]] d_k ⊕ sl(n)[ε],  d_k = diag(1,…,1, u,…,u)

/// +1 above the k×k block corner, -1 below it, 0 elsewhere.
inline int wk_shift(const BasisLabel& l, int k) {
  if (l.kind != BasisLabel::Kind::root) return 0;
  if (l.i <= k && k < l.j) return 1;
  if (l.j <= k && k < l.i) return -1;
  return 0;
}

inline void check_wk_index(const LieTable& g, int k) {
  if (k < 0 || k > g.n() - 1)
    throw invalid_input("k=" + std::to_string(k) + " outside [0, " + std::to_string(g.n() - 1) + "]");
}

/// Loop part: E(i,j)u^s and H(i)u^s for lo ≤ s ≤ shift.
inline SubspaceBasis wk_loop_part(const Algebra& g, int k, const Window& w) {
  check_wk_index(*g, k);
  const AmbientPtr amb = make_ambient(g, DoubleKind::d4, w);
  std::vector<QVector> vs;
  for (std::size_t a = 0; a < g->dim(); ++a) {
    const int top = wk_shift(g->label(a), k);
    for (int s = w.lo; s <= std::min(top, w.hi); ++s) vs.push_back(amb->coords(GPoly::monomial(g->basis(a), s)));
  }
  return SubspaceBasis(amb, std::move(vs));
}

/// Elements (0, x, 0) and (0, 0, x) for x in the basis of g.
inline std::vector<QVector> epsilon_part(const Ambient& A) {
  std::vector<QVector> vs;
  const LieTable& g = A.table();
  for (std::size_t a = 0; a < g.dim(); ++a) vs.push_back(A.coords(D4Element{GPoly(), g.basis(a), g.zero()}));
  for (std::size_t a = 0; a < g.dim(); ++a) vs.push_back(A.coords(D4Element{GPoly(), g.zero(), g.basis(a)}));
  return vs;
}

inline SubspaceBasis build_Wk(const Algebra& g, int k, const Window& w) {
  const SubspaceBasis loop = wk_loop_part(g, k, w);
  std::vector<QVector> vs = loop.vectors();
  for (auto& v : epsilon_part(loop.ambient())) vs.push_back(std::move(v));
  return SubspaceBasis(loop.ambient_ptr(), std::move(vs));
}

/// {y : Q(x, y) = 0 for all x in s} inside the ambient window.
inline SubspaceBasis orth_complement_truncated(const SubspaceBasis& s) {
  const Ambient& A = s.ambient();
  if (s.size() == 0) {
    std::vector<QVector> all;
    for (std::size_t i = 0; i < A.dim(); ++i) {
      QVector e = A.zero();
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return SubspaceBasis(s.ambient_ptr(), std::move(all));
  }
  const QMatrix m = QMatrix::from_rows(s.vectors(), A.dim()) * A.gram();
  return SubspaceBasis::spanned_by(s.ambient_ptr(), nullspace(m));
}

struct WkComplementReport {
  int k = 0;
  Window window;
  bool complement_equals_loop_part = false;
  bool same_dimension = false;
  std::size_t complement_dim = 0;
  std::size_t loop_part_dim = 0;
  std::size_t quotient_dim = 0;
  std::size_t expected_quotient_dim = 0;

  bool holds() const { return complement_equals_loop_part && quotient_dim == expected_quotient_dim; }
  /// Weaker, isomorphism-level reading: dimensions agree even if the spans do not.
  bool holds_up_to_isomorphism() const { return same_dimension && quotient_dim == expected_quotient_dim; }
};

inline WkComplementReport wk_complement_report(const Algebra& g, int k, const Window& w) {
  const SubspaceBasis wk = build_Wk(g, k, w);
  const SubspaceBasis loop = wk_loop_part(g, k, w);
  const SubspaceBasis perp = orth_complement_truncated(wk);
  WkComplementReport rep;
  rep.k = k;
  rep.window = w;
  rep.complement_dim = perp.size();
  rep.loop_part_dim = loop.size();
  rep.same_dimension = perp.size() == loop.size();
  rep.complement_equals_loop_part = perp == loop;
  rep.quotient_dim = wk.contains(perp) ? wk.size() - perp.size() : 0;
  rep.expected_quotient_dim = 2 * g->dim();
  return rep;
}

/// Subspace of sl(n)[ε] in (a0 | a1) coordinates, length 2·dim g.
struct EpsilonSubspace {
  Algebra g;
  std::vector<QVector> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  friend bool operator==(const EpsilonSubspace& a, const EpsilonSubspace& b) {
    return a.g->n() == b.g->n() && span_equal(a.basis, b.basis, 2 * a.g->dim());
  }
};

/// P_k + ε P_k^⊥.
inline EpsilonSubspace parabolic_epsilon_target(const Algebra& g, int k) {
  const GSubspace pk = parabolic(*g, k);
  const GSubspace perp = orthogonal_complement_g(pk, *g);
  const std::size_t d = g->dim();
  std::vector<QVector> vs;
  for (const auto& x : pk.elements()) {
    QVector v(2 * d);
    for (std::size_t a = 0; a < d; ++a) v[a] = x[a];
    vs.push_back(std::move(v));
  }
  for (const auto& x : perp.elements()) {
    QVector v(2 * d);
    for (std::size_t a = 0; a < d; ++a) v[d + a] = x[a];
    vs.push_back(std::move(v));
  }
  return {g, span_basis(vs, 2 * d)};
}

/// Image of P ∩ W_k in W_k/W_k^⊥ ≅ sl(n)[ε]. Throws verification_error if
/// an element's loop part is not in W_k^⊥ or if the image differs from
/// P_k + εP_k^⊥.
inline EpsilonSubspace quotient_image_of_P(const Algebra& g, int k, const Window& w) {
  if (k < 1 || k > g->n() - 1)
    throw invalid_input("k=" + std::to_string(k) + " outside [1, " + std::to_string(g->n() - 1) + "]");
  const SubspaceBasis wk = build_Wk(g, k, w);
  const SubspaceBasis perp = orth_complement_truncated(wk);
  const SubspaceBasis p = embedded_P(wk.ambient_ptr());
  const SubspaceBasis cap = span_intersection(p, wk);
  const Ambient& A = wk.ambient();
  const SpanMembership perp_span(perp.vectors(), A.dim());
  const std::size_t d = g->dim();
  std::vector<QVector> image;
  for (const auto& v : cap.vectors()) {
    const GElement a0 = A.extra_of(v, 0), a1 = A.extra_of(v, 1);
    const QVector rest = A.coords(A.loop_of(v));
    if (!perp_span.contains(rest))
      throw verification_error("element of P ∩ W_k has a loop part outside W_k^⊥");
    QVector q(2 * d);
    for (std::size_t a = 0; a < d; ++a) {
      q[a] = a0[a];
      q[d + a] = a1[a];
    }
    image.push_back(std::move(q));
  }
  EpsilonSubspace out{g, span_basis(image, 2 * d)};
  if (!(out == parabolic_epsilon_target(g, k)))
    throw verification_error("image of P ∩ W_k is not P_k + εP_k^⊥ (dimension " +
                             std::to_string(out.dim()) + ")");
  return out;
}

// ---------------------------------------------------------------------------
// Lagrangians attached to constant skew r-matrices

/// W_r = g[[u⁻¹]] ⊕ {(0, ρ(y), y)} with ρ(y) = -(K(y,·)⊗id) r_K and
/// r_K = r / scale the Killing-normalised constant part.
inline SubspaceBasis lagrangian_from_constant_r(const Tensor2& r, const Rational& scale, const Window& w) {
  const Algebra& g = r.algebra();
  const LieTable& t = *g;
  if (!is_polynomial(r)) throw invalid_input("expected a constant tensor");
  if (scale == 0) throw invalid_input("zero Casimir scale");
  const AmbientPtr amb = make_ambient(g, DoubleKind::d4, w);
  std::vector<QVector> vs = loop_tail(*amb, 0);
  for (std::size_t y = 0; y < t.dim(); ++y) {
    GElement rho(t.dim());
    for (const auto& [ix, c] : r.terms()) {
      if (!c.is_constant()) throw invalid_input("expected a constant tensor");
      const Rational ky = t.killing(y, ix.first);
      if (ky != 0) rho[ix.second] -= ky * c.constant_value() / scale;
    }
    vs.push_back(amb->coords(D4Element{GPoly(), rho, t.basis(y)}));
  }
  return SubspaceBasis(amb, std::move(vs));
}

/// r(u,v) = Σ_α p_α(u) ⊗ w_α(v) with p_α = i(x_a u^k), 0 ≤ k ≤ hi, and w_α
/// its Q₄-dual in W, projected on the loop component. Only v-exponents
/// ≥ 1 - hi are reliable at the window and kept.
inline Tensor2 rmatrix_from_lagrangian(const SubspaceBasis& W) {
  const Ambient& A = W.ambient();
  if (A.kind() != DoubleKind::d4) throw invalid_input("expected a subspace of the D4 model");
  const SubspaceBasis P = embedded_P(W.ambient_ptr());
  const std::size_t np = P.size(), nw = W.size();
  QMatrix m(np, nw + np);
  for (std::size_t b = 0; b < np; ++b) {
    for (std::size_t j = 0; j < nw; ++j) m(b, j) = A.form(P.vectors()[b], W.vectors()[j]);
    m(b, nw + b) = 1;
  }
  const RowEchelon e = row_reduce(m);
  if (e.pivots.size() < np || e.pivots[np - 1] >= nw)
    throw verification_error("the subspace does not pair nondegenerately with P at this window");

  const LieTable& t = A.table();
  const int floor = 1 - A.window().hi;
  const Poly u = Poly::variable(Var::u()), v = Poly::variable(Var::v());
  Tensor2 r(A.algebra());
  for (std::size_t alpha = 0; alpha < np; ++alpha) {
    QVector wa = A.zero();
    for (std::size_t row = 0; row < np; ++row) {
      const Rational& c = e.reduced(row, nw + alpha);
      if (c == 0) continue;
      const QVector& wj = W.vectors()[e.pivots[row]];
      for (std::size_t i = 0; i < wa.size(); ++i)
        if (wj[i] != 0) wa[i] += c * wj[i];
    }
    const GPoly pl = A.loop_of(P.vectors()[alpha]);
    const GPoly wl = A.loop_of(wa);
    for (const auto& [k, x] : pl.terms())
      for (const auto& [l, y] : wl.terms()) {
        if (l < floor) continue;
        const RatFun c = RatFun(u.pow(k)) * (l >= 0 ? RatFun(v.pow(l)) : RatFun(Poly(1), v.pow(-l)));
        for (std::size_t a = 0; a < t.dim(); ++a)
          for (std::size_t b = 0; b < t.dim(); ++b)
            if (x[a] != 0 && y[b] != 0) r.add(a, b, c * RatFun(Rational(x[a] * y[b])));
      }
  }
  return r;
}

}  // namespace qrcybe
