#pragma once

// Elements of g⊗g and g⊗g⊗g with rational-function coefficients.
//
// Convention: in a Tensor2, leg 1 carries the spectral variable u and leg 2
// carries v. In a Tensor3 the three legs carry u1, u2, u3.

#include <array>
#include <map>
#include <utility>

#include "qrcybe/lie.hpp"
#include "qrcybe/ratfun.hpp"

namespace qrcybe {

namespace detail {

inline void require_same(const Algebra& a, const Algebra& b) {
  if (!a || !b || a->n() != b->n()) throw invalid_input("tensors over different algebras");
}

}  // namespace detail

class Tensor2 {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  explicit Tensor2(Algebra g) : g_(std::move(g)) {
    if (!g_) throw invalid_input("tensor without an algebra");
  }

  /// c · (x ⊗ y).
  static Tensor2 simple(Algebra g, const GElement& x, const GElement& y, const RatFun& c = 1) {
    Tensor2 t(std::move(g));
    for (std::size_t a = 0; a < x.dim(); ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < y.dim(); ++b)
        if (y[b] != 0) t.add(a, b, c * RatFun(Rational(x[a] * y[b])));
    }
    return t;
  }

  const Algebra& algebra() const noexcept { return g_; }
  const LieTable& table() const noexcept { return *g_; }
  const std::map<Index, RatFun>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  RatFun coeff(std::size_t a, std::size_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? RatFun() : it->second;
  }

  void add(std::size_t a, std::size_t b, const RatFun& c) {
    if (a >= g_->dim() || b >= g_->dim()) throw invalid_input("tensor index out of range");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({a, b}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Applies f to every coefficient.
  template <class F>
  Tensor2 map_coefficients(F f) const {
    Tensor2 out(g_);
    for (const auto& [ix, c] : terms_) out.add(ix.first, ix.second, f(c));
    return out;
  }

  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) {
    detail::require_same(a.g_, b.g_);
    for (const auto& [ix, c] : b.terms_) a.add(ix.first, ix.second, c);
    return a;
  }
  friend Tensor2 operator-(const Tensor2& a) {
    return a.map_coefficients([](const RatFun& c) { return -c; });
  }
  friend Tensor2 operator-(const Tensor2& a, const Tensor2& b) { return a + (-b); }
  friend Tensor2 operator*(const RatFun& s, const Tensor2& a) {
    if (s.is_zero()) return Tensor2(a.g_);
    return a.map_coefficients([&s](const RatFun& c) { return s * c; });
  }
  Tensor2& operator+=(const Tensor2& b) { return *this = *this + b; }

  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.g_->n() == b.g_->n() && a.terms_ == b.terms_;
  }

 private:
  Algebra g_;
  std::map<Index, RatFun> terms_;
};

class Tensor3 {
 public:
  using Index = std::array<std::size_t, 3>;

  explicit Tensor3(Algebra g) : g_(std::move(g)) {
    if (!g_) throw invalid_input("tensor without an algebra");
  }

  const Algebra& algebra() const noexcept { return g_; }
  const LieTable& table() const noexcept { return *g_; }
  const std::map<Index, RatFun>& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  RatFun coeff(const Index& ix) const {
    auto it = terms_.find(ix);
    return it == terms_.end() ? RatFun() : it->second;
  }

  void add(const Index& ix, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(ix, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) {
    detail::require_same(a.g_, b.g_);
    for (const auto& [ix, c] : b.terms_) a.add(ix, c);
    return a;
  }
  friend Tensor3 operator-(const Tensor3& a) {
    Tensor3 out(a.g_);
    for (const auto& [ix, c] : a.terms_) out.terms_.emplace(ix, -c);
    return out;
  }
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b) { return a + (-b); }
  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.g_->n() == b.g_->n() && a.terms_ == b.terms_;
  }

 private:
  friend class Tensor3Builder;
  Algebra g_;
  std::map<Index, RatFun> terms_;
};

/// Accumulates many scaled fractions per index and reduces each coefficient
/// once at the end.
class Tensor3Builder {
 public:
  explicit Tensor3Builder(Algebra g) : g_(std::move(g)) {}

  void add_fraction(const Tensor3::Index& ix, const Poly& num, const Poly& den, const Rational& s) {
    sums_[ix].add_fraction(num, den, s);
  }

  Tensor3 build() const {
    Tensor3 out(g_);
    for (const auto& [ix, sum] : sums_) {
      RatFun c = sum.total();
      if (!c.is_zero()) out.terms_.emplace(ix, std::move(c));
    }
    return out;
  }

 private:
  Algebra g_;
  std::map<Tensor3::Index, detail::RatFunSum> sums_;
};

enum class Legs { l12, l13, l23 };
enum class LegPair { p12_13, p12_23, p13_23 };

namespace detail {

inline std::map<Var, Var, VarPrecedence> slot_renaming(Legs legs) {
  switch (legs) {
    case Legs::l12: return {{Var::u(), Var::u1()}, {Var::v(), Var::u2()}};
    case Legs::l13: return {{Var::u(), Var::u1()}, {Var::v(), Var::u3()}};
    case Legs::l23: return {{Var::u(), Var::u2()}, {Var::v(), Var::u3()}};
  }
  return {};
}

}  // namespace detail

/// r placed on two of three legs: r₁₂, r₁₃ or r₂₃. The identity on the
/// remaining leg is implicit; `tensor` holds r with (u, v) renamed to the
/// slot variables of the occupied legs.
struct EmbeddedTensor {
  Legs legs;
  Tensor2 tensor;

  friend bool operator==(const EmbeddedTensor&, const EmbeddedTensor&) = default;
};

inline EmbeddedTensor embed(const Tensor2& r, Legs legs) {
  const auto names = detail::slot_renaming(legs);
  return {legs, r.map_coefficients([&names](const RatFun& c) { return c.rename(names); })};
}

/// Exchanges legs 1 and 2 of an embedded r₁₂ (with their slot variables).
inline EmbeddedTensor swap_legs12(const EmbeddedTensor& t) {
  if (t.legs != Legs::l12) throw invalid_input("swap_legs12 needs a tensor on legs 12");
  const std::map<Var, Var, VarPrecedence> names{{Var::u1(), Var::u2()}, {Var::u2(), Var::u1()}};
  Tensor2 out(t.tensor.algebra());
  for (const auto& [ix, c] : t.tensor.terms()) out.add(ix.second, ix.first, c.rename(names));
  return {Legs::l12, out};
}

/// [r_A, s_B] for A∧B ∈ {12∧13, 12∧23, 13∧23}, expanded by structure
/// constants; e.g. [r₁₂, s₁₃] = Σ r_ab(u1,u2) s_cd(u1,u3) [x_a,x_c]⊗x_b⊗x_d.
inline Tensor3 leg_bracket(const Tensor2& r, const Tensor2& s, LegPair pair) {
  detail::require_same(r.algebra(), s.algebra());
  const LieTable& g = r.table();
  Legs lr = Legs::l12;
  Legs ls = Legs::l13;
  if (pair == LegPair::p12_23) ls = Legs::l23;
  if (pair == LegPair::p13_23) {
    lr = Legs::l13;
    ls = Legs::l23;
  }
  const EmbeddedTensor er = embed(r, lr);
  const EmbeddedTensor es = embed(s, ls);
  Tensor3Builder out(r.algebra());
  for (const auto& [ri, rc] : er.tensor.terms()) {
    const auto [a, b] = ri;
    for (const auto& [si, sc] : es.tensor.terms()) {
      const auto [c, d] = si;
      const Poly num = rc.num() * sc.num();
      const Poly den = rc.den() * sc.den();
      switch (pair) {
        case LegPair::p12_13:
          for (const auto& [k, f] : g.bracket(a, c)) out.add_fraction({k, b, d}, num, den, f);
          break;
        case LegPair::p12_23:
          for (const auto& [k, f] : g.bracket(b, c)) out.add_fraction({a, k, d}, num, den, f);
          break;
        case LegPair::p13_23:
          for (const auto& [k, f] : g.bracket(b, d)) out.add_fraction({a, c, k}, num, den, f);
          break;
      }
    }
  }
  return out.build();
}

/// Exchanges the legs together with the spectral variables u and v.
inline Tensor2 swap(const Tensor2& r) {
  const std::map<Var, Var, VarPrecedence> names{{Var::u(), Var::v()}, {Var::v(), Var::u()}};
  Tensor2 out(r.algebra());
  for (const auto& [ix, c] : r.terms()) out.add(ix.second, ix.first, c.rename(names));
  return out;
}

/// Rotates the legs of a Tensor3 (leg 3 → 1, 1 → 2, 2 → 3), carrying each
/// leg's spectral variable along.
inline Tensor3 rotate_legs(const Tensor3& t) {
  const std::map<Var, Var, VarPrecedence> names{
      {Var::u1(), Var::u2()}, {Var::u2(), Var::u3()}, {Var::u3(), Var::u1()}};
  Tensor3 out(t.algebra());
  for (const auto& [ix, c] : t.terms()) out.add({ix[2], ix[0], ix[1]}, c.rename(names));
  return out;
}

/// [p(u)⊗1 + 1⊗p(v), t].
inline Tensor2 ad2_action(const GPoly& p, const Tensor2& t) {
  const LieTable& g = t.table();
  const RatFun u = RatFun::var(Var::u());
  const RatFun v = RatFun::var(Var::v());
  Tensor2 out(t.algebra());
  for (const auto& [deg, x] : p.terms()) {
    g.check(x);
    const RatFun up = u.pow(deg);
    const RatFun vp = v.pow(deg);
    for (const auto& [ix, c] : t.terms()) {
      const auto [a, b] = ix;
      const GElement xa = bracket(g, x, g.basis(a));
      const GElement xb = bracket(g, x, g.basis(b));
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (xa[k] != 0) out.add(k, b, c * up * RatFun(xa[k]));
        if (xb[k] != 0) out.add(a, k, c * vp * RatFun(xb[k]));
      }
    }
  }
  return out;
}

inline bool is_zero(const Tensor2& t) { return t.is_zero(); }
inline bool is_zero(const Tensor3& t) { return t.is_zero(); }

/// Every coefficient has a constant reduced denominator.
inline bool is_polynomial(const Tensor2& t) {
  for (const auto& [ix, c] : t.terms())
    if (!c.is_polynomial()) return false;
  return true;
}
inline bool is_polynomial(const Tensor3& t) {
  for (const auto& [ix, c] : t.terms())
    if (!c.is_polynomial()) return false;
  return true;
}

/// swap(t) = -t.
inline bool is_skew(const Tensor2& t) { return swap(t) == -t; }

/// Scaled Casimir element c · Σ x_i ⊗ x^i (Killing-dual bases).
struct CasimirSpec {
  Rational scale;
  Tensor2 tensor;
};

inline CasimirSpec casimir(const Algebra& g, const Rational& scale) {
  const auto inv = inverse(g->killing_matrix());
  if (!inv) throw invalid_input("invariant form is singular");
  Tensor2 omega(g);
  for (std::size_t a = 0; a < g->dim(); ++a)
    for (std::size_t b = 0; b < g->dim(); ++b)
      if ((*inv)(a, b) != 0) omega.add(a, b, RatFun(Rational(scale * (*inv)(a, b))));
  return {scale, omega};
}

/// [Ω, a⊗1 + 1⊗a] = 0 for every basis a and swap(Ω) = Ω.
inline bool is_invariant_symmetric(const Tensor2& omega) {
  const LieTable& g = omega.table();
  for (std::size_t a = 0; a < g.dim(); ++a)
    if (!ad2_action(GPoly::monomial(g.basis(a), 0), omega).is_zero()) return false;
  return swap(omega) == omega;
}

}  // namespace qrcybe
