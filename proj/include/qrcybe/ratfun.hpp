#pragma once

// Rational functions num/den in canonical reduced form, and truncated
// Laurent expansions in one distinguished variable.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qrcybe/poly.hpp"

namespace qrcybe {

/// num/den with gcd(num, den) = 1 and den monic under the grlex order.
/// Zero is 0/1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFun(long c) : RatFun(Rational(c)) {}          // NOLINT
  RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT

  RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw invalid_input("rational function with zero denominator");
    if (num.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den.is_constant()) {
      const Poly g = gcd(num, den);
      if (!g.is_constant()) {
        num = divide_exact(num, g);
        den = divide_exact(den, g);
      }
    }
    const Rational lc = den.leading_coeff();
    num_ = num * Rational(1 / lc);
    den_ = den * Rational(1 / lc);
  }

  static RatFun var(Var x) { return RatFun(Poly::variable(x)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept {
    return num_.is_constant() && den_.is_constant();
  }
  Rational constant_value() const {
    if (!is_constant()) throw invalid_input("rational function is not constant");
    return num_.constant_value();
  }

  std::vector<Var> variables() const {
    std::set<Var, VarPrecedence> vs;
    for (Var x : num_.variables()) vs.insert(x);
    for (Var x : den_.variables()) vs.insert(x);
    return {vs.begin(), vs.end()};
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.is_polynomial()) return RatFun(a.num_ + b.num_, raw{});
      return RatFun(a.num_ + b.num_, a.den_);
    }
    if (a.is_polynomial() && b.is_polynomial())
      return RatFun(a.num_ + b.num_, raw{});
    const Poly g = gcd(a.den_, b.den_);
    const Poly ac = divide_exact(b.den_, g);
    const Poly bc = divide_exact(a.den_, g);
    return RatFun(a.num_ * ac + b.num_ * bc, a.den_ * ac);
  }
  friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_, raw{}); }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial())
      return RatFun(a.num_ * b.num_, raw{});
    if (a.is_constant()) return RatFun(b.num_ * a.constant_value(), b.den_, raw{});
    if (b.is_constant()) return RatFun(a.num_ * b.constant_value(), a.den_, raw{});
    // Cross-cancel so the product needs no further reduction.
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly num = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
    Poly den = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
    const Rational lc = den.leading_coeff();
    return RatFun(num * Rational(1 / lc), den * Rational(1 / lc), raw{});
  }

  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw invalid_input("division by the zero rational function");
    return a * RatFun(b.den_, b.num_);
  }

  RatFun& operator+=(const RatFun& b) { return *this = *this + b; }
  RatFun& operator-=(const RatFun& b) { return *this = *this - b; }
  RatFun& operator*=(const RatFun& b) { return *this = *this * b; }

  /// Integer power; negative exponents invert.
  RatFun pow(int e) const {
    if (e < 0) return RatFun(1) / pow(-e);
    return RatFun(num_.pow(static_cast<unsigned>(e)),
                  den_.pow(static_cast<unsigned>(e)), raw{});
  }

  /// Injective renaming of variables; no gcd work needed.
  RatFun rename(const std::map<Var, Var, VarPrecedence>& names) const {
    Poly n = num_.rename(names);
    Poly d = den_.rename(names);
    const Rational lc = d.leading_coeff();
    return RatFun(n * Rational(1 / lc), d * Rational(1 / lc), raw{});
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct raw {};
  RatFun(Poly num, raw) : num_(std::move(num)), den_(1) {}
  RatFun(Poly num, Poly den, raw) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Poly(1);
  }

  Poly num_;
  Poly den_;
};

namespace detail {

inline RatFun evaluate(const Poly& p, const std::map<Var, RatFun, VarPrecedence>& at) {
  std::map<std::pair<std::uint32_t, int>, RatFun> powers;
  RatFun total;
  for (const auto& t : p.terms()) {
    RatFun term(t.coeff);
    for (const auto& [x, e] : t.mono.factors()) {
      auto it = at.find(x);
      if (it == at.end()) {
        term *= RatFun(Poly::monomial(Monomial::of(x, e), 1));
        continue;
      }
      auto key = std::make_pair(x.id(), e);
      auto pw = powers.find(key);
      if (pw == powers.end()) pw = powers.emplace(key, it->second.pow(e)).first;
      term *= pw->second;
    }
    total += term;
  }
  return total;
}

/// Sum of many rational functions, grouped by denominator so that gcd work
/// happens once per distinct denominator.
class RatFunSum {
 public:
  void add(const RatFun& r, const Rational& scale = 1) {
    if (r.is_zero() || scale == 0) return;
    auto [it, fresh] = groups_.try_emplace(r.den(), r.num() * scale);
    if (!fresh) it->second += r.num() * scale;
  }

  /// Adds num/den where den is not necessarily reduced against num.
  void add_fraction(const Poly& num, const Poly& den, const Rational& scale = 1) {
    if (num.is_zero() || scale == 0) return;
    const Rational lc = den.leading_coeff();
    const Poly d = den * Rational(1 / lc);
    auto [it, fresh] = groups_.try_emplace(d, num * Rational(scale / lc));
    if (!fresh) it->second += num * Rational(scale / lc);
  }

  RatFun total() const {
    RatFun out;
    for (const auto& [den, num] : groups_) {
      if (num.is_zero()) continue;
      out += den.is_constant() ? RatFun(num) : RatFun(num, den);
    }
    return out;
  }

 private:
  struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const {
      const auto& ta = a.terms();
      const auto& tb = b.terms();
      const std::size_t n = std::min(ta.size(), tb.size());
      for (std::size_t i = 0; i < n; ++i) {
        const int c = compare(ta[i].mono, tb[i].mono);
        if (c != 0) return c < 0;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
      }
      return ta.size() < tb.size();
    }
  };
  std::map<Poly, Poly, PolyLess> groups_;
};

}  // namespace detail

/// Composes `a` with the bindings. Unbound variables are left in place.
inline RatFun substitute(const RatFun& a, const std::map<Var, RatFun, VarPrecedence>& bindings) {
  const RatFun den = detail::evaluate(a.den(), bindings);
  if (den.is_zero())
    throw invalid_input("substitution makes the denominator identically zero");
  return detail::evaluate(a.num(), bindings) / den;
}

/// Finite Laurent polynomial in one distinguished variable with coefficients
/// that are rational functions of the remaining variables. When `floor()` is
/// set the object is a truncation: exponents below the floor are unknown.
class LaurentPoly {
 public:
  explicit LaurentPoly(Var x, std::optional<int> floor = std::nullopt)
      : var_(x), floor_(floor) {}

  Var variable() const noexcept { return var_; }
  std::optional<int> floor() const noexcept { return floor_; }
  const std::map<int, RatFun>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  RatFun coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFun() : it->second;
  }

  void add_term(int k, const RatFun& c) {
    if (floor_ && k < *floor_) return;
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Drops exponents below `lo` and records the truncation.
  LaurentPoly truncated(int lo) const {
    LaurentPoly out(var_, floor_ ? std::max(*floor_, lo) : lo);
    for (const auto& [k, c] : terms_) out.add_term(k, c);
    return out;
  }

  RatFun to_ratfun() const {
    RatFun out;
    for (const auto& [k, c] : terms_)
      out += c * RatFun::var(var_).pow(k);
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_same(a, b);
    LaurentPoly out(a.var_, max_floor(a.floor_, b.floor_));
    for (const auto& [k, c] : a.terms_) out.add_term(k, c);
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly out(a.var_, a.floor_);
    for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
    return out;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
  }

  /// Product; the floor of a truncated factor propagates.
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same(a, b);
    std::optional<int> fl;
    if (a.floor_ && !b.is_zero()) fl = *a.floor_ + b.terms_.rbegin()->first;
    if (b.floor_ && !a.is_zero()) {
      const int f = *b.floor_ + a.terms_.rbegin()->first;
      fl = fl ? std::min(*fl, f) : f;
    }
    LaurentPoly out(a.var_, fl);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
    return out;
  }

  /// Term-by-term equality (floors ignored).
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

 private:
  static void check_same(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var_ != b.var_)
      throw invalid_input("Laurent polynomials in different variables");
  }
  static std::optional<int> max_floor(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::max(*a, *b);
  }

  Var var_;
  std::optional<int> floor_;
  std::map<int, RatFun> terms_;
};

/// Expansion of `a` in descending powers of `x` (the region where x
/// dominates), keeping every term with x-exponent >= -order.
inline LaurentPoly expand_at_infinity(const RatFun& a, Var x, int order) {
  if (order < 0) throw invalid_input("expansion order must be non-negative");
  LaurentPoly out(x, -order);
  if (a.is_zero()) return out;

  std::map<int, RatFun> den;
  for (const auto& [e, c] : a.den().coefficients_in(x)) den.emplace(e, RatFun(c));
  std::map<int, RatFun> rest;
  for (const auto& [e, c] : a.num().coefficients_in(x)) rest.emplace(e, RatFun(c));

  const int m = den.rbegin()->first;
  const RatFun lead = den.rbegin()->second;
  for (int k = rest.rbegin()->first - m; k >= -order; --k) {
    auto it = rest.find(k + m);
    if (it == rest.end()) continue;
    const RatFun q = it->second / lead;
    out.add_term(k, q);
    for (const auto& [j, dj] : den) {
      auto [r, fresh] = rest.try_emplace(k + j, -(q * dj));
      if (!fresh) {
        r->second -= q * dj;
        if (r->second.is_zero()) rest.erase(r);
      }
    }
    if (rest.empty()) break;
  }
  return out;
}

/// Coefficient of x^k; `x` must be the distinguished variable of `p`.
inline RatFun laurent_coeff(const LaurentPoly& p, Var x, int k) {
  if (p.variable() != x)
    throw invalid_input("laurent_coeff: '" + x.name() +
                        "' is not the expansion variable '" + p.variable().name() + "'");
  if (p.floor() && k < *p.floor())
    throw invalid_input("laurent_coeff: exponent below the truncation floor");
  return p.coeff(k);
}

}  // namespace qrcybe
