#pragma once

// Sparse multivariate polynomials over the rationals in named variables.
//
// Terms are stored in descending graded-lexicographic order; variable
// precedence is u, v, u1, u2, u3 and then any other name alphabetically.
// Equal polynomials therefore have identical representations.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qrcybe/error.hpp"
#include "qrcybe/rational.hpp"

namespace qrcybe {

namespace detail {

inline constexpr std::uint32_t kFixedVars = 5;

struct VarRegistry {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;

  VarRegistry() {
    for (const char* n : {"u", "v", "u1", "u2", "u3"}) {
      ids.emplace(n, static_cast<std::uint32_t>(names.size()));
      names.emplace_back(n);
    }
  }
};

inline VarRegistry& var_registry() {
  static VarRegistry registry;
  return registry;
}

}  // namespace detail

/// Interned variable name.
class Var {
 public:
  Var() = default;

  explicit Var(std::string_view name) {
    if (name.empty()) throw invalid_input("empty variable name");
    auto& reg = detail::var_registry();
    std::lock_guard lock(reg.mutex);
    auto it = reg.ids.find(std::string(name));
    if (it != reg.ids.end()) {
      id_ = it->second;
    } else {
      id_ = static_cast<std::uint32_t>(reg.names.size());
      reg.names.emplace_back(name);
      reg.ids.emplace(std::string(name), id_);
    }
  }

  std::uint32_t id() const noexcept { return id_; }

  const std::string& name() const {
    auto& reg = detail::var_registry();
    std::lock_guard lock(reg.mutex);
    return reg.names[id_];
  }

  friend bool operator==(Var a, Var b) noexcept { return a.id_ == b.id_; }
  friend bool operator!=(Var a, Var b) noexcept { return a.id_ != b.id_; }

  static Var u() { return from_id(0); }
  static Var v() { return from_id(1); }
  static Var u1() { return from_id(2); }
  static Var u2() { return from_id(3); }
  static Var u3() { return from_id(4); }

 private:
  static Var from_id(std::uint32_t id) {
    Var x;
    x.id_ = id;
    return x;
  }

  std::uint32_t id_ = 0;
};

/// True when `a` has higher precedence than `b` in the term order.
inline bool precedes(Var a, Var b) {
  const bool fa = a.id() < detail::kFixedVars;
  const bool fb = b.id() < detail::kFixedVars;
  if (fa && fb) return a.id() < b.id();
  if (fa != fb) return fa;
  return a.name() < b.name();
}

struct VarPrecedence {
  bool operator()(Var a, Var b) const { return precedes(a, b); }
};

/// Power product; factors sorted by precedence, exponents nonzero.
class Monomial {
 public:
  using Factor = std::pair<Var, int>;

  Monomial() = default;

  static Monomial of(Var x, int exponent = 1) {
    Monomial m;
    if (exponent != 0) {
      m.factors_.emplace_back(x, exponent);
      m.degree_ = exponent;
    }
    return m;
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return factors_.empty(); }

  int exponent(Var x) const {
    for (const auto& [y, e] : factors_)
      if (y == x) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
      if (ib == b.factors_.end() ||
          (ia != a.factors_.end() && precedes(ia->first, ib->first))) {
        out.factors_.push_back(*ia++);
      } else if (ia == a.factors_.end() || precedes(ib->first, ia->first)) {
        out.factors_.push_back(*ib++);
      } else {
        const int e = ia->second + ib->second;
        if (e != 0) out.factors_.emplace_back(ia->first, e);
        ++ia;
        ++ib;
      }
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
  }

  /// a / b; only meaningful when divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial inv;
    for (const auto& [x, e] : b.factors_) inv.factors_.emplace_back(x, -e);
    inv.degree_ = -b.degree_;
    return a * inv;
  }

  /// Whether b divides a (non-negative exponents assumed).
  friend bool divides(const Monomial& b, const Monomial& a) {
    for (const auto& [x, e] : b.factors_)
      if (a.exponent(x) < e) return false;
    return true;
  }

  /// Drops `x` from the power product.
  Monomial without(Var x) const {
    Monomial out;
    for (const auto& f : factors_) {
      if (f.first == x) continue;
      out.factors_.push_back(f);
      out.degree_ += f.second;
    }
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  friend class Poly;
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Graded lexicographic comparison: -1, 0 or 1.
inline int compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
      ++ia;
      ++ib;
      continue;
    }
    return precedes(ia->first, ib->first) ? 1 : -1;
  }
  if (ia != a.factors().end()) return 1;
  if (ib != b.factors().end()) return -1;
  return 0;
}

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
};

class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coeff == b.coeff;
    }
  };

  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Monomial{}, c});
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(Var x) { return monomial(Monomial::of(x), 1); }

  static Poly monomial(Monomial m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(const std::vector<Term>& terms) {
    std::map<Monomial, Rational, MonomialGreater> acc;
    for (const auto& t : terms) {
      auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
      if (!fresh) it->second += t.coeff;
    }
    return from_map(acc);
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  Rational constant_value() const {
    return terms_.empty() || !terms_.back().mono.is_one() ? Rational(0)
                                                          : terms_.back().coeff;
  }
  const Term& leading_term() const {
    if (terms_.empty()) throw invalid_input("leading term of zero polynomial");
    return terms_.front();
  }
  const Rational& leading_coeff() const { return leading_term().coeff; }
  int total_degree() const {
    return terms_.empty() ? -1 : terms_.front().mono.degree();
  }

  int degree_in(Var x) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(x));
    return d;
  }

  bool contains(Var x) const {
    for (const auto& t : terms_)
      if (t.mono.exponent(x) != 0) return true;
    return false;
  }

  std::vector<Var> variables() const {
    std::set<Var, VarPrecedence> vs;
    for (const auto& t : terms_)
      for (const auto& f : t.mono.factors()) vs.insert(f.first);
    return {vs.begin(), vs.end()};
  }

  /// View as a polynomial in `x`: exponent -> coefficient free of x.
  std::map<int, Poly> coefficients_in(Var x) const {
    std::map<int, std::vector<Term>> parts;
    for (const auto& t : terms_)
      parts[t.mono.exponent(x)].push_back({t.mono.without(x), t.coeff});
    std::map<int, Poly> out;
    for (auto& [e, ts] : parts) out.emplace(e, from_terms(ts));
    return out;
  }

  Poly coefficient_in(Var x, int e) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
      if (t.mono.exponent(x) == e) ts.push_back({t.mono.without(x), t.coeff});
    return from_terms(ts);
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading_coeff());
  }

  /// Injective variable renaming.
  Poly rename(const std::map<Var, Var, VarPrecedence>& names) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (const auto& [x, e] : t.mono.factors()) {
        auto it = names.find(x);
        m = m * Monomial::of(it == names.end() ? x : it->second, e);
      }
      ts.push_back({std::move(m), t.coeff});
    }
    return from_terms(ts);
  }

  Poly pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) {
    return merge(a, b, -1);
  }
  friend Poly operator-(const Poly& a) { return a * Rational(-1); }

  friend Poly operator*(const Poly& a, const Rational& c) {
    if (c == 0) return {};
    Poly out = a;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) return b * a.terms_[0].coeff;
    if (b.is_constant()) return a * b.terms_[0].coeff;
    if (a.size() == 1) return b.times_term(a.terms_[0]);
    if (b.size() == 1) return a.times_term(b.terms_[0]);
    std::map<Monomial, Rational, MonomialGreater> acc;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        auto [it, fresh] = acc.try_emplace(ta.mono * tb.mono, ta.coeff * tb.coeff);
        if (!fresh) it->second += ta.coeff * tb.coeff;
      }
    }
    return from_map(acc);
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiplication by a single term; grlex is a monomial order, so the
  /// sorted layout survives.
  Poly times_term(const Term& t) const {
    Poly out;
    out.terms_.reserve(terms_.size());
    for (const auto& s : terms_)
      out.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return out;
  }

 private:
  static Poly from_map(const std::map<Monomial, Rational, MonomialGreater>& acc) {
    Poly p;
    p.terms_.reserve(acc.size());
    for (const auto& [m, c] : acc)
      if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  static Poly merge(const Poly& a, const Poly& b, int sign) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
      const int c = compare(ia->mono, ib->mono);
      if (c > 0) {
        out.terms_.push_back(*ia++);
      } else if (c < 0) {
        out.terms_.push_back({ib->mono, sign > 0 ? ib->coeff : Rational(-ib->coeff)});
        ++ib;
      } else {
        Rational s = sign > 0 ? Rational(ia->coeff + ib->coeff)
                              : Rational(ia->coeff - ib->coeff);
        if (s != 0) out.terms_.push_back({ia->mono, std::move(s)});
        ++ia;
        ++ib;
      }
    }
    for (; ia != a.terms_.end(); ++ia) out.terms_.push_back(*ia);
    for (; ib != b.terms_.end(); ++ib)
      out.terms_.push_back({ib->mono, sign > 0 ? ib->coeff : Rational(-ib->coeff)});
    return out;
  }

  std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws when b does not divide a.
inline Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw invalid_input("polynomial division by zero");
  if (b.is_constant()) return a * Rational(1 / b.constant_value());
  std::vector<Poly::Term> quotient;
  Poly rest = a;
  const auto& lead = b.leading_term();
  while (!rest.is_zero()) {
    const auto& lt = rest.leading_term();
    if (!divides(lead.mono, lt.mono))
      throw invalid_input("inexact polynomial division");
    Poly::Term q{lt.mono / lead.mono, lt.coeff / lead.coeff};
    rest = rest - b.times_term(q);
    quotient.push_back(std::move(q));
  }
  return Poly::from_terms(quotient);
}

namespace detail {

/// Pseudo-remainder of a by b viewed as polynomials in x.
inline Poly pseudo_remainder(Poly a, const Poly& b, Var x) {
  const int db = b.degree_in(x);
  const Poly lcb = b.coefficient_in(x, db);
  while (!a.is_zero()) {
    const int da = a.degree_in(x);
    if (da < db) break;
    const Poly lca = a.coefficient_in(x, da);
    a = lcb * a - lca * b * Poly::monomial(Monomial::of(x, da - db), 1);
  }
  return a;
}

}  // namespace detail

Poly gcd(const Poly& a, const Poly& b);

namespace detail {

/// gcd of the coefficients of p viewed in x; monic.
inline Poly content_in(const Poly& p, Var x) {
  Poly g;
  for (const auto& [e, c] : p.coefficients_in(x)) {
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

}  // namespace detail

/// Monic greatest common divisor (content/primitive-part recursion on the
/// top variable, primitive remainder sequences for the univariate step).
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();

  std::set<Var, VarPrecedence> vars;
  for (Var x : a.variables()) vars.insert(x);
  for (Var x : b.variables()) vars.insert(x);
  const Var x = *vars.begin();

  if (!a.contains(x)) return gcd(a, detail::content_in(b, x));
  if (!b.contains(x)) return gcd(detail::content_in(a, x), b);

  const Poly ca = detail::content_in(a, x);
  const Poly cb = detail::content_in(b, x);
  Poly pa = divide_exact(a, ca);
  Poly pb = divide_exact(b, cb);
  const Poly g = gcd(ca, cb);

  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  for (;;) {
    Poly r = detail::pseudo_remainder(pa, pb, x);
    if (r.is_zero()) break;
    if (r.degree_in(x) == 0) {
      pb = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = divide_exact(r, detail::content_in(r, x)).monic();
  }
  return (g * pb).monic();
}

}  // namespace qrcybe
