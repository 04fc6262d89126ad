#pragma once

// sl(n) data: the E(i,j)/H(i) basis, structure constants obtained from the
// defining representation, the Killing form as trace(ad x ad y), polynomial
// and Laurent loop elements, and the distinguished subalgebras.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrcybe/linalg.hpp"

namespace qrcybe {

/// E(i,j) for i != j, or H(i) = E(i,i) - E(i+1,i+1). Indices are 1-based.
struct BasisLabel {
  enum class Kind { root, cartan };
  Kind kind = Kind::root;
  int i = 0;
  int j = 0;

  bool is_positive_root() const { return kind == Kind::root && i < j; }
  bool is_negative_root() const { return kind == Kind::root && i > j; }
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

class LieTable;
using Algebra = std::shared_ptr<const LieTable>;

/// Element of g in coordinates over the table's basis.
class GElement {
 public:
  GElement() = default;
  explicit GElement(std::size_t dim) : coords_(dim) {}
  explicit GElement(QVector coords) : coords_(std::move(coords)) {}

  static GElement unit(std::size_t dim, std::size_t index) {
    GElement x(dim);
    x.coords_.at(index) = 1;
    return x;
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const QVector& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  friend GElement operator+(GElement a, const GElement& b) {
    check(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i) a.coords_[i] += b.coords_[i];
    return a;
  }
  friend GElement operator-(GElement a, const GElement& b) {
    check(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i) a.coords_[i] -= b.coords_[i];
    return a;
  }
  friend GElement operator-(GElement a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend GElement operator*(const Rational& s, GElement a) {
    for (auto& c : a.coords_) c *= s;
    return a;
  }
  GElement& operator+=(const GElement& b) { return *this = *this + b; }
  friend bool operator==(const GElement&, const GElement&) = default;

 private:
  static void check(const GElement& a, const GElement& b) {
    if (a.dim() != b.dim()) throw invalid_input("elements of different algebras");
  }
  QVector coords_;
};

class LieTable {
 public:
  using Bracket = std::vector<std::pair<std::size_t, Rational>>;

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<BasisLabel>& labels() const noexcept { return labels_; }
  const BasisLabel& label(std::size_t a) const { return labels_.at(a); }

  /// Sparse [x_a, x_b] = Σ c_k x_k.
  const Bracket& bracket(std::size_t a, std::size_t b) const { return brackets_[a * dim() + b]; }
  const Rational& killing(std::size_t a, std::size_t b) const { return killing_(a, b); }
  const QMatrix& killing_matrix() const noexcept { return killing_; }
  const QMatrix& matrix(std::size_t a) const { return matrices_.at(a); }

  std::optional<std::size_t> index_of(const BasisLabel& l) const {
    for (std::size_t a = 0; a < labels_.size(); ++a)
      if (labels_[a] == l) return a;
    return std::nullopt;
  }

  /// `E(i,j)` / `H(i)`; with `aliases` and n = 2, `e`, `f`, `h`.
  std::string name(std::size_t a, bool aliases = true) const {
    const BasisLabel& l = labels_.at(a);
    if (aliases && n_ == 2) {
      if (l.kind == BasisLabel::Kind::cartan) return "h";
      return l.i < l.j ? "e" : "f";
    }
    if (l.kind == BasisLabel::Kind::cartan) return "H(" + std::to_string(l.i) + ")";
    return "E(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
  }

  GElement basis(std::size_t a) const { return GElement::unit(dim(), a); }
  GElement zero() const { return GElement(dim()); }

  /// Coordinates of a trace-free n×n matrix.
  GElement from_matrix(const QMatrix& m) const {
    GElement x(dim());
    Rational partial = 0;
    for (std::size_t a = 0; a < dim(); ++a) {
      const BasisLabel& l = labels_[a];
      if (l.kind == BasisLabel::Kind::root) x[a] = m(l.i - 1, l.j - 1);
    }
    for (std::size_t a = 0; a < dim(); ++a) {
      const BasisLabel& l = labels_[a];
      if (l.kind != BasisLabel::Kind::cartan) continue;
      partial += m(l.i - 1, l.i - 1);
      x[a] = partial;
    }
    Rational trace = 0;
    for (int k = 0; k < n_; ++k) trace += m(k, k);
    if (trace != 0) throw invalid_input("matrix is not trace-free");
    return x;
  }

  QMatrix to_matrix(const GElement& x) const {
    check(x);
    QMatrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    for (std::size_t a = 0; a < dim(); ++a) {
      if (x[a] == 0) continue;
      const QMatrix& b = matrices_[a];
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (b(i, j) != 0) m(i, j) += x[a] * b(i, j);
    }
    return m;
  }

  void check(const GElement& x) const {
    if (x.dim() != dim()) throw invalid_input("element does not belong to sl(" + std::to_string(n_) + ")");
  }

 private:
  friend Algebra make_sl(int n);

  int n_ = 0;
  std::vector<BasisLabel> labels_;
  std::vector<QMatrix> matrices_;
  std::vector<Bracket> brackets_;
  QMatrix killing_;
};

/// Builds sl(n), n >= 2. Basis order: E(i,j) for i != j lexicographically,
/// then H(1..n-1); for n = 2 that is e, f, h.
inline Algebra make_sl(int n) {
  if (n < 2) throw invalid_input("sl(n) needs n >= 2, got " + std::to_string(n));
  if (n > 12) throw invalid_input("sl(n) with n > 12 is not supported");
  auto t = std::make_shared<LieTable>();
  t->n_ = n;
  const auto un = static_cast<std::size_t>(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) t->labels_.push_back({BasisLabel::Kind::root, i, j});
  for (int i = 1; i < n; ++i) t->labels_.push_back({BasisLabel::Kind::cartan, i, i + 1});
  for (const auto& l : t->labels_) {
    QMatrix m(un, un);
    if (l.kind == BasisLabel::Kind::root) {
      m(l.i - 1, l.j - 1) = 1;
    } else {
      m(l.i - 1, l.i - 1) = 1;
      m(l.i, l.i) = -1;
    }
    t->matrices_.push_back(std::move(m));
  }
  const std::size_t d = t->dim();
  t->brackets_.resize(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      QMatrix c = t->matrices_[a] * t->matrices_[b];
      const QMatrix ba = t->matrices_[b] * t->matrices_[a];
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) c(i, j) -= ba(i, j);
      const GElement x = t->from_matrix(c);
      for (std::size_t k = 0; k < d; ++k)
        if (x[k] != 0) t->brackets_[a * d + b].emplace_back(k, x[k]);
    }
  }
  // ad matrices: column k of ad(x_a) holds [x_a, x_k].
  std::vector<QMatrix> ad(d, QMatrix(d, d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& [m, c] : t->brackets_[a * d + k]) ad[a](m, k) = c;
  t->killing_ = QMatrix(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const QMatrix p = ad[a] * ad[b];
      Rational tr = 0;
      for (std::size_t k = 0; k < d; ++k) tr += p(k, k);
      t->killing_(a, b) = tr;
    }
  return t;
}

inline GElement bracket(const LieTable& g, const GElement& x, const GElement& y) {
  g.check(x);
  g.check(y);
  GElement z(g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (y[b] == 0) continue;
      const Rational s = x[a] * y[b];
      for (const auto& [k, c] : g.bracket(a, b)) z[k] += s * c;
    }
  }
  return z;
}

inline Rational killing(const LieTable& g, const GElement& x, const GElement& y) {
  g.check(x);
  g.check(y);
  Rational s = 0;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < g.dim(); ++b)
      if (y[b] != 0 && g.killing(a, b) != 0) s += x[a] * y[b] * g.killing(a, b);
  }
  return s;
}

/// Finite sum Σ_k x_k u^k with integer (possibly negative) degrees.
class GPoly {
 public:
  GPoly() = default;

  static GPoly monomial(const GElement& x, int degree) {
    GPoly p;
    p.add(degree, x);
    return p;
  }

  const std::map<int, GElement>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  int min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  GElement coeff(int k, std::size_t dim) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GElement(dim) : it->second;
  }

  void add(int k, const GElement& x) {
    if (x.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, x);
    if (!fresh) {
      it->second += x;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend GPoly operator+(GPoly a, const GPoly& b) {
    for (const auto& [k, x] : b.terms_) a.add(k, x);
    return a;
  }
  friend GPoly operator-(const GPoly& a) {
    GPoly out;
    for (const auto& [k, x] : a.terms_) out.terms_.emplace(k, -x);
    return out;
  }
  friend GPoly operator-(const GPoly& a, const GPoly& b) { return a + (-b); }
  friend GPoly operator*(const Rational& s, const GPoly& a) {
    GPoly out;
    if (s == 0) return out;
    for (const auto& [k, x] : a.terms_) out.terms_.emplace(k, s * x);
    return out;
  }
  /// Multiplication by u^k.
  GPoly shifted(int k) const {
    GPoly out;
    for (const auto& [d, x] : terms_) out.terms_.emplace(d + k, x);
    return out;
  }
  friend bool operator==(const GPoly&, const GPoly&) = default;

 private:
  std::map<int, GElement> terms_;
};

/// Degreewise bracket [p, q](u).
inline GPoly bracket_poly(const LieTable& g, const GPoly& p, const GPoly& q) {
  GPoly out;
  for (const auto& [a, x] : p.terms())
    for (const auto& [b, y] : q.terms()) out.add(a + b, bracket(g, x, y));
  return out;
}

/// Linearly independent list of elements of g.
class GSubspace {
 public:
  GSubspace() = default;
  GSubspace(std::size_t ambient_dim, std::vector<GElement> elements)
      : dim_(ambient_dim), elements_(std::move(elements)) {
    for (const auto& x : elements_)
      if (x.dim() != dim_) throw invalid_input("subspace element of wrong dimension");
    if (qrcybe::rank(vectors(), dim_) != elements_.size())
      throw invalid_input("subspace basis is linearly dependent");
  }

  /// Keeps an independent subset spanning the same space.
  static GSubspace spanned_by(std::size_t ambient_dim, const std::vector<GElement>& xs) {
    std::vector<QVector> vs;
    for (const auto& x : xs) vs.push_back(x.coords());
    std::vector<GElement> basis;
    for (auto& v : span_basis(vs, ambient_dim)) basis.emplace_back(std::move(v));
    return GSubspace(ambient_dim, std::move(basis));
  }

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<GElement>& elements() const noexcept { return elements_; }
  const GElement& operator[](std::size_t i) const { return elements_[i]; }

  std::vector<QVector> vectors() const {
    std::vector<QVector> vs;
    for (const auto& x : elements_) vs.push_back(x.coords());
    return vs;
  }

  bool contains(const GElement& x) const { return in_span(vectors(), x.coords(), dim_); }
  bool contains(const GSubspace& s) const { return span_contains(vectors(), s.vectors(), dim_); }

  /// Coordinates of x in this basis (x must lie in the span).
  QVector coordinates_of(const GElement& x) const {
    QMatrix m(dim_, elements_.size() + 1);
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t r = 0; r < dim_; ++r) m(r, i) = elements_[i][r];
    for (std::size_t r = 0; r < dim_; ++r) m(r, elements_.size()) = -x[r];
    for (const auto& k : nullspace(m)) {
      if (k.back() == 0) continue;
      QVector c(elements_.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = k[i] / k.back();
      return c;
    }
    throw invalid_input("element is not in the subspace");
  }

  friend bool operator==(const GSubspace& a, const GSubspace& b) {
    return a.dim_ == b.dim_ && span_equal(a.vectors(), b.vectors(), a.dim_);
  }

 private:
  std::size_t dim_ = 0;
  std::vector<GElement> elements_;
};

inline GSubspace span_sum(const GSubspace& a, const GSubspace& b) {
  std::vector<GElement> xs = a.elements();
  xs.insert(xs.end(), b.elements().begin(), b.elements().end());
  return GSubspace::spanned_by(a.ambient_dim(), xs);
}

inline GSubspace span_intersection(const GSubspace& a, const GSubspace& b) {
  std::vector<GElement> xs;
  for (auto& v : intersection(a.vectors(), b.vectors(), a.ambient_dim())) xs.emplace_back(std::move(v));
  return GSubspace(a.ambient_dim(), std::move(xs));
}

/// Bracket closure check by exact rank.
inline bool is_subalgebra(const LieTable& g, const GSubspace& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!s.contains(bracket(g, s[i], s[j]))) return false;
  return true;
}

namespace detail {

template <class Pred>
GSubspace basis_subspace(const LieTable& g, Pred keep) {
  std::vector<GElement> xs;
  for (std::size_t a = 0; a < g.dim(); ++a)
    if (keep(g.label(a))) xs.push_back(g.basis(a));
  return GSubspace(g.dim(), std::move(xs));
}

}  // namespace detail

inline GSubspace cartan(const LieTable& g) {
  return detail::basis_subspace(g, [](const BasisLabel& l) { return l.kind == BasisLabel::Kind::cartan; });
}

inline GSubspace borel_plus(const LieTable& g) {
  return detail::basis_subspace(g, [](const BasisLabel& l) { return !l.is_negative_root(); });
}

inline GSubspace borel_minus(const LieTable& g) {
  return detail::basis_subspace(g, [](const BasisLabel& l) { return !l.is_positive_root(); });
}

/// Maximal parabolic P_k ⊇ b₊ dropping the k-th simple root: block
/// upper-triangular with diagonal blocks of sizes k and n-k.
inline GSubspace parabolic(const LieTable& g, int k) {
  if (k < 1 || k > g.n() - 1)
    throw invalid_input("parabolic index k=" + std::to_string(k) + " outside [1, " +
                        std::to_string(g.n() - 1) + "]");
  GSubspace p = detail::basis_subspace(g, [k](const BasisLabel& l) {
    if (!l.is_negative_root()) return true;
    return (l.i <= k) == (l.j <= k);
  });
  if (!is_subalgebra(g, p)) throw verification_error("parabolic subspace is not closed under bracket");
  return p;
}

/// Killing-orthogonal complement of `s` in g.
inline GSubspace orthogonal_complement_g(const GSubspace& s, const LieTable& g) {
  if (s.ambient_dim() != g.dim()) throw invalid_input("subspace of a different algebra");
  if (s.size() == 0) {
    std::vector<GElement> all;
    for (std::size_t a = 0; a < g.dim(); ++a) all.push_back(g.basis(a));
    return GSubspace(g.dim(), std::move(all));
  }
  QMatrix m(s.size(), g.dim());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      Rational acc = 0;
      for (std::size_t a = 0; a < g.dim(); ++a)
        if (s[i][a] != 0) acc += s[i][a] * g.killing(a, b);
      m(i, b) = acc;
    }
  std::vector<GElement> xs;
  for (auto& v : nullspace(m)) xs.emplace_back(std::move(v));
  return GSubspace::spanned_by(g.dim(), xs);
}

}  // namespace qrcybe
