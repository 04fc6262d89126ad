#pragma once

// Polynomial gauge transformations q ↦ Ad(p(u) ⊗ p(v)) q for p in SL(n, C[u]),
// and the action of Ad(p(u)) on subspaces of the D4 model.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qrcybe/doubles.hpp"

namespace qrcybe {

using PolyMatrix = std::vector<std::vector<Poly>>;

namespace detail {

inline PolyMatrix poly_identity(int n) {
  PolyMatrix m(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = Poly(1);
  return m;
}

inline PolyMatrix poly_product(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

/// Fraction-free (Bareiss) elimination.
inline Poly poly_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Poly();
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

inline PolyMatrix minor_of(const PolyMatrix& m, std::size_t r, std::size_t c) {
  PolyMatrix out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == r) continue;
    std::vector<Poly> row;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != c) row.push_back(m[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

/// Coefficient matrices of a polynomial matrix in u, by degree.
inline std::map<int, QMatrix> split_by_degree(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::map<int, QMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : m[i][j].coefficients_in(Var::u())) {
        auto it = out.try_emplace(k, n, n).first;
        it->second(i, j) = c.constant_value();
      }
  return out;
}

}  // namespace detail

/// n×n matrix over Q[u] with determinant 1; the inverse is the adjugate.
class PolyGroupElement {
 public:
  explicit PolyGroupElement(PolyMatrix m) : m_(std::move(m)) {
    const std::size_t n = m_.size();
    if (n < 2) throw invalid_input("group element must be at least 2x2");
    for (const auto& row : m_) {
      if (row.size() != n) throw invalid_input("group element must be square");
      for (const auto& e : row)
        for (const Var& x : e.variables())
          if (x != Var::u()) throw invalid_input("group element entries must be polynomials in u");
    }
    const Poly det = detail::poly_determinant(m_);
    if (!(det == Poly(1))) throw invalid_input("group element does not have determinant 1");
    inv_.assign(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Poly c = detail::poly_determinant(detail::minor_of(m_, j, i));
        inv_[i][j] = (i + j) % 2 == 0 ? c : -c;
      }
  }

  static PolyGroupElement identity(int n) { return PolyGroupElement(detail::poly_identity(n)); }

  /// I + t·u^d·E(i,j), i ≠ j (1-based).
  static PolyGroupElement unip(int n, int i, int j, int d, const Rational& t) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw invalid_input("unipotent needs an off-diagonal position in 1.." + std::to_string(n));
    if (d < 0) throw invalid_input("unipotent degree must be non-negative");
    PolyMatrix m = detail::poly_identity(n);
    m[i - 1][j - 1] = Poly::variable(Var::u()).pow(static_cast<unsigned>(d)) * t;
    return PolyGroupElement(std::move(m));
  }

  int n() const noexcept { return static_cast<int>(m_.size()); }
  const PolyMatrix& matrix() const noexcept { return m_; }
  const PolyMatrix& inverse_matrix() const noexcept { return inv_; }

  int degree() const {
    int d = 0;
    for (const auto& row : m_)
      for (const auto& e : row)
        if (!e.is_zero()) d = std::max(d, e.degree_in(Var::u()));
    return d;
  }

  /// Largest absolute value of a coefficient.
  Rational height() const {
    Rational h = 0;
    for (const auto& row : m_)
      for (const auto& e : row)
        for (const auto& [k, c] : e.coefficients_in(Var::u())) h = std::max(h, Rational(abs(c.constant_value())));
    return h;
  }

  friend PolyGroupElement operator*(const PolyGroupElement& a, const PolyGroupElement& b) {
    if (a.n() != b.n()) throw invalid_input("group elements of different sizes");
    return PolyGroupElement(detail::poly_product(a.m_, b.m_));
  }

  friend bool operator==(const PolyGroupElement& a, const PolyGroupElement& b) { return a.m_ == b.m_; }

 private:
  PolyMatrix m_;
  PolyMatrix inv_;
};

/// p(u) x(u) p(u)⁻¹ in the basis of g.
inline GPoly ad_element(const PolyGroupElement& p, const LieTable& g, const GPoly& x) {
  if (p.n() != g.n()) throw invalid_input("group element and algebra have different n");
  const std::size_t n = static_cast<std::size_t>(g.n());
  const Poly u = Poly::variable(Var::u());
  PolyMatrix xm(n, std::vector<Poly>(n));
  for (const auto& [k, elem] : x.terms()) {
    const QMatrix m = g.to_matrix(elem);
    // Negative degrees are shifted up and restored after conjugation.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0) xm[i][j] = xm[i][j] + u.pow(static_cast<unsigned>(k - x.min_degree())) * m(i, j);
  }
  const PolyMatrix y = detail::poly_product(detail::poly_product(p.matrix(), xm), p.inverse_matrix());
  GPoly out;
  for (const auto& [k, m] : detail::split_by_degree(y)) out.add(k + x.min_degree(), g.from_matrix(m));
  return out;
}

inline GPoly ad_element(const PolyGroupElement& p, const LieTable& g, const GElement& x) {
  return ad_element(p, g, GPoly::monomial(x, 0));
}

/// Σ c_ab(u,v) Ad(p(u))x_a ⊗ Ad(p(v))x_b. With `verify`, a CYBE solution
/// must map to a CYBE solution (verification_error otherwise).
inline Tensor2 gauge_transform(const PolyGroupElement& p, const Tensor2& r, bool verify = true) {
  const LieTable& g = r.table();
  std::vector<GPoly> images;
  for (std::size_t a = 0; a < g.dim(); ++a) images.push_back(ad_element(p, g, g.basis(a)));
  const Poly u = Poly::variable(Var::u()), v = Poly::variable(Var::v());
  Tensor2 out(r.algebra());
  for (const auto& [ix, c] : r.terms())
    for (const auto& [k, x] : images[ix.first].terms())
      for (const auto& [l, y] : images[ix.second].terms()) {
        const RatFun s = c * RatFun(u.pow(static_cast<unsigned>(k)) * v.pow(static_cast<unsigned>(l)));
        for (std::size_t a = 0; a < g.dim(); ++a) {
          if (x[a] == 0) continue;
          for (std::size_t b = 0; b < g.dim(); ++b)
            if (y[b] != 0) out.add(a, b, s * RatFun(Rational(x[a] * y[b])));
        }
      }
  if (verify && cyb(r).is_zero() && !cyb(out).is_zero())
    throw verification_error("gauge transform of a CYBE solution violates the CYBE");
  return out;
}

/// Ad(p(u)) on the D4 model: loop parts are conjugated by p(u); the g[ε]
/// part by the 1-jet p(0) + p'(0)ε, matching the embedding u ↦ ε.
inline SubspaceBasis transform_subalgebra(const PolyGroupElement& p, const SubspaceBasis& w) {
  const Ambient& A = w.ambient();
  if (A.kind() != DoubleKind::d4) throw invalid_input("expected a subspace of the D4 model");
  const LieTable& g = A.table();
  const auto jet = detail::split_by_degree(p.matrix());
  const auto ijet = detail::split_by_degree(p.inverse_matrix());
  const std::size_t n = static_cast<std::size_t>(g.n());
  auto coeff = [&](const std::map<int, QMatrix>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? QMatrix(n, n) : it->second;
  };
  const QMatrix P0 = coeff(jet, 0), P1 = coeff(jet, 1), Q0 = coeff(ijet, 0), Q1 = coeff(ijet, 1);
  std::vector<QVector> out;
  for (const auto& vec : w.vectors()) {
    const D4Element x = A.d4_of(vec);
    const GPoly loop = x.loop.is_zero() ? GPoly() : ad_element(p, g, x.loop);
    const QMatrix a0 = g.to_matrix(x.a0), a1 = g.to_matrix(x.a1);
    const QMatrix b0 = P0 * a0 * Q0;
    const QMatrix b1 = P1 * a0 * Q0 + P0 * a1 * Q0 + P0 * a0 * Q1;
    out.push_back(A.coords(D4Element{loop, g.from_matrix(b0), g.from_matrix(b1)}));
  }
  return SubspaceBasis(w.ambient_ptr(), std::move(out));
}

struct RandomGauge {
  PolyGroupElement p;
  std::string description;
};

/// Seeded products of 1-3 unipotents I + t·u^d·E(i,j) with d ≤ 2 and
/// 1 ≤ |t| ≤ 3, kept only when the product has degree ≤ 2 and height ≤ 3.
inline std::vector<RandomGauge> random_unipotents(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> factors(1, 3), pos(1, n), deg(0, 2), scalar(1, 3), sign(0, 1);
  std::vector<RandomGauge> out;
  while (out.size() < count) {
    PolyGroupElement p = PolyGroupElement::identity(n);
    std::string desc;
    const int f = factors(rng);
    for (int s = 0; s < f; ++s) {
      int i = pos(rng), j = pos(rng);
      while (j == i) j = pos(rng);
      const int d = deg(rng);
      const int t = scalar(rng) * (sign(rng) ? -1 : 1);
      p = p * PolyGroupElement::unip(n, i, j, d, Rational(t));
      if (!desc.empty()) desc += " * ";
      desc += "unip(E(" + std::to_string(i) + "," + std::to_string(j) + ")," + std::to_string(d) + "," +
              std::to_string(t) + ")";
    }
    if (p.degree() <= 2 && p.height() <= 3) out.push_back({std::move(p), std::move(desc)});
  }
  return out;
}

}  // namespace qrcybe
