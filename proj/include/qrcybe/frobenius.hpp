#pragma once

// Quasi-Frobenius data (L, B): a subalgebra L ⊂ g with a skew 2-cocycle B.
// A nondegenerate B gives the constant skew solution
//   r = Σ_ij (B⁻¹)_ji x_i ⊗ x_j
// over a basis x_i of L, and uvΩ/(v-u) + r is quasi-rational.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrcybe/catalog.hpp"
#include "qrcybe/linalg.hpp"

namespace qrcybe {

namespace detail {

/// Bracket structure of L: [x_i, x_j] = Σ_k c_ijk x_k. Empty if L is not closed.
inline std::optional<std::vector<std::vector<QVector>>> structure_in(const LieTable& g, const GSubspace& l) {
  const std::size_t m = l.size();
  std::vector<std::vector<QVector>> c(m, std::vector<QVector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const GElement z = bracket(g, l[i], l[j]);
      if (!l.contains(z)) return std::nullopt;
      c[i][j] = z.is_zero() ? QVector(m) : l.coordinates_of(z);
    }
  return c;
}

inline bool is_skew_matrix(const QMatrix& b) {
  if (b.rows() != b.cols()) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != -b(j, i)) return false;
  return true;
}

/// B([x,y],z) + B([y,z],x) + B([z,x],y) = 0 on basis triples.
inline bool cocycle_identity(const std::vector<std::vector<QVector>>& c, const QMatrix& b) {
  const std::size_t m = b.rows();
  auto B = [&](const QVector& x, std::size_t z) {
    Rational s = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (x[k] != 0) s += x[k] * b(k, z);
    return s;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (B(c[i][j], k) + B(c[j][k], i) + B(c[k][i], j) != 0) return false;
  return true;
}

}  // namespace detail

/// Skew 2-cocycle on a subalgebra, given by its matrix over the basis of L.
class TwoCocycle {
 public:
  TwoCocycle(Algebra g, GSubspace l, QMatrix b) : g_(std::move(g)), l_(std::move(l)), b_(std::move(b)) {
    if (l_.ambient_dim() != g_->dim()) throw invalid_input("subspace of a different algebra");
    if (b_.rows() != l_.size() || b_.cols() != l_.size())
      throw invalid_input("form matrix must be " + std::to_string(l_.size()) + "x" + std::to_string(l_.size()));
    if (!detail::is_skew_matrix(b_)) throw invalid_input("form is not skew-symmetric");
    const auto c = detail::structure_in(*g_, l_);
    if (!c) throw invalid_input("subspace is not closed under the bracket");
    if (!detail::cocycle_identity(*c, b_)) throw invalid_input("form violates the 2-cocycle identity");
  }

  const Algebra& algebra() const noexcept { return g_; }
  const GSubspace& sub() const noexcept { return l_; }
  const QMatrix& matrix() const noexcept { return b_; }

  Rational operator()(const GElement& x, const GElement& y) const {
    const QVector cx = l_.coordinates_of(x), cy = l_.coordinates_of(y);
    Rational s = 0;
    for (std::size_t i = 0; i < cx.size(); ++i)
      for (std::size_t j = 0; j < cy.size(); ++j)
        if (cx[i] != 0 && cy[j] != 0) s += cx[i] * b_(i, j) * cy[j];
    return s;
  }

 private:
  Algebra g_;
  GSubspace l_;
  QMatrix b_;
};

/// B(x, y) = K(f, [x, y]), a coboundary and hence a 2-cocycle.
inline TwoCocycle cocycle_from_functional(const Algebra& g, const GSubspace& l, const GElement& f) {
  QMatrix b(l.size(), l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) b(i, j) = killing(*g, f, bracket(*g, l[i], l[j]));
  return TwoCocycle(g, l, std::move(b));
}

enum class FrobeniusConvention { transpose_inverse, inverse };

namespace detail {

inline Tensor2 r_from_inverse(const TwoCocycle& B, const QMatrix& inv, FrobeniusConvention conv) {
  const GSubspace& l = B.sub();
  Tensor2 r(B.algebra());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      const Rational c = conv == FrobeniusConvention::transpose_inverse ? inv(j, i) : inv(i, j);
      if (c == 0) continue;
      r = r + Tensor2::simple(B.algebra(), l[i], l[j], RatFun(c));
    }
  return r;
}

}  // namespace detail

struct FrobeniusR {
  Tensor2 r;
  FrobeniusConvention convention;
};

/// Constant skew r-matrix of (L, B), with the convention that produced it.
/// The transpose-inverse is tried first; the plain inverse only if the
/// first fails the CYBE.
inline FrobeniusR skew_r_with_convention(const TwoCocycle& B) {
  const auto inv = inverse(B.matrix());
  if (!inv) throw invalid_input("2-cocycle is degenerate on L");
  for (auto conv : {FrobeniusConvention::transpose_inverse, FrobeniusConvention::inverse}) {
    Tensor2 r = detail::r_from_inverse(B, *inv, conv);
    if (!is_skew(r)) throw verification_error("r built from the 2-cocycle is not skew");
    if (cyb(r).is_zero()) return {std::move(r), conv};
  }
  throw verification_error("r built from the 2-cocycle does not solve the CYBE");
}

inline Tensor2 skew_r_from_frobenius(const TwoCocycle& B) { return skew_r_with_convention(B).r; }

struct ParabolicPairReport {
  int k = 0;
  bool subalgebra = false;
  bool sums_to_g = false;           ///< L + P_k = sl(n)
  bool cocycle = false;
  bool nondegenerate_on_intersection = false;
  std::size_t intersection_dim = 0;
  Rational restricted_determinant = 0;

  bool all() const { return subalgebra && sums_to_g && cocycle && nondegenerate_on_intersection; }
};

/// L + P_k = sl(n) and B nondegenerate on L ∩ P_k.
inline ParabolicPairReport check_theorem5_pair(const TwoCocycle& B, int k) {
  const LieTable& g = *B.algebra();
  const GSubspace& l = B.sub();
  const GSubspace pk = parabolic(g, k);
  ParabolicPairReport rep;
  rep.k = k;
  const auto c = detail::structure_in(g, l);
  rep.subalgebra = c.has_value();
  rep.cocycle = c && detail::cocycle_identity(*c, B.matrix());
  rep.sums_to_g = span_sum(l, pk).size() == g.dim();
  const GSubspace cap = span_intersection(l, pk);
  rep.intersection_dim = cap.size();
  QMatrix restricted(cap.size(), cap.size());
  for (std::size_t i = 0; i < cap.size(); ++i)
    for (std::size_t j = 0; j < cap.size(); ++j) restricted(i, j) = B(cap[i], cap[j]);
  rep.restricted_determinant = determinant(restricted);
  rep.nondegenerate_on_intersection = rep.restricted_determinant != 0;
  return rep;
}

/// uvΩ/(v-u) + r(L, B); throws verification_error unless quasi-rational.
inline Tensor2 quasi_rational_lift(const TwoCocycle& B, const CasimirSpec& omega) {
  const Tensor2 q = quasi_rational_leading(omega) + skew_r_from_frobenius(B);
  const auto rep = quasi_rational_report(q, omega);
  if (!rep.quasi_rational())
    throw verification_error("lift is not quasi-rational (" + std::to_string(rep.residual_terms) +
                             " CYB residual terms)");
  return q;
}

}  // namespace qrcybe
