#pragma once

// Text formats:
//
//   r-matrix document
//     algebra sl(2);
//     u*v/(v-u)*Omega + 1*e(x)h - 1*h(x)e
//
//   quasi-Frobenius fixture (L, B)
//     algebra sl(2);
//     basis e, h;
//     form [0, 1; -1, 0];          # or: functional f;
//     k 1;                         # optional parabolic index
//
//   D4 subspace fixture
//     algebra sl(2);
//     window -8 4;                 # optional
//     tail 1;
//     loops_upto 0;                # all x u^k with k <= 0 in the window
//     epsilon all;                 # all (0, 0, x)
//     element [ 2*e*u^-1 + h | 0 | f ];
//
//   gauge product
//     unip(e,1,1) * unip(E(2,1),0,-2)

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qrcybe/catalog.hpp"
#include "qrcybe/doubles.hpp"
#include "qrcybe/expr.hpp"
#include "qrcybe/gauge.hpp"

namespace qrcybe {

namespace detail {

inline bool is_basis_start(const TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.kind != Token::Kind::identifier) return false;
  return t.text == "E" || t.text == "H" || t.text == "e" || t.text == "f" || t.text == "h";
}

/// header := 'algebra' 'sl' '(' INT ')' ';'
inline Algebra parse_header(TokenStream& ts) {
  ts.expect_identifier("algebra");
  ts.expect_identifier("sl");
  ts.expect_symbol('(');
  const Token at = ts.peek();
  const long n = ts.expect_integer();
  if (n < 2 || n > 12) TokenStream::fail_at(at, "sl(n) needs 2 <= n <= 12");
  ts.expect_symbol(')');
  ts.expect_symbol(';');
  return make_sl(static_cast<int>(n));
}

/// basis := 'E' '(' INT ',' INT ')' | 'H' '(' INT ')' | 'e' | 'f' | 'h'
inline std::size_t parse_basis(TokenStream& ts, const LieTable& g) {
  const Token t = ts.peek();
  if (t.kind != Token::Kind::identifier) ts.fail("expected a basis element");
  ts.next();
  std::optional<std::size_t> ix;
  if (t.text == "e" || t.text == "f" || t.text == "h") {
    if (g.n() != 2) TokenStream::fail_at(t, "basis alias '" + t.text + "' is only defined for sl(2)");
    if (t.text == "e") ix = g.index_of({BasisLabel::Kind::root, 1, 2});
    else if (t.text == "f") ix = g.index_of({BasisLabel::Kind::root, 2, 1});
    else ix = g.index_of({BasisLabel::Kind::cartan, 1, 2});
  } else if (t.text == "E") {
    ts.expect_symbol('(');
    const long i = ts.expect_integer();
    ts.expect_symbol(',');
    const long j = ts.expect_integer();
    ts.expect_symbol(')');
    if (i < 1 || j < 1 || i > g.n() || j > g.n() || i == j)
      TokenStream::fail_at(t, "E(" + std::to_string(i) + "," + std::to_string(j) + ") is not a basis element of sl(" +
                                  std::to_string(g.n()) + ")");
    ix = g.index_of({BasisLabel::Kind::root, static_cast<int>(i), static_cast<int>(j)});
  } else if (t.text == "H") {
    ts.expect_symbol('(');
    const long i = ts.expect_integer();
    ts.expect_symbol(')');
    if (i < 1 || i > g.n() - 1)
      TokenStream::fail_at(t, "H(" + std::to_string(i) + ") is not a basis element of sl(" + std::to_string(g.n()) + ")");
    ix = g.index_of({BasisLabel::Kind::cartan, static_cast<int>(i), static_cast<int>(i + 1)});
  } else {
    TokenStream::fail_at(t, "unknown basis symbol '" + t.text + "'");
  }
  if (!ix) TokenStream::fail_at(t, "unknown basis symbol");
  return *ix;
}

/// INT ['/' INT] or '(' ['-'] INT ['/' INT] ')'.
inline Rational parse_scalar(TokenStream& ts) {
  if (ts.accept_symbol('(')) {
    const Rational q = ts.expect_rational();
    ts.expect_symbol(')');
    return q;
  }
  return ts.expect_rational();
}

/// Linear combination of basis elements with rational coefficients, or '0'.
inline GElement parse_g_element(TokenStream& ts, const LieTable& g) {
  GElement x = g.zero();
  if (ts.peek().kind == Token::Kind::integer && ts.peek().text == "0" && !ts.is_symbol('*', 1) &&
      !ts.is_symbol('/', 1)) {
    ts.next();
    return x;
  }
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (ts.accept_symbol('-')) sign = -1;
    else if (!first && !ts.accept_symbol('+')) break;
    else if (first) ts.accept_symbol('+');
    Rational c = 1;
    if (!is_basis_start(ts)) {
      c = parse_scalar(ts);
      ts.expect_symbol('*');
    }
    x = x + (sign * c) * g.basis(parse_basis(ts, g));
    first = false;
    if (!ts.is_symbol('+') && !ts.is_symbol('-')) break;
  }
  return x;
}

inline void expect_end(TokenStream& ts) {
  if (!ts.at_end()) ts.fail("trailing input");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// r-matrix documents

struct DocumentTerm {
  enum class Factor { omega, pair };
  RatFun coeff;
  Factor factor = Factor::pair;
  std::size_t left = 0;
  std::size_t right = 0;
  int line = 1;
  int column = 1;
};

struct RMatrixDocument {
  Algebra algebra;
  std::vector<DocumentTerm> terms;

  /// Exact tensor; Omega expands through the calibrated Casimir.
  Tensor2 tensor() const {
    Tensor2 r(algebra);
    std::optional<CasimirSpec> omega;
    for (const auto& t : terms) {
      if (t.factor == DocumentTerm::Factor::omega) {
        if (!omega) omega = casimir(algebra, calibrated_scale());
        r = r + t.coeff * omega->tensor;
      } else {
        r.add(t.left, t.right, t.coeff);
      }
    }
    return r;
  }
};

namespace detail {

/// term := [coeff '*'] factor, coeff a product/quotient of unary pieces.
inline DocumentTerm parse_doc_term(TokenStream& ts, const LieTable& g) {
  DocumentTerm term;
  term.line = ts.peek().line;
  term.column = ts.peek().column;
  CoefficientParser cp(ts);
  RatFun coeff(1);
  if (!is_basis_start(ts) && !ts.is_identifier("Omega")) {
    coeff = cp.unary();
    for (;;) {
      if (ts.accept_symbol('*')) {
        if (is_basis_start(ts) || ts.is_identifier("Omega")) break;
        coeff *= cp.unary();
      } else if (ts.is_symbol('/')) {
        const Token at = ts.next();
        const RatFun d = cp.unary();
        if (d.is_zero()) TokenStream::fail_at(at, "division by zero");
        coeff = coeff / d;
      } else {
        ts.fail("expected '*' before the tensor factor");
      }
    }
  }
  term.coeff = coeff;
  if (ts.is_identifier("Omega")) {
    ts.next();
    term.factor = DocumentTerm::Factor::omega;
    return term;
  }
  term.factor = DocumentTerm::Factor::pair;
  term.left = parse_basis(ts, g);
  if (ts.peek().kind != Token::Kind::tensor) ts.fail("expected '(x)'");
  ts.next();
  term.right = parse_basis(ts, g);
  return term;
}

}  // namespace detail

/// document := header ['-'] term (('+'|'-') term)*
inline RMatrixDocument parse_rmatrix(std::string_view text) {
  TokenStream ts(text);
  RMatrixDocument doc;
  doc.algebra = detail::parse_header(ts);
  RatFun sign(1);
  if (ts.accept_symbol('-')) sign = RatFun(-1);
  else ts.accept_symbol('+');
  for (;;) {
    DocumentTerm t = detail::parse_doc_term(ts, *doc.algebra);
    t.coeff = sign * t.coeff;
    doc.terms.push_back(std::move(t));
    if (ts.accept_symbol('+')) sign = RatFun(1);
    else if (ts.accept_symbol('-')) sign = RatFun(-1);
    else break;
  }
  detail::expect_end(ts);
  return doc;
}

/// Canonical text: one `(num)/(den)*x(x)y` term per nonzero coefficient,
/// in basis order, without aliases. The zero tensor prints as `0*H(1)(x)H(1)`.
inline std::string print_rmatrix(const Tensor2& r) {
  const LieTable& g = r.table();
  std::string out = "algebra sl(" + std::to_string(g.n()) + ");\n";
  if (r.is_zero()) return out + "0*" + g.name(g.dim() - 1, false) + "(x)" + g.name(g.dim() - 1, false) + "\n";
  bool first = true;
  for (const auto& [ix, c] : r.terms()) {
    if (!first) out += "\n+ ";
    first = false;
    out += "(" + to_string(c.num()) + ")";
    if (!c.den().is_constant() || c.den().constant_value() != 1) out += "/(" + to_string(c.den()) + ")";
    out += "*" + g.name(ix.first, false) + "(x)" + g.name(ix.second, false);
  }
  return out + "\n";
}

inline std::string print_rmatrix(const RMatrixDocument& doc) { return print_rmatrix(doc.tensor()); }

/// Seeded document over sl(n) mixing Omega terms, basis pairs and small
/// rational-function coefficients in u, v.
inline std::string random_document(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Algebra g = make_sl(n);
  auto basis_name = [&]() {
    const auto a = static_cast<std::size_t>(pick(0, static_cast<int>(g->dim()) - 1));
    return g->name(a, pick(0, 1) == 1);
  };
  auto small = [&]() { return std::to_string(pick(1, 5)); };
  auto coefficient = [&]() -> std::string {
    switch (pick(0, 5)) {
      case 0: return small();
      case 1: return "(" + small() + "/" + std::to_string(pick(2, 7)) + ")";
      case 2: return "u^" + std::to_string(pick(1, 3));
      case 3: return small() + "*u*v";
      case 4: return "(u" + std::string(pick(0, 1) ? "+" : "-") + small() + "*v)/(v-u)";
      default: return "u*v/(v-u)";
    }
  };
  std::string out = "algebra sl(" + std::to_string(n) + ");\n";
  const int terms = pick(1, 6);
  for (int t = 0; t < terms; ++t) {
    if (t > 0) out += pick(0, 1) ? " + " : " - ";
    const int shape = pick(0, 3);
    if (shape == 0) out += coefficient() + "*Omega";
    else if (shape == 1) out += basis_name() + "(x)" + basis_name();
    else out += coefficient() + "*" + basis_name() + "(x)" + basis_name();
  }
  return out + "\n";
}

// ---------------------------------------------------------------------------
// Quasi-Frobenius fixture

struct FrobeniusFixture {
  Algebra algebra;
  GSubspace sub;
  QMatrix form;
  std::optional<int> k;
};

inline FrobeniusFixture parse_frobenius_fixture(std::string_view text) {
  TokenStream ts(text);
  FrobeniusFixture fx;
  fx.algebra = detail::parse_header(ts);
  const LieTable& g = *fx.algebra;
  std::vector<GElement> basis;
  bool have_basis = false, have_form = false;
  std::optional<GElement> functional;
  while (!ts.at_end()) {
    const Token kw = ts.next();
    if (kw.kind != Token::Kind::identifier) TokenStream::fail_at(kw, "expected a directive");
    if (kw.text == "basis") {
      if (!ts.is_symbol(';')) {
        do basis.push_back(detail::parse_g_element(ts, g));
        while (ts.accept_symbol(','));
      }
      have_basis = true;
    } else if (kw.text == "form") {
      ts.expect_symbol('[');
      std::vector<std::vector<Rational>> rows(1);
      if (!ts.is_symbol(']')) {
        for (;;) {
          rows.back().push_back(ts.expect_rational());
          if (ts.accept_symbol(',')) continue;
          if (ts.accept_symbol(';')) {
            rows.emplace_back();
            continue;
          }
          break;
        }
      } else {
        rows.clear();
      }
      ts.expect_symbol(']');
      fx.form = QMatrix(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) TokenStream::fail_at(kw, "form matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) fx.form(i, j) = rows[i][j];
      }
      have_form = true;
    } else if (kw.text == "functional") {
      functional = detail::parse_g_element(ts, g);
    } else if (kw.text == "k") {
      fx.k = static_cast<int>(ts.expect_integer());
    } else {
      TokenStream::fail_at(kw, "unknown directive '" + kw.text + "'");
    }
    ts.expect_symbol(';');
  }
  if (!have_basis) ts.fail("missing 'basis' directive");
  try {
    fx.sub = GSubspace(g.dim(), basis);
  } catch (const invalid_input& e) {
    ts.fail(e.what());
  }
  if (functional && have_form) ts.fail("give either 'form' or 'functional', not both");
  if (functional) {
    fx.form = QMatrix(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) fx.form(i, j) = killing(g, *functional, bracket(g, basis[i], basis[j]));
  } else if (!have_form) {
    if (!basis.empty()) ts.fail("missing 'form' or 'functional' directive");
    fx.form = QMatrix(0, 0);
  }
  if (fx.form.rows() != basis.size()) ts.fail("form size does not match the basis");
  return fx;
}

// ---------------------------------------------------------------------------
// D4 subspace fixture

struct SubspaceFixture {
  Algebra algebra;
  std::optional<Window> window;
  int tail = 1;
  std::optional<int> loops_upto;
  bool epsilon_all = false;
  struct Element {
    std::vector<std::pair<int, GElement>> loop;
    GElement a0;
    GElement a1;
  };
  std::vector<Element> elements;

  /// The subspace in the D4 model at `w` (the fixture's own window wins).
  SubspaceBasis build(const Window& fallback) const {
    const AmbientPtr amb = make_ambient(algebra, DoubleKind::d4, window.value_or(fallback));
    std::vector<QVector> vs;
    if (loops_upto) vs = loop_tail(*amb, *loops_upto);
    if (epsilon_all)
      for (std::size_t a = 0; a < algebra->dim(); ++a)
        vs.push_back(amb->coords(D4Element{GPoly(), algebra->zero(), algebra->basis(a)}));
    for (const auto& e : elements) {
      GPoly loop;
      for (const auto& [k, x] : e.loop) loop.add(k, x);
      vs.push_back(amb->coords(D4Element{loop, e.a0, e.a1}));
    }
    return SubspaceBasis::spanned_by(amb, vs);
  }
};

namespace detail {

/// loop := '0' | lterm (('+'|'-') lterm)* ; lterm := [scalar '*'] basis ['*' 'u' ['^' signed-int]]
inline std::vector<std::pair<int, GElement>> parse_loop(TokenStream& ts, const LieTable& g) {
  std::vector<std::pair<int, GElement>> out;
  if (ts.peek().kind == Token::Kind::integer && ts.peek().text == "0" && ts.is_symbol('|', 1)) {
    ts.next();
    return out;
  }
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (ts.accept_symbol('-')) sign = -1;
    else if (!first && !ts.accept_symbol('+')) break;
    else if (first) ts.accept_symbol('+');
    Rational c = 1;
    if (!is_basis_start(ts)) {
      c = parse_scalar(ts);
      ts.expect_symbol('*');
    }
    const std::size_t a = parse_basis(ts, g);
    int k = 0;
    if (ts.accept_symbol('*')) {
      ts.expect_identifier("u");
      k = 1;
      if (ts.accept_symbol('^')) k = static_cast<int>(ts.expect_signed_integer());
    }
    out.emplace_back(k, (sign * c) * g.basis(a));
    first = false;
    if (!ts.is_symbol('+') && !ts.is_symbol('-')) break;
  }
  return out;
}

}  // namespace detail

inline SubspaceFixture parse_subspace_fixture(std::string_view text) {
  TokenStream ts(text);
  SubspaceFixture fx;
  fx.algebra = detail::parse_header(ts);
  const LieTable& g = *fx.algebra;
  while (!ts.at_end()) {
    const Token kw = ts.next();
    if (kw.kind != Token::Kind::identifier) TokenStream::fail_at(kw, "expected a directive");
    if (kw.text == "window") {
      const long lo = ts.expect_signed_integer();
      const long hi = ts.expect_signed_integer();
      try {
        fx.window = Window(static_cast<int>(lo), static_cast<int>(hi));
      } catch (const invalid_input& e) {
        TokenStream::fail_at(kw, e.what());
      }
    } else if (kw.text == "tail") {
      fx.tail = static_cast<int>(ts.expect_signed_integer());
    } else if (kw.text == "loops_upto") {
      fx.loops_upto = static_cast<int>(ts.expect_signed_integer());
    } else if (kw.text == "epsilon") {
      ts.expect_identifier("all");
      fx.epsilon_all = true;
    } else if (kw.text == "element") {
      ts.expect_symbol('[');
      SubspaceFixture::Element e;
      e.loop = detail::parse_loop(ts, g);
      ts.expect_symbol('|');
      e.a0 = detail::parse_g_element(ts, g);
      ts.expect_symbol('|');
      e.a1 = detail::parse_g_element(ts, g);
      ts.expect_symbol(']');
      fx.elements.push_back(std::move(e));
    } else {
      TokenStream::fail_at(kw, "unknown directive '" + kw.text + "'");
    }
    ts.expect_symbol(';');
  }
  return fx;
}

// ---------------------------------------------------------------------------
// Gauge products and loop monomials

/// product := 'unip' '(' root ',' INT ',' scalar ')' ('*' product)*
inline PolyGroupElement parse_gauge(std::string_view text, const Algebra& g) {
  TokenStream ts(text);
  std::optional<PolyGroupElement> p;
  do {
    const Token at = ts.peek();
    ts.expect_identifier("unip");
    ts.expect_symbol('(');
    const std::size_t a = detail::parse_basis(ts, *g);
    const BasisLabel& l = g->label(a);
    if (l.kind != BasisLabel::Kind::root) TokenStream::fail_at(at, "unipotents need a root vector");
    ts.expect_symbol(',');
    const long d = ts.expect_integer();
    ts.expect_symbol(',');
    const Rational t = detail::parse_scalar(ts);
    ts.expect_symbol(')');
    const PolyGroupElement q = PolyGroupElement::unip(g->n(), l.i, l.j, static_cast<int>(d), t);
    p = p ? *p * q : q;
  } while (ts.accept_symbol('*'));
  detail::expect_end(ts);
  return *p;
}

/// "BASIS:u^D" with D ≥ 0.
inline GPoly parse_loop_monomial(std::string_view text, const Algebra& g) {
  TokenStream ts(text);
  const std::size_t a = detail::parse_basis(ts, *g);
  ts.expect_symbol(':');
  ts.expect_identifier("u");
  int d = 1;
  if (ts.accept_symbol('^')) d = static_cast<int>(ts.expect_integer());
  detail::expect_end(ts);
  return GPoly::monomial(g->basis(a), d);
}

}  // namespace qrcybe
