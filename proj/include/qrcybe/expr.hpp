#pragma once

// Text front end for coefficients: a small lexer shared with the document
// parsers, a recursive-descent parser for rational-function expressions and
// the canonical printers that it round-trips with.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qrcybe/ratfun.hpp"

namespace qrcybe {

struct Token {
  enum class Kind { integer, identifier, symbol, tensor, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

/// Splits input into integers, identifiers, one-character symbols and the
/// tensor-product token `(x)`. `#` starts a comment running to end of line.
inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::integer;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      t.kind = Token::Kind::identifier;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (src.substr(i, 3) == "(x)") {
      t.kind = Token::Kind::tensor;
      t.text = "(x)";
      advance(3);
    } else if (std::string_view("+-*/^()[];,|:=").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

/// Cursor over a token vector with the helpers every parser here needs.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}
  explicit TokenStream(std::string_view src) : tokens_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  bool is_symbol(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::symbol && t.text[0] == c;
  }
  bool is_identifier(std::string_view name, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::identifier && t.text == name;
  }
  bool accept_symbol(char c) {
    if (!is_symbol(c)) return false;
    next();
    return true;
  }
  void expect_symbol(char c) {
    if (!accept_symbol(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_identifier(std::string_view name) {
    if (!is_identifier(name)) fail("expected '" + std::string(name) + "'");
    next();
  }
  long expect_integer() {
    const Token& t = peek();
    if (t.kind != Token::Kind::integer) fail("expected an integer");
    next();
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      fail_at(t, "integer out of range");
    }
  }
  /// Signed integer literal.
  long expect_signed_integer() {
    const bool neg = accept_symbol('-');
    const long v = expect_integer();
    return neg ? -v : v;
  }
  /// Rational literal `[-]p[/q]`.
  Rational expect_rational() {
    const bool neg = accept_symbol('-');
    Rational q(expect_integer());
    if (accept_symbol('/')) {
      const long d = expect_integer();
      if (d == 0) fail("zero denominator");
      q /= d;
    }
    return neg ? Rational(-q) : q;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(peek(), what); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& what) {
    const std::string near = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw parse_error(what + " near " + near, t.line, t.column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

namespace detail {

inline bool is_coefficient_variable(std::string_view name) {
  return name == "u" || name == "v" || name == "u1" || name == "u2" || name == "u3";
}

}  // namespace detail

/// expr := ['+'|'-'] term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
/// unary := '-' unary | power ; power := atom ['^' INT] ;
/// atom := INT | VAR | '(' expr ')'.  Variables: u, v, u1, u2, u3.
class CoefficientParser {
 public:
  explicit CoefficientParser(TokenStream& ts) : ts_(ts) {}

  RatFun expression() {
    RatFun acc;
    if (ts_.accept_symbol('-')) {
      acc = -term();
    } else {
      ts_.accept_symbol('+');
      acc = term();
    }
    for (;;) {
      if (ts_.accept_symbol('+')) {
        acc += term();
      } else if (ts_.accept_symbol('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFun term() {
    RatFun acc = unary();
    for (;;) {
      if (ts_.accept_symbol('*')) {
        acc *= unary();
      } else if (ts_.is_symbol('/')) {
        const Token at = ts_.next();
        const RatFun d = unary();
        if (d.is_zero()) TokenStream::fail_at(at, "division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFun unary() {
    if (ts_.accept_symbol('-')) return -unary();
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (ts_.accept_symbol('^')) {
      const long e = ts_.expect_integer();
      if (e > 1000) ts_.fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  RatFun atom() {
    const Token& t = ts_.peek();
    if (t.kind == Token::Kind::integer) {
      return RatFun(Rational(ts_.expect_integer()));
    }
    if (t.kind == Token::Kind::identifier) {
      if (!detail::is_coefficient_variable(t.text))
        ts_.fail("unknown variable '" + t.text + "'");
      const Var x(t.text);
      ts_.next();
      return RatFun::var(x);
    }
    if (ts_.accept_symbol('(')) {
      RatFun r = expression();
      ts_.expect_symbol(')');
      return r;
    }
    ts_.fail("expected a number, variable or '('");
  }

 private:
  TokenStream& ts_;
};

/// Parses a whole string as one coefficient expression.
inline RatFun parse_ratfun(std::string_view text) {
  TokenStream ts(text);
  CoefficientParser p(ts);
  RatFun r = p.expression();
  if (!ts.at_end()) ts.fail("trailing input");
  return r;
}

inline std::string to_string(const Monomial& m) {
  std::string out;
  for (const auto& [x, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += x.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Canonical text: terms in descending grlex order, e.g. `u^2*v - 3/2*u + 1`.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t.mono.is_one()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += to_string(t.mono);
    }
  }
  return out;
}

inline std::string to_string(const RatFun& r) {
  if (r.is_polynomial()) return to_string(r.num() * Rational(1 / r.den().constant_value()));
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second) + ")";
    if (it->first != 0)
      out += "*" + p.variable().name() + "^" + std::to_string(it->first);
  }
  if (p.floor()) out += " + O(" + p.variable().name() + "^" + std::to_string(*p.floor() - 1) + ")";
  return out;
}

}  // namespace qrcybe
