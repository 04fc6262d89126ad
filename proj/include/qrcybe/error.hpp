#pragma once

#include <stdexcept>
#include <string>

namespace qrcybe {

/// Caller supplied something outside an operation's domain
/// (bad rank, index out of range, zero divisor, ...).
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not conform to the coefficient or document grammar.
class parse_error : public invalid_input {
 public:
  parse_error(const std::string& what, int line, int column)
      : invalid_input(std::to_string(line) + ":" + std::to_string(column) +
                      ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A truncated computation needed exponents outside its window.
class window_overflow : public invalid_input {
 public:
  window_overflow(const std::string& what, int need_lo, int need_hi)
      : invalid_input(what + " (required window [" + std::to_string(need_lo) +
                      ", " + std::to_string(need_hi) + "])"),
        need_lo_(need_lo),
        need_hi_(need_hi) {}

  int required_lo() const noexcept { return need_lo_; }
  int required_hi() const noexcept { return need_hi_; }

 private:
  int need_lo_;
  int need_hi_;
};

/// An identity the engine asserts on its own output did not hold.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A co-bracket [Γ, p(u)⊗1 + 1⊗p(v)] that is not polynomial.
class pole_error : public verification_error {
 public:
  using verification_error::verification_error;
};

}  // namespace qrcybe
