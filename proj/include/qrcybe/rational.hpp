#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qrcybe/error.hpp"

namespace qrcybe {

/// Arbitrary precision rational; every coefficient in the library is one.
using Rational = mpq_class;

/// Prints `p` or `p/q`, never a decimal.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses `p` or `p/q` (optional leading sign).
inline Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw invalid_input("not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace qrcybe
