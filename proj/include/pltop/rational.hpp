#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pltop/errors.hpp"

namespace pltop {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator, which is exactly the canonical form the serialization uses.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" in base 10.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  for (char c : s) {
    if (c != '-' && c != '/' && (c < '0' || c > '9'))
      throw input_error("bad rational literal: '" + s + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw input_error("bad rational literal: '" + s + "'");
  if (r.get_den() == 0) throw input_error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// "p/q", with "/q" omitted when q == 1.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace pltop
