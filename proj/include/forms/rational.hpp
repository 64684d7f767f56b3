#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace forms {

// Exact arbitrary-precision rational, canonical form maintained by GMP
// (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from_strings(const std::string& num, const std::string& den) {
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace forms
