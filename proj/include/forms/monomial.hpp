#pragma once

#include <compare>
#include <numeric>
#include <vector>

namespace forms {

// Exponent vector of a power product. All monomials of a Form share the same
// length (the variable count) and total degree. The canonical term order is
// lexicographic on the exponent vector; within one homogeneous form this
// coincides with graded-lex.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

  int vars() const { return static_cast<int>(exps.size()); }

  bool is_even() const {
    for (int e : exps)
      if (e % 2 != 0) return false;
    return true;
  }

  std::vector<int> parity() const {
    std::vector<int> p(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) p[i] = exps[i] & 1;
    return p;
  }

  // Number of variables appearing with positive exponent.
  int support_size() const {
    int s = 0;
    for (int e : exps)
      if (e > 0) ++s;
    return s;
  }

  Monomial times(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] += other.exps[i];
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
};

}  // namespace forms
