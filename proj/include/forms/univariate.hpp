#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forms/rational.hpp"

namespace forms {

// Dense univariate polynomial over the rationals; c[i] is the coefficient of
// t^i and the leading coefficient is nonzero (zero polynomial = empty vector).
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UnivariatePoly zero() { return UnivariatePoly(); }
  static UnivariatePoly constant(const Rational& v);
  // c0 + c1 t + c2 t^2 + ...
  static UnivariatePoly from_ints(const std::vector<long>& coeffs);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? Rational(0) : c_[i];
  }
  void set_coeff(int i, const Rational& v);

  Rational evaluate(const Rational& x) const;
  UnivariatePoly derivative() const;

  UnivariatePoly operator+(const UnivariatePoly& o) const;
  UnivariatePoly operator-(const UnivariatePoly& o) const;
  UnivariatePoly operator*(const UnivariatePoly& o) const;
  UnivariatePoly scaled(const Rational& v) const;
  bool operator==(const UnivariatePoly& o) const = default;

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& d) const;
  // Division asserting a zero remainder.
  UnivariatePoly exact_div(const UnivariatePoly& d) const;

  // Scales by a positive rational so coefficients are coprime integers.
  UnivariatePoly primitive() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b);

// Yun square-free decomposition: returns factors a_1, a_2, ... with
// p = lc * prod a_i^i (a_i primitive, pairwise coprime, square-free).
std::vector<UnivariatePoly> squarefree_decomposition(const UnivariatePoly& p);

// Product of the odd-multiplicity square-free factors; carries every sign
// change of p.
UnivariatePoly odd_multiplicity_part(const UnivariatePoly& p);

// Sturm chain of the square-free part; exact distinct-real-root counts.
class SturmChain {
 public:
  explicit SturmChain(const UnivariatePoly& squarefree);
  int sign_changes_at(const Rational& x) const;
  int sign_changes_at_pos_inf() const;
  int sign_changes_at_neg_inf() const;
  // Distinct roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  int count_real_roots() const;

 private:
  std::vector<UnivariatePoly> chain_;
};

int count_distinct_real_roots(const UnivariatePoly& p);
int count_distinct_real_roots_in(const UnivariatePoly& p, const Rational& a, const Rational& b);

// 1 + max |c_i| / |lead|; every real root lies in (-bound, bound).
Rational root_bound(const UnivariatePoly& p);

struct Domain {
  bool whole_line = true;
  Rational lo, hi;
  static Domain whole() { return Domain{}; }
  static Domain interval(const Rational& lo, const Rational& hi);
};

struct NonnegResult {
  bool nonneg = false;
  // On failure, a rational point with a strictly negative value.
  std::optional<Rational> witness;
};

// Exact decision of p >= 0 on the domain; failures ship a verified witness.
NonnegResult univariate_nonneg(const UnivariatePoly& p, const Domain& domain);

struct RootFactorization {
  // p = prod (t - r)^m  *  residual, residual has no rational roots.
  std::map<Rational, int> roots;
  UnivariatePoly residual;
  bool residual_has_no_real_roots = false;
};

RootFactorization rational_roots_with_multiplicity(const UnivariatePoly& p);

// Sparse polynomial in two parameters t, u (restriction of a form to a
// two-parameter pattern); key = (t-power, u-power).
struct BivariatePoly {
  std::map<std::pair<int, int>, Rational> c;

  void add(int i, int j, const Rational& v);
  bool is_zero() const { return c.empty(); }
  Rational evaluate(const Rational& t, const Rational& u) const;
  bool operator==(const BivariatePoly& o) const = default;
};

}  // namespace forms
