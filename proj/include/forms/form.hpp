#pragma once

#include <map>
#include <vector>

#include "forms/monomial.hpp"
#include "forms/rational.hpp"

namespace forms {

// Sparse homogeneous multivariate form with exact rational coefficients.
// Invariants: every stored monomial has length n and total degree `degree`,
// no zero coefficients are stored, and terms sit in canonical (lex) order.
// The zero form has an empty term map; its nominal degree is kept so that
// arithmetic can check compatibility.
class Form {
 public:
  Form() : n_(0), degree_(0) {}
  Form(int n, int degree);

  static Form zero(int n, int degree) { return Form(n, degree); }
  static Form monomial(int n, const Monomial& m, const Rational& coeff);
  static Form constant(int n, const Rational& c);  // degree-0 form

  int vars() const { return n_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  // Adds c * m, dropping the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form operator-() const;
  Form operator*(const Form& other) const;
  Form scaled(const Rational& c) const;
  Form pow(int k) const;

  bool operator==(const Form& other) const = default;

  Rational evaluate(const std::vector<Rational>& point) const;

  // The unique g with g(x_1^2,...,x_n^2) = *this; requires an even form.
  Form halve_exponents() const;
  // Inverse direction: substitute x_i -> x_i^2, doubling every exponent.
  Form substitute_squares() const;

  // Sets the trailing `count` variables to zero and drops them.
  Form drop_last_vars(int count) const;

  // Applies the variable permutation x_i -> x_{perm[i]}.
  Form permute_vars(const std::vector<int>& perm) const;

  bool is_even() const;
  bool is_symmetric() const;

 private:
  int n_;
  int degree_;
  std::map<Monomial, Rational> terms_;
};

// Sum over the S_n-orbit of the exponent multiset: one term per distinct
// permutation of `exps`, each with coefficient `coeff`.
Form symmetric_orbit_sum(int n, std::vector<int> exps, const Rational& coeff);

}  // namespace forms
