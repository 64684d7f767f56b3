#include "forms/form.hpp"

#include <algorithm>
#include <stdexcept>

namespace forms {

Form::Form(int n, int degree) : n_(n), degree_(degree) {
  if (n < 0 || degree < 0) throw std::invalid_argument("negative form dimensions");
}

Form Form::monomial(int n, const Monomial& m, const Rational& coeff) {
  if (m.vars() != n) throw std::invalid_argument("monomial length != variable count");
  for (int e : m.exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  Form f(n, m.degree());
  f.add_term(m, coeff);
  return f;
}

Form Form::constant(int n, const Rational& c) {
  Form f(n, 0);
  f.add_term(Monomial(std::vector<int>(n, 0)), c);
  return f;
}

Rational Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Form::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.vars() != n_) throw std::invalid_argument("monomial length != variable count");
  if (m.degree() != degree_) throw std::invalid_argument("inhomogeneous term");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Form Form::operator+(const Form& other) const {
  if (is_zero()) {
    Form r = other;
    return r;
  }
  if (other.is_zero()) return *this;
  if (n_ != other.n_ || degree_ != other.degree_)
    throw std::invalid_argument("form addition with mismatched n or degree");
  Form r = *this;
  for (const auto& [m, c] : other.terms_) r.add_term(m, c);
  return r;
}

Form Form::operator-() const { return scaled(rat(-1)); }

Form Form::operator-(const Form& other) const { return *this + (-other); }

Form Form::scaled(const Rational& c) const {
  Form r(n_, degree_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Form Form::operator*(const Form& other) const {
  if (n_ != other.n_) throw std::invalid_argument("form product with mismatched variable count");
  Form r(n_, degree_ + other.degree_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) r.add_term(m1.times(m2), c1 * c2);
  return r;
}

Form Form::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Form r = Form::constant(n_, rat(1));
  Form base = *this;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

Rational Form::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw std::invalid_argument("evaluation point length != variable count");
  // Per-variable power tables up to the degree actually used.
  std::vector<std::vector<Rational>> pows(n_);
  for (int i = 0; i < n_; ++i) pows[i].push_back(rat(1));
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < n_; ++i) {
      int e = m.exps[i];
      if (e == 0) continue;
      auto& p = pows[i];
      while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * point[i]);
      v *= p[e];
    }
    total += v;
  }
  return total;
}

Form Form::halve_exponents() const {
  Form r(n_, degree_ / 2);
  if (degree_ % 2 != 0 && !is_zero())
    throw std::invalid_argument("halve_exponents on odd-degree form");
  for (const auto& [m, c] : terms_) {
    Monomial h = m;
    for (int& e : h.exps) {
      if (e % 2 != 0) throw std::invalid_argument("halve_exponents on a form with odd exponent");
      e /= 2;
    }
    r.terms_.emplace(h, c);
  }
  return r;
}

Form Form::substitute_squares() const {
  Form r(n_, degree_ * 2);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    for (int& e : d.exps) e *= 2;
    r.terms_.emplace(d, c);
  }
  return r;
}

Form Form::drop_last_vars(int count) const {
  if (count < 0 || count > n_) throw std::invalid_argument("bad drop count");
  Form r(n_ - count, degree_);
  for (const auto& [m, c] : terms_) {
    bool survives = true;
    for (int i = n_ - count; i < n_; ++i)
      if (m.exps[i] > 0) {
        survives = false;
        break;
      }
    if (!survives) continue;
    Monomial t(std::vector<int>(m.exps.begin(), m.exps.begin() + (n_ - count)));
    r.add_term(t, c);
  }
  return r;
}

Form Form::permute_vars(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("bad permutation length");
  Form r(n_, degree_);
  for (const auto& [m, c] : terms_) {
    Monomial t(std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i) t.exps[perm[i]] = m.exps[i];
    r.add_term(t, c);
  }
  return r;
}

bool Form::is_even() const {
  for (const auto& [m, c] : terms_)
    if (!m.is_even()) return false;
  return true;
}

bool Form::is_symmetric() const {
  // Transpositions (0 i) generate S_n.
  for (int i = 1; i < n_; ++i) {
    std::vector<int> perm(n_);
    for (int j = 0; j < n_; ++j) perm[j] = j;
    std::swap(perm[0], perm[i]);
    if (permute_vars(perm) != *this) return false;
  }
  return true;
}

Form symmetric_orbit_sum(int n, std::vector<int> exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("orbit_sum length mismatch");
  std::sort(exps.begin(), exps.end());
  Form r(n, std::accumulate(exps.begin(), exps.end(), 0));
  do {
    r.add_term(Monomial(exps), coeff);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return r;
}

}  // namespace forms
