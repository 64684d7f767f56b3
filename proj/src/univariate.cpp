#include "forms/univariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace forms {

void UnivariatePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(const Rational& v) {
  UnivariatePoly p;
  if (v != 0) p.c_.push_back(v);
  return p;
}

UnivariatePoly UnivariatePoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(rat(v));
  return UnivariatePoly(std::move(c));
}

void UnivariatePoly::set_coeff(int i, const Rational& v) {
  if (i < 0) throw std::invalid_argument("negative power");
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, Rational(0));
  c_[i] = v;
  trim();
}

Rational UnivariatePoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (c_.size() <= 1) return zero();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * rat(static_cast<long>(i));
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
  return *this + o.scaled(rat(-1));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& v) const {
  if (v == 0) return zero();
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= v;
  return UnivariatePoly(std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  UnivariatePoly r = *this;
  std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational factor = r.leading() / d.leading();
    q[shift] = factor;
    // r -= factor * t^shift * d
    for (int i = 0; i <= d.degree(); ++i)
      r.c_[i + shift] -= factor * d.c_[i];
    r.trim();
  }
  return {UnivariatePoly(std::move(q)), r};
}

UnivariatePoly UnivariatePoly::exact_div(const UnivariatePoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::invalid_argument("exact_div with nonzero remainder");
  return q;
}

UnivariatePoly UnivariatePoly::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm(1), num_gcd(0);
  for (const auto& x : c_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);  // positive since num_gcd > 0
  scale.canonicalize();
  return scaled(scale);
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
    else if (sgn(c_[i]) < 0) os << "-";
    Rational a = abs(c_[i]);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b) {
  a = a.primitive();
  b = b.primitive();
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = b;
    b = r.primitive();
  }
  if (!a.is_zero() && sgn(a.leading()) < 0) a = a.scaled(rat(-1));
  return a;
}

std::vector<UnivariatePoly> squarefree_decomposition(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<UnivariatePoly> out;
  if (p.degree() == 0) return out;
  UnivariatePoly f = p.primitive();
  UnivariatePoly g = poly_gcd(f, f.derivative());
  UnivariatePoly b = f.exact_div(g);
  UnivariatePoly c = f.derivative().exact_div(g);
  UnivariatePoly d = c - b.derivative();
  while (b.degree() > 0) {
    UnivariatePoly a = poly_gcd(b, d);
    out.push_back(a.primitive());
    UnivariatePoly b2 = b.exact_div(a);
    c = d.exact_div(a);
    b = b2;
    d = c - b.derivative();
  }
  return out;
}

UnivariatePoly odd_multiplicity_part(const UnivariatePoly& p) {
  auto factors = squarefree_decomposition(p);
  UnivariatePoly s = UnivariatePoly::constant(rat(1));
  for (size_t i = 0; i < factors.size(); ++i)
    if ((i + 1) % 2 == 1) s = s * factors[i];
  return s.primitive();
}

namespace {

int sign_at(const UnivariatePoly& p, const Rational& x) { return sgn(p.evaluate(x)); }

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmChain::SturmChain(const UnivariatePoly& squarefree) {
  UnivariatePoly a = squarefree.primitive();
  if (a.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  chain_.push_back(a);
  UnivariatePoly b = a.derivative().primitive();
  while (!b.is_zero()) {
    chain_.push_back(b);
    auto [q, r] = a.divmod(b);
    a = b;
    b = r.scaled(rat(-1)).primitive();
  }
}

int SturmChain::sign_changes_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(sign_at(p, x));
  return count_changes(signs);
}

int SturmChain::sign_changes_at_pos_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_) signs.push_back(sgn(p.leading()));
  return count_changes(signs);
}

int SturmChain::sign_changes_at_neg_inf() const {
  std::vector<int> signs;
  for (const auto& p : chain_)
    signs.push_back(p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading()));
  return count_changes(signs);
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  if (a >= b) return 0;
  return sign_changes_at(a) - sign_changes_at(b);
}

int SturmChain::count_real_roots() const {
  return sign_changes_at_neg_inf() - sign_changes_at_pos_inf();
}

int count_distinct_real_roots(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (p.degree() == 0) return 0;
  UnivariatePoly rad = p.exact_div(poly_gcd(p, p.derivative())).primitive();
  return SturmChain(rad).count_real_roots();
}

int count_distinct_real_roots_in(const UnivariatePoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (p.degree() == 0) return 0;
  UnivariatePoly rad = p.exact_div(poly_gcd(p, p.derivative())).primitive();
  return SturmChain(rad).count_roots(a, b);
}

Rational root_bound(const UnivariatePoly& p) {
  if (p.is_zero() || p.degree() == 0) return rat(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i))));
  return rat(1) + m / abs(p.leading());
}

Domain Domain::interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  Domain d;
  d.whole_line = false;
  d.lo = lo;
  d.hi = hi;
  return d;
}

namespace {

// Scans dyadic rationals in [lo, hi] with successively finer steps until a
// strictly negative value appears. Callers guarantee one exists, so the scan
// terminates: the negative set is open and nonempty in (lo, hi).
Rational dyadic_negative_point(const UnivariatePoly& p, const Rational& lo, const Rational& hi) {
  for (int level = 1;; ++level) {
    Integer steps = 1;
    mpz_mul_2exp(steps.get_mpz_t(), steps.get_mpz_t(), level);
    Rational step = (hi - lo) / Rational(steps);
    for (Integer j = 0; j <= steps; ++j) {
      Rational x = lo + step * Rational(j);
      if (sgn(p.evaluate(x)) < 0) return x;
    }
  }
}

}  // namespace

NonnegResult univariate_nonneg(const UnivariatePoly& p, const Domain& domain) {
  NonnegResult res;
  if (p.is_zero()) {
    res.nonneg = true;
    return res;
  }
  if (p.degree() == 0) {
    res.nonneg = sgn(p.coeff(0)) >= 0;
    if (!res.nonneg) res.witness = rat(0);
    return res;
  }

  if (domain.whole_line) {
    // p >= 0 on R  iff  deg even, positive leading coefficient, and the
    // odd-multiplicity part has no real roots.
    if (p.degree() % 2 != 0 || sgn(p.leading()) < 0) {
      Rational b = root_bound(p) + 1;
      Rational at_plus = p.evaluate(b);
      res.nonneg = false;
      res.witness = sgn(at_plus) < 0 ? b : -b;
      return res;
    }
    UnivariatePoly s = odd_multiplicity_part(p);
    if (s.degree() <= 0 || SturmChain(s).count_real_roots() == 0) {
      res.nonneg = true;
      return res;
    }
    Rational b = root_bound(p) + 1;
    res.nonneg = false;
    res.witness = dyadic_negative_point(p, -b, b);
    return res;
  }

  const Rational &a = domain.lo, &b = domain.hi;
  if (sgn(p.evaluate(a)) < 0) {
    res.nonneg = false;
    res.witness = a;
    return res;
  }
  if (sgn(p.evaluate(b)) < 0) {
    res.nonneg = false;
    res.witness = b;
    return res;
  }
  if (a == b) {
    res.nonneg = true;
    return res;
  }
  // Sign can only become negative inside if the odd-multiplicity part has a
  // root in (a,b), or the sign is constant negative between even-order roots.
  UnivariatePoly s = odd_multiplicity_part(p);
  bool s_root_inside = false;
  if (s.degree() > 0) {
    SturmChain chain(s);
    int in_half_open = chain.count_roots(a, b);
    if (s.evaluate(b) == 0) in_half_open -= 1;
    s_root_inside = in_half_open > 0;
  }
  if (s_root_inside) {
    res.nonneg = false;
    res.witness = dyadic_negative_point(p, a, b);
    return res;
  }
  // Constant interior sign: sample a non-root point.
  for (long den = 2;; ++den) {
    Rational x = a + (b - a) / rat(den);
    int sg = sign_at(p, x);
    if (sg > 0) {
      res.nonneg = true;
      return res;
    }
    if (sg < 0) {
      res.nonneg = false;
      res.witness = x;
      return res;
    }
    if (den > p.degree() + 2) {  // more zeros than the degree allows
      res.nonneg = true;
      return res;
    }
  }
}

namespace {

// Divisors of |v| by trial division (inputs here are small restriction
// coefficients).
std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> low, high;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      low.push_back(d);
      if (d * d != v) high.push_back(v / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace

RootFactorization rational_roots_with_multiplicity(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of zero polynomial");
  RootFactorization out;
  out.residual = p;

  // Roots at zero come straight off the trailing coefficient index.
  int t_mult = 0;
  while (!out.residual.is_zero() && out.residual.coeff(0) == 0) {
    out.residual = out.residual.exact_div(UnivariatePoly::from_ints({0, 1}));
    ++t_mult;
  }
  if (t_mult > 0) out.roots[rat(0)] = t_mult;

  if (out.residual.degree() > 0) {
    UnivariatePoly pi = out.residual.primitive();
    std::vector<Integer> nums = divisors(pi.coeff(0).get_num());
    std::vector<Integer> dens = divisors(pi.leading().get_num());
    for (const Integer& u : nums) {
      for (const Integer& v : dens) {
        for (int s : {1, -1}) {
          Rational r(u * s, v);
          r.canonicalize();
          if (out.roots.count(r)) continue;
          int mult = 0;
          UnivariatePoly lin(std::vector<Rational>{-r, rat(1)});
          while (out.residual.evaluate(r) == 0) {
            out.residual = out.residual.exact_div(lin);
            ++mult;
          }
          if (mult > 0) out.roots[r] = mult;
        }
      }
    }
  }
  out.residual_has_no_real_roots =
      out.residual.degree() <= 0 || count_distinct_real_roots(out.residual) == 0;
  return out;
}

void BivariatePoly::add(int i, int j, const Rational& v) {
  if (v == 0) return;
  auto key = std::make_pair(i, j);
  auto [it, inserted] = c.emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

Rational BivariatePoly::evaluate(const Rational& t, const Rational& u) const {
  Rational acc(0);
  for (const auto& [key, v] : c) {
    Rational term = v;
    for (int k = 0; k < key.first; ++k) term *= t;
    for (int k = 0; k < key.second; ++k) term *= u;
    acc += term;
  }
  return acc;
}

}  // namespace forms
