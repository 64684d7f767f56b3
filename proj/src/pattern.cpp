#include "forms/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace forms {

PatternPoint PatternPoint::concrete(std::vector<Rational> values) {
  PatternPoint p;
  p.n = static_cast<int>(values.size());
  for (auto& v : values) p.slots.emplace_back(std::move(v));
  if (p.n == 0) throw std::invalid_argument("pattern with no slots");
  return p;
}

PatternPoint PatternPoint::vt(int n, int t) {
  if (t < 0 || t > n) throw std::invalid_argument("v_t needs 0 <= t <= n");
  std::vector<Rational> v(n, rat(0));
  for (int i = 0; i < t; ++i) v[i] = rat(1);
  return concrete(std::move(v));
}

PatternPoint PatternPoint::two_value(int n, int k, const Rational& a, const Rational& b) {
  if (k < 0 || k > n) throw std::invalid_argument("two_value needs 0 <= k <= n");
  std::vector<Rational> v(n, b);
  for (int i = 0; i < k; ++i) v[i] = a;
  return concrete(std::move(v));
}

PatternPoint PatternPoint::from_slots(std::vector<Slot> slots) {
  PatternPoint p;
  p.n = static_cast<int>(slots.size());
  p.slots = std::move(slots);
  if (p.n == 0) throw std::invalid_argument("pattern with no slots");
  return p;
}

bool PatternPoint::uses_t() const {
  for (const auto& s : slots)
    if (std::holds_alternative<ParamT>(s)) return true;
  return false;
}

bool PatternPoint::uses_u() const {
  for (const auto& s : slots)
    if (std::holds_alternative<ParamU>(s)) return true;
  return false;
}

std::vector<Rational> PatternPoint::point() const {
  std::vector<Rational> v;
  v.reserve(slots.size());
  for (const auto& s : slots) {
    const Rational* r = std::get_if<Rational>(&s);
    if (!r) throw std::invalid_argument("pattern is not concrete");
    v.push_back(*r);
  }
  return v;
}

std::vector<Rational> PatternPoint::instantiate(const Rational& t, const Rational& u) const {
  std::vector<Rational> v;
  v.reserve(slots.size());
  for (const auto& s : slots) {
    if (const Rational* r = std::get_if<Rational>(&s)) v.push_back(*r);
    else if (std::holds_alternative<ParamT>(s)) v.push_back(t);
    else v.push_back(u);
  }
  return v;
}

std::vector<PatternPoint> PatternPoint::orbit() const {
  std::vector<Slot> sorted = slots;
  std::sort(sorted.begin(), sorted.end());
  std::vector<PatternPoint> out;
  do {
    out.push_back(from_slots(sorted));
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

MonomialRestriction restrict_monomial(const Monomial& m, const PatternPoint& pattern) {
  if (m.vars() != pattern.n) throw std::invalid_argument("pattern length != variable count");
  MonomialRestriction r{rat(1), 0, 0};
  for (int i = 0; i < pattern.n; ++i) {
    int e = m.exps[i];
    if (e == 0) continue;
    const Slot& s = pattern.slots[i];
    if (const Rational* v = std::get_if<Rational>(&s)) {
      if (*v == 0) {
        r.coeff = 0;
        r.t_pow = r.u_pow = 0;
        return r;
      }
      for (int k = 0; k < e; ++k) r.coeff *= *v;
    } else if (std::holds_alternative<ParamT>(s)) {
      r.t_pow += e;
    } else {
      r.u_pow += e;
    }
  }
  return r;
}

Restriction restrict_parametric(const Form& f, const PatternPoint& pattern) {
  if (pattern.n != f.vars()) throw std::invalid_argument("pattern length != variable count");
  int kinds = pattern.param_kinds();
  if (kinds == 0) throw std::invalid_argument("restriction needs at least one parameter slot");
  if (kinds == 1) {
    UnivariatePoly p;
    for (const auto& [m, c] : f.terms()) {
      MonomialRestriction mr = restrict_monomial(m, pattern);
      if (mr.coeff == 0) continue;
      int pow = mr.t_pow + mr.u_pow;  // only one parameter kind present
      p.set_coeff(pow, p.coeff(pow) + c * mr.coeff);
    }
    return p;
  }
  BivariatePoly p;
  for (const auto& [m, c] : f.terms()) {
    MonomialRestriction mr = restrict_monomial(m, pattern);
    if (mr.coeff == 0) continue;
    p.add(mr.t_pow, mr.u_pow, c * mr.coeff);
  }
  return p;
}

bool restriction_is_zero(const Restriction& r) {
  if (const UnivariatePoly* u = std::get_if<UnivariatePoly>(&r)) return u->is_zero();
  return std::get<BivariatePoly>(r).is_zero();
}

std::vector<std::vector<Rational>> orbit_points(int n, std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("orbit_points multiset size != n");
  std::sort(values.begin(), values.end());
  std::vector<std::vector<Rational>> out;
  do {
    out.push_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace forms
