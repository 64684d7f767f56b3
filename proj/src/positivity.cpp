#include "forms/positivity.hpp"

#include <random>
#include <stdexcept>

#include "forms/univariate.hpp"

namespace forms {

namespace {

constexpr const char* kTwoValueMethod = "two-value reduction for symmetric quartics";

// Verifies the value is negative and packages the witness.
Witness make_witness(const Form& f, std::vector<Rational> point) {
  Witness w;
  w.value = f.evaluate(point);
  w.point = std::move(point);
  if (sgn(w.value) >= 0) throw std::logic_error("witness value not negative");
  return w;
}

// Dehomogenization charts of the two-value restriction, as univariate polys.
struct TwoValueCharts {
  UnivariatePoly at_u1;  // b(t, 1)
  UnivariatePoly at_t1;  // b(1, u)
};

TwoValueCharts charts_for(const Form& f, int k) {
  int n = f.vars();
  std::vector<Slot> slots;
  for (int i = 0; i < n; ++i) slots.emplace_back(i < k ? Slot(ParamT{}) : Slot(ParamU{}));
  Restriction r = restrict_parametric(f, PatternPoint::from_slots(std::move(slots)));
  TwoValueCharts ch;
  if (const UnivariatePoly* uni = std::get_if<UnivariatePoly>(&r)) {
    // k == 0 or k == n: single parameter, both charts coincide.
    ch.at_u1 = *uni;
    ch.at_t1 = *uni;
    return ch;
  }
  const BivariatePoly& b = std::get<BivariatePoly>(r);
  for (const auto& [key, v] : b.c) {
    ch.at_u1.set_coeff(key.first, ch.at_u1.coeff(key.first) + v);
    ch.at_t1.set_coeff(key.second, ch.at_t1.coeff(key.second) + v);
  }
  return ch;
}

}  // namespace

PsdVerdict quartic_symmetric_psd(const Form& f) {
  if (f.degree() != 4) throw std::invalid_argument("quartic criterion requires degree 4");
  if (!f.is_symmetric()) throw std::invalid_argument("quartic criterion requires a symmetric form");
  int n = f.vars();
  PsdVerdict verdict;
  verdict.method = kTwoValueMethod;
  for (int k = 0; k <= n; ++k) {
    TwoValueCharts ch = charts_for(f, k);
    NonnegResult r1 = univariate_nonneg(ch.at_u1, Domain::whole());
    if (!r1.nonneg) {
      std::vector<Rational> pt(n, rat(1));
      for (int i = 0; i < k; ++i) pt[i] = *r1.witness;
      verdict.status = PsdStatus::ProvedNotPsd;
      verdict.witness = make_witness(f, std::move(pt));
      return verdict;
    }
    NonnegResult r2 = univariate_nonneg(ch.at_t1, Domain::whole());
    if (!r2.nonneg) {
      std::vector<Rational> pt(n, *r2.witness);
      for (int i = 0; i < k; ++i) pt[i] = rat(1);
      verdict.status = PsdStatus::ProvedNotPsd;
      verdict.witness = make_witness(f, std::move(pt));
      return verdict;
    }
  }
  if (n >= 4 || n <= 2) {
    verdict.status = PsdStatus::ProvedPsd;
    return verdict;
  }
  // n == 3: the reduction is only a necessary condition; fall back to search.
  if (auto w = search_counterexample(f, 20000)) {
    verdict.status = PsdStatus::ProvedNotPsd;
    verdict.witness = *w;
    verdict.method = "counterexample search";
    return verdict;
  }
  verdict.status = PsdStatus::Unknown;
  verdict.method = "two-value check passed; reduction incomplete for n = 3";
  return verdict;
}

MSexticStatus m_sextic_status(const MSexticCoeffs& coeffs) {
  if (coeffs.n < 1) throw std::invalid_argument("m_sextic_status requires n >= 1");
  MSexticStatus st;
  UnivariatePoly sigma({std::vector<Rational>{coeffs.c, coeffs.b, coeffs.a}});
  st.psd = true;
  for (int t = 1; t <= coeffs.n; ++t)
    if (sgn(sigma.evaluate(rat(t))) < 0) {
      st.psd = false;
      break;
    }
  st.sos = sgn(sigma.evaluate(rat(1))) >= 0;
  if (st.sos && coeffs.n >= 2)
    st.sos = univariate_nonneg(sigma, Domain::interval(rat(2), rat(coeffs.n))).nonneg;
  return st;
}

bool verify_zero_orbits(const Form& f, const std::vector<PatternPoint>& patterns) {
  for (const auto& pattern : patterns) {
    if (pattern.n != f.vars()) throw std::invalid_argument("pattern dimension mismatch");
    for (const auto& placed : pattern.orbit()) {
      if (placed.is_concrete()) {
        if (f.evaluate(placed.point()) != 0) return false;
      } else {
        if (!restriction_is_zero(restrict_parametric(f, placed))) return false;
      }
    }
  }
  return true;
}

PsdVerdict psd_product(const std::vector<PsdVerdict>& verdicts) {
  PsdVerdict out;
  out.method = "product of nonnegative factors";
  for (const auto& v : verdicts)
    if (v.status != PsdStatus::ProvedPsd) {
      out.status = PsdStatus::Unknown;
      out.method = "product with an unresolved factor";
      return out;
    }
  out.status = PsdStatus::ProvedPsd;
  return out;
}

std::optional<Witness> search_counterexample(const Form& f, long budget, unsigned long seed) {
  if (budget <= 0) throw std::invalid_argument("search budget must be positive");
  int n = f.vars();
  long used = 0;
  auto try_point = [&](const std::vector<Rational>& pt) -> std::optional<Witness> {
    ++used;
    Rational v = f.evaluate(pt);
    if (sgn(v) < 0) return Witness{pt, v};
    return std::nullopt;
  };

  // Stage 1: every v_t orbit.
  for (int t = 1; t <= n && used < budget; ++t) {
    std::vector<Rational> multiset(n, rat(0));
    for (int i = 0; i < t; ++i) multiset[i] = rat(1);
    for (const auto& pt : orbit_points(n, multiset)) {
      if (used >= budget) break;
      if (auto w = try_point(pt)) return w;
    }
  }

  // Stage 2: small-integer two-value patterns.
  for (long a = -3; a <= 3 && used < budget; ++a) {
    for (long b = -3; b <= 3 && used < budget; ++b) {
      if (a == b) continue;
      for (int k = 1; k < n && used < budget; ++k) {
        std::vector<Rational> multiset(n, rat(b));
        for (int i = 0; i < k; ++i) multiset[i] = rat(a);
        for (const auto& pt : orbit_points(n, multiset)) {
          if (used >= budget) break;
          if (auto w = try_point(pt)) return w;
        }
      }
    }
  }

  // Stage 3: seeded rational grid.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  while (used < budget) {
    std::vector<Rational> pt(n);
    for (int i = 0; i < n; ++i) pt[i] = rat(num(rng), den(rng));
    if (auto w = try_point(pt)) return w;
  }
  return std::nullopt;
}

bool psd_by_even_support(const Form& f) {
  for (const auto& [m, c] : f.terms())
    if (!m.is_even() || sgn(c) < 0) return false;
  return true;
}

}  // namespace forms
