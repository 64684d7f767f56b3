#include "forms/refuter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace forms {

namespace {

Rational eval_monomial(const Monomial& m, const std::vector<Rational>& point) {
  Rational v(1);
  for (size_t i = 0; i < point.size(); ++i)
    for (int k = 0; k < m.exps[i]; ++k) v *= point[i];
  return v;
}

std::string point_string(const std::vector<Rational>& pt) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) os << ",";
    os << pt[i].get_str();
  }
  os << ")";
  return os.str();
}

bool is_zero_row(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void enumerate_support(int n, int d, const std::vector<int>& parity, int var, int remaining,
                       std::vector<int>& current, std::vector<Monomial>& out) {
  if (var == n) {
    if (remaining == 0) out.push_back(Monomial(current));
    return;
  }
  for (int e = parity[var]; e <= remaining; e += 2) {
    current[var] = e;
    enumerate_support(n, d, parity, var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

// True when the pattern's slots are exactly one T, one U, and zeros: its
// orbit covers every coordinate pair, so any monomial on <= 2 variables is
// annihilated in every candidate square.
bool is_full_pair_curve(const PatternPoint& p) {
  int t = 0, u = 0, zero = 0;
  for (const auto& s : p.slots) {
    if (std::holds_alternative<ParamT>(s)) ++t;
    else if (std::holds_alternative<ParamU>(s)) ++u;
    else if (std::get<Rational>(s) == 0) ++zero;
  }
  return t == 1 && u == 1 && t + u + zero == p.n;
}

bool script_has_full_pair_curve(const RefutationScript& script) {
  for (const auto& c : script.zero_curves)
    if (is_full_pair_curve(c)) return true;
  return false;
}

std::vector<std::pair<Monomial, Monomial>> factor_pairs(const Monomial& mu) {
  int n = mu.vars();
  int d = mu.degree();
  Monomial square = mu.times(mu);
  std::vector<Monomial> halves;
  std::vector<int> current(n, 0);
  // All degree-d monomials componentwise below mu^2, lex ascending.
  std::vector<int> cap = square.exps;
  std::vector<std::pair<Monomial, Monomial>> pairs;
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n) {
      if (remaining != 0) return;
      Monomial m1(current);
      Monomial m2(square);
      for (int i = 0; i < n; ++i) m2.exps[i] -= m1.exps[i];
      if (m1 <= m2) pairs.emplace_back(m1, m2);
      return;
    }
    for (int e = 0; e <= std::min(cap[var], remaining); ++e) {
      current[var] = e;
      rec(var + 1, remaining - e);
    }
    current[var] = 0;
  };
  rec(0, d);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

int ParityClass::index_of(const Monomial& m) const {
  auto it = std::lower_bound(support.begin(), support.end(), m);
  if (it == support.end() || !(*it == m)) return -1;
  return static_cast<int>(it - support.begin());
}

ParityClass candidate_support(int n, int d, const std::vector<int>& parity) {
  if (static_cast<int>(parity.size()) != n)
    throw std::invalid_argument("parity vector length != variable count");
  int psum = 0;
  for (int b : parity) {
    if (b != 0 && b != 1) throw std::invalid_argument("parity entries must be bits");
    psum += b;
  }
  if (psum % 2 != d % 2) throw std::invalid_argument("parity inconsistent with degree");
  ParityClass cls;
  cls.parity = parity;
  std::vector<int> current(n, 0);
  enumerate_support(n, d, parity, 0, d, current, cls.support);
  std::sort(cls.support.begin(), cls.support.end());
  return cls;
}

Mat ConstraintSystem::matrix() const {
  Mat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(r.entries);
  return m;
}

ConstraintSystem assemble_constraints(const Form& f, const RefutationScript& script,
                                      const ParityClass& cls) {
  ConstraintSystem sys;
  sys.cls = cls;
  const auto& support = cls.support;
  int ncols = static_cast<int>(support.size());

  // (i) evaluation rows from verified zero orbits.
  for (const auto& pattern : script.zero_orbits) {
    if (pattern.n != f.vars()) throw std::invalid_argument("zero orbit dimension mismatch");
    if (!pattern.is_concrete())
      throw std::invalid_argument("zero orbits must be concrete patterns");
    for (const auto& placed : pattern.orbit()) {
      std::vector<Rational> z = placed.point();
      if (f.evaluate(z) != 0)
        throw std::invalid_argument("unverified zero claim at " + point_string(z));
      Vec row(ncols);
      for (int j = 0; j < ncols; ++j) row[j] = eval_monomial(support[j], z);
      if (is_zero_row(row)) continue;
      sys.rows.push_back({std::move(row), "zero-orbit point " + point_string(z)});
    }
  }

  // (ii) coefficient rows from curves where f vanishes identically.
  for (const auto& curve : script.zero_curves) {
    if (curve.n != f.vars()) throw std::invalid_argument("zero curve dimension mismatch");
    if (curve.param_kinds() == 0)
      throw std::invalid_argument("zero curve needs a parameter slot");
    for (const auto& placed : curve.orbit()) {
      if (!restriction_is_zero(restrict_parametric(f, placed)))
        throw std::invalid_argument("unverified zero-curve claim");
      std::map<std::pair<int, int>, Vec> groups;
      for (int j = 0; j < ncols; ++j) {
        MonomialRestriction mr = restrict_monomial(support[j], placed);
        if (mr.coeff == 0) continue;
        auto key = std::make_pair(mr.t_pow, mr.u_pow);
        auto [it, inserted] = groups.emplace(key, Vec(ncols));
        it->second[j] = mr.coeff;
        if (!inserted) it->second[j] = mr.coeff;
      }
      for (auto& [key, row] : groups) {
        std::ostringstream tag;
        tag << "zero-curve coefficient t^" << key.first << " u^" << key.second;
        sys.rows.push_back({std::move(row), tag.str()});
      }
    }
  }

  // (iii) annihilator rows from curves with a known square-decomposable
  // value: a candidate square restricts to a polynomial of degree at most
  // deg(g)/2 that vanishes to order ceil(mult/2) at each real root of g.
  for (const auto& shaped : script.shaped_curves) {
    if (shaped.pattern.n != f.vars())
      throw std::invalid_argument("shaped curve dimension mismatch");
    if (shaped.pattern.param_kinds() != 1)
      throw std::invalid_argument("shaped curve needs exactly one parameter");
    if (shaped.expected.is_zero())
      throw std::invalid_argument("shaped curve with zero value belongs in zero_curves");
    RootFactorization fac = rational_roots_with_multiplicity(shaped.expected);
    if (!fac.residual_has_no_real_roots) {
      sys.warnings.push_back(
          "shape rule skipped: restriction has irrational real roots: " +
          shaped.expected.to_string());
      continue;
    }
    UnivariatePoly w = UnivariatePoly::constant(rat(1));
    for (const auto& [root, mult] : fac.roots) {
      UnivariatePoly lin(std::vector<Rational>{-root, rat(1)});
      for (int k = 0; k < (mult + 1) / 2; ++k) w = w * lin;
    }
    int half_deg = shaped.expected.degree() / 2;
    for (const auto& placed : shaped.pattern.orbit()) {
      Restriction r = restrict_parametric(f, placed);
      const UnivariatePoly* uni = std::get_if<UnivariatePoly>(&r);
      if (!uni || !(*uni == shaped.expected))
        throw std::invalid_argument("unverified shaped-curve claim");
      std::vector<MonomialRestriction> mono(ncols);
      int max_pow = 0;
      for (int j = 0; j < ncols; ++j) {
        mono[j] = restrict_monomial(support[j], placed);
        if (mono[j].coeff != 0) max_pow = std::max(max_pow, mono[j].t_pow + mono[j].u_pow);
      }
      // Degree-cap rows: coefficient functionals above deg(g)/2.
      for (int p = half_deg + 1; p <= max_pow; ++p) {
        Vec row(ncols);
        for (int j = 0; j < ncols; ++j)
          if (mono[j].coeff != 0 && mono[j].t_pow + mono[j].u_pow == p) row[j] = mono[j].coeff;
        if (is_zero_row(row)) continue;
        std::ostringstream tag;
        tag << "shape degree cap t^" << p;
        sys.rows.push_back({std::move(row), tag.str()});
      }
      // Remainder rows: the restriction must be divisible by w.
      if (w.degree() > 0) {
        std::vector<UnivariatePoly> rem(max_pow + 1);
        UnivariatePoly t_power = UnivariatePoly::constant(rat(1));
        UnivariatePoly t_lin = UnivariatePoly::from_ints({0, 1});
        for (int p = 0; p <= max_pow; ++p) {
          rem[p] = t_power.divmod(w).second;
          t_power = t_power * t_lin;
        }
        for (int idx = 0; idx < w.degree(); ++idx) {
          Vec row(ncols);
          for (int j = 0; j < ncols; ++j) {
            if (mono[j].coeff == 0) continue;
            Rational c = rem[mono[j].t_pow + mono[j].u_pow].coeff(idx);
            if (c != 0) row[j] = mono[j].coeff * c;
          }
          if (is_zero_row(row)) continue;
          std::ostringstream tag;
          tag << "shape root-order remainder t^" << idx;
          sys.rows.push_back({std::move(row), tag.str()});
        }
      }
    }
  }
  return sys;
}

namespace {

std::vector<FactorPairAudit> audit_pairs(const Monomial& mu, bool has_pair_curve,
                                         std::vector<std::pair<Monomial, Monomial>>* unresolved) {
  std::vector<FactorPairAudit> audit;
  for (const auto& [m1, m2] : factor_pairs(mu)) {
    FactorPairAudit entry{m1, m2, ""};
    if (m1 == mu && m2 == mu) {
      entry.status = "target";
    } else if (has_pair_curve && (m1.support_size() <= 2 || m2.support_size() <= 2)) {
      entry.status =
          "eliminated: factor supported on at most two variables (pair zero curves)";
    } else {
      entry.status = "unresolved";
      if (unresolved) unresolved->emplace_back(m1, m2);
    }
    audit.push_back(std::move(entry));
  }
  return audit;
}

}  // namespace

RefuteResult refute(const Form& f, const RefutationScript& script) {
  Form g = script.restrict_zero_count > 0 ? f.drop_last_vars(script.restrict_zero_count) : f;
  if (g.degree() % 2 != 0) throw std::invalid_argument("refute requires even degree");
  if (!g.is_even()) throw std::invalid_argument("refute requires an even form");
  const Monomial& mu = script.target;
  if (mu.vars() != g.vars()) throw std::invalid_argument("target monomial dimension mismatch");
  if (mu.degree() * 2 != g.degree())
    throw std::invalid_argument("target monomial must have half the form degree");

  Rational diag = g.coefficient(mu.times(mu));
  if (sgn(diag) <= 0) {
    Inconclusive inc;
    inc.reason = "coefficient of the squared target monomial is not positive";
    return inc;
  }

  ParityClass cls = candidate_support(g.vars(), mu.degree(), mu.parity());
  int mu_idx = cls.index_of(mu);
  ConstraintSystem sys = assemble_constraints(g, script, cls);
  Mat rows = sys.matrix();
  std::vector<Vec> kernel = kernel_basis(rows, static_cast<int>(cls.support.size()));

  for (const auto& v : kernel) {
    if (v[mu_idx] != 0) {
      Inconclusive inc;
      inc.reason = "constraints do not force the target coefficient to zero";
      inc.kernel_dim = static_cast<int>(kernel.size());
      inc.surviving_kernel_vector = v;
      return inc;
    }
  }

  bool has_pair_curve = script_has_full_pair_curve(script);
  std::vector<std::pair<Monomial, Monomial>> unresolved;
  std::vector<FactorPairAudit> audit = audit_pairs(mu, has_pair_curve, &unresolved);
  if (!unresolved.empty()) {
    Inconclusive inc;
    inc.reason = "cross factor pairs of the squared target are not all eliminated";
    inc.kernel_dim = static_cast<int>(kernel.size());
    inc.unresolved_pairs = std::move(unresolved);
    return inc;
  }

  Vec e_mu(cls.support.size(), Rational(0));
  e_mu[mu_idx] = rat(1);
  std::optional<Vec> proof = row_space_representation(rows, e_mu);
  if (!proof)
    throw std::logic_error("target functional vanished on kernel but is not in row space");

  RefutationCertificate cert;
  cert.n = g.vars();
  cert.degree = g.degree();
  cert.script = script;
  cert.cls = cls;
  cert.diagonal_coefficient = diag;
  cert.kernel_basis = std::move(kernel);
  cert.forced_zero_proof = std::move(*proof);
  cert.factor_pair_audit = std::move(audit);
  return cert;
}

bool verify_certificate(const Form& f, const RefutationCertificate& cert) {
  try {
    const RefutationScript& script = cert.script;
    Form g = script.restrict_zero_count > 0 ? f.drop_last_vars(script.restrict_zero_count) : f;
    if (g.vars() != cert.n || g.degree() != cert.degree) return false;
    if (g.degree() % 2 != 0 || !g.is_even()) return false;
    const Monomial& mu = script.target;
    if (mu.vars() != g.vars() || mu.degree() * 2 != g.degree()) return false;

    Rational diag = g.coefficient(mu.times(mu));
    if (diag != cert.diagonal_coefficient || sgn(diag) <= 0) return false;

    ParityClass cls = candidate_support(g.vars(), mu.degree(), mu.parity());
    if (!(cls == cert.cls)) return false;
    int mu_idx = cls.index_of(mu);
    if (mu_idx < 0) return false;

    // Re-assembly re-verifies every zero claim (throws on failure).
    ConstraintSystem sys = assemble_constraints(g, script, cls);
    Mat rows = sys.matrix();
    int ncols = static_cast<int>(cls.support.size());

    // Kernel replay: the deterministic elimination reproduces the stored
    // basis exactly, and the target coordinate vanishes on all of it.
    std::vector<Vec> kernel = kernel_basis(rows, ncols);
    if (kernel != cert.kernel_basis) return false;
    for (const auto& v : kernel)
      if (v[mu_idx] != 0) return false;

    // Forced-zero replay: the stated row combination is the mu functional.
    if (cert.forced_zero_proof.size() != rows.size()) return false;
    Vec combo(ncols, Rational(0));
    for (size_t r = 0; r < rows.size(); ++r) {
      if (cert.forced_zero_proof[r] == 0) continue;
      for (int j = 0; j < ncols; ++j) combo[j] += cert.forced_zero_proof[r] * rows[r][j];
    }
    for (int j = 0; j < ncols; ++j) {
      if (j == mu_idx && combo[j] != 1) return false;
      if (j != mu_idx && combo[j] != 0) return false;
    }

    // Audit replay: exhaustive enumeration must match entry for entry.
    bool has_pair_curve = script_has_full_pair_curve(script);
    std::vector<FactorPairAudit> expected = audit_pairs(mu, has_pair_curve, nullptr);
    if (expected.size() != cert.factor_pair_audit.size()) return false;
    for (size_t i = 0; i < expected.size(); ++i) {
      if (!(expected[i].m1 == cert.factor_pair_audit[i].m1) ||
          !(expected[i].m2 == cert.factor_pair_audit[i].m2) ||
          expected[i].status != cert.factor_pair_audit[i].status)
        return false;
      if (expected[i].status == "unresolved") return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

RefutationScript builtin_script(const FormId& id) {
  RefutationScript s;
  auto x1_power = [](int n, int d) {
    std::vector<int> e(n, 0);
    e[0] = d;
    return Monomial(e);
  };
  switch (id.tag) {
    case FormTag::D: {
      if (id.m < 2) throw std::invalid_argument("builtin D script requires m >= 2");
      int n = 2 * id.m;
      s.target = x1_power(n, 4);
      s.zero_orbits.push_back(PatternPoint::vt(n, id.m));
      s.zero_orbits.push_back(PatternPoint::vt(n, id.m + 1));
      return s;
    }
    case FormTag::G: {
      if (id.m < 2) throw std::invalid_argument("builtin G script requires m >= 2");
      // A square decomposition survives setting the last variable to zero,
      // so refute the restriction (= the matching D form).
      s = builtin_script(FormId::make(FormTag::D, id.m));
      s.restrict_zero_count = 1;
      return s;
    }
    case FormTag::T: {
      if (id.n < 3) throw std::invalid_argument("builtin T script requires n >= 3");
      s.target = x1_power(id.n, 4);
      s.zero_orbits.push_back(PatternPoint::vt(id.n, 2));
      s.zero_orbits.push_back(PatternPoint::vt(id.n, 3));
      return s;
    }
    case FormTag::P: {
      if (id.n < 3) throw std::invalid_argument("builtin P script requires n >= 3");
      s.target = x1_power(id.n, 5);
      s.zero_orbits.push_back(PatternPoint::vt(id.n, 2));
      s.zero_orbits.push_back(PatternPoint::vt(id.n, 3));
      s.zero_orbits.push_back(PatternPoint::vt(id.n, id.n));
      return s;
    }
    case FormTag::Q: {
      if (id.n < 3) throw std::invalid_argument("builtin Q script requires n >= 3");
      s.target = x1_power(id.n, 6);
      for (int t = 2; t <= std::min(4, id.n); ++t)
        s.zero_orbits.push_back(PatternPoint::vt(id.n, t));
      return s;
    }
    case FormTag::Rdodecic: {
      if (id.n < 3) throw std::invalid_argument("builtin R script requires n >= 3");
      std::vector<int> mu(id.n, 0);
      mu[0] = 1;
      mu[1] = 1;
      mu[2] = 4;
      s.target = Monomial(mu);
      std::vector<Slot> curve(id.n, Slot(rat(0)));
      curve[0] = ParamT{};
      curve[1] = ParamU{};
      s.zero_curves.push_back(PatternPoint::from_slots(std::move(curve)));
      std::vector<Slot> shaped(id.n, Slot(rat(0)));
      shaped[0] = ParamT{};
      shaped[1] = Slot(rat(1));
      shaped[2] = Slot(rat(1));
      // t^4 (t^2 - 1)^2
      UnivariatePoly expected = UnivariatePoly::from_ints({0, 0, 0, 0, 1, 0, -2, 0, 1});
      s.shaped_curves.push_back({PatternPoint::from_slots(std::move(shaped)), expected});
      return s;
    }
    case FormTag::Robinson: {
      s.target = x1_power(3, 3);
      s.zero_orbits.push_back(PatternPoint::vt(3, 2));
      s.zero_orbits.push_back(PatternPoint::vt(3, 3));
      return s;
    }
    case FormTag::MSextic: {
      if (!(id.a == 1 && id.b == -5 && id.c == 6))
        throw std::invalid_argument("builtin MSextic script covers coefficients (1,-5,6) only");
      if (id.n < 3) throw std::invalid_argument("builtin MSextic script requires n >= 3");
      s.target = x1_power(id.n, 3);
      s.zero_orbits.push_back(PatternPoint::vt(id.n, 2));
      s.zero_orbits.push_back(PatternPoint::vt(id.n, 3));
      return s;
    }
    default:
      throw std::invalid_argument("no builtin refutation script for " + tag_name(id.tag));
  }
}

}  // namespace forms
