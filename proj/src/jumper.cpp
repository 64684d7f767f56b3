#include "forms/jumper.hpp"

#include <sstream>
#include <stdexcept>

namespace forms {

namespace {

PsdVerdict proved_psd(const std::string& method) {
  PsdVerdict v;
  v.status = PsdStatus::ProvedPsd;
  v.method = method;
  return v;
}

bool msextic_psd(const Rational& a, const Rational& b, const Rational& c, int n) {
  return m_sextic_status({a, b, c, n}).psd;
}

// Exact psd derivation per family; throws if a rule unexpectedly fails.
PsdVerdict derive_psd(const FormId& id, const Form& form) {
  switch (id.tag) {
    case FormTag::MSextic: {
      if (msextic_psd(id.a, id.b, id.c, id.n))
        return proved_psd("power-sum sextic criterion");
      throw std::invalid_argument("sextic criterion rejects these coefficients");
    }
    case FormTag::Robinson: {
      Form doubled = build(FormId::msextic(rat(1), rat(-5), rat(6), 3)).form;
      if (!(doubled == form.scaled(rat(2))))
        throw std::logic_error("Robinson form does not match its power-sum sextic avatar");
      if (!msextic_psd(rat(1), rat(-5), rat(6), 3))
        throw std::logic_error("sextic criterion rejects the Robinson avatar");
      return proved_psd("power-sum sextic criterion via the doubled avatar");
    }
    case FormTag::T: {
      if (!msextic_psd(rat(1), rat(-5), rat(6), id.n))
        throw std::logic_error("sextic criterion rejects the T factor");
      return proved_psd("product: sum of squares times criterion sextic");
    }
    case FormTag::P: {
      Form first = power_sum(id.n, 4).scaled(rat(id.n)) - power_sum(id.n, 2).pow(2);
      Form squares = Form::zero(id.n, 4);
      for (int i = 0; i < id.n; ++i)
        for (int j = i + 1; j < id.n; ++j) {
          std::vector<int> ei(id.n, 0), ej(id.n, 0);
          ei[i] = 2;
          ej[j] = 2;
          Form diff = Form::monomial(id.n, Monomial(ei), rat(1)) +
                      Form::monomial(id.n, Monomial(ej), rat(-1));
          squares = squares + diff * diff;
        }
      if (!(first == squares))
        throw std::logic_error("square-sum identity for n*M4 - M2^2 failed");
      if (!msextic_psd(rat(1), rat(-5), rat(6), id.n))
        throw std::logic_error("sextic criterion rejects the P factor");
      return proved_psd("product: square-sum identity times criterion sextic");
    }
    case FormTag::Q: {
      if (!msextic_psd(rat(1), rat(-5), rat(6), id.n) ||
          !msextic_psd(rat(1), rat(-7), rat(12), id.n))
        throw std::logic_error("sextic criterion rejects a Q factor");
      return proved_psd("product of criterion sextics");
    }
    case FormTag::Rdodecic: {
      if (!msextic_psd(rat(1), rat(-3), rat(2), id.n) ||
          !msextic_psd(rat(1), rat(-5), rat(6), id.n))
        throw std::logic_error("sextic criterion rejects a dodecic factor");
      return proved_psd("positive multiple of a product of criterion sextics");
    }
    case FormTag::L:
    case FormTag::C: {
      PsdVerdict v = quartic_symmetric_psd(form);
      if (v.status != PsdStatus::ProvedPsd)
        throw std::logic_error("two-value reduction rejects the quartic");
      return v;
    }
    case FormTag::G:
    case FormTag::D: {
      // Values of L(x^2) are values of L on the nonnegative orthant; setting
      // a variable to zero preserves psd-ness.
      Form quartic = build(FormId::make(FormTag::L, id.m)).form;
      PsdVerdict v = quartic_symmetric_psd(quartic);
      if (v.status != PsdStatus::ProvedPsd)
        throw std::logic_error("two-value reduction rejects the quartic avatar");
      Form expected = quartic.substitute_squares();
      if (id.tag == FormTag::D) expected = expected.drop_last_vars(1);
      if (!(expected == form)) throw std::logic_error("avatar reconstruction mismatch");
      return proved_psd("two-value reduction on the quartic avatar");
    }
    case FormTag::M: {
      if (id.r % 2 == 0 && psd_by_even_support(form))
        return proved_psd("sum of even powers");
      throw std::invalid_argument("odd power sums are indefinite");
    }
    default:
      throw std::invalid_argument("no psd derivation rule for " + tag_name(id.tag));
  }
}

}  // namespace

std::pair<int, int> decompose_r(int r) {
  if (r < 2) throw std::invalid_argument("jump exponent r must be at least 2");
  int b = r % 2;
  int a = (r - 3 * b) / 2;
  return {a, b};
}

namespace {

void require_jumpable(const ProvenancedForm& seed) {
  if (seed.sos.kind != SosStatus::Kind::ProvedNotSos)
    throw std::invalid_argument("jump seed lacks a proved-not-sos provenance");
  if (seed.psd.status != PsdStatus::ProvedPsd)
    throw std::invalid_argument("jump seed lacks a proved-psd provenance");
  if (!seed.form.is_even() || !seed.form.is_symmetric())
    throw std::invalid_argument("jump seed must be even symmetric");
}

}  // namespace

ProvenancedForm jump_pq(const ProvenancedForm& seed, int r) {
  require_jumpable(seed);
  int n = seed.form.vars();
  if (n < 3) throw std::invalid_argument("pq jump requires at least 3 variables");
  auto [a, b] = decompose_r(r);
  Form multiplier = Form::constant(n, rat(1));
  if (a > 0) multiplier = multiplier * build(FormId::make(FormTag::pn, n)).form.pow(2 * a);
  if (b > 0) multiplier = multiplier * build(FormId::make(FormTag::qn, n)).form.pow(2 * b);

  ProvenancedForm out;
  out.form = seed.form * multiplier;
  out.psd = proved_psd("psd seed times even powers of real forms");
  out.sos.kind = SosStatus::Kind::ProvedNotSos;
  out.sos.justification =
      "squares of irreducible indefinite multipliers preserve the psd-not-sos gap";
  out.lineage = seed.lineage;
  std::ostringstream step;
  step << "pq jump r=" << r << " (a=" << a << ", b=" << b << "), degree +" << 4 * r;
  out.lineage.push_back(step.str());
  return out;
}

ProvenancedForm jump_allvars(const ProvenancedForm& seed) {
  require_jumpable(seed);
  int n = seed.form.vars();
  std::vector<int> e(n, 2);
  Form multiplier = Form::monomial(n, Monomial(e), rat(1));

  ProvenancedForm out;
  out.form = seed.form * multiplier;
  out.psd = proved_psd("psd seed times the squared product of all variables");
  out.sos.kind = SosStatus::Kind::ProvedNotSos;
  out.sos.justification =
      "squares of irreducible indefinite multipliers preserve the psd-not-sos gap";
  out.lineage = seed.lineage;
  std::ostringstream step;
  step << "all-variable jump, degree +" << 2 * n;
  out.lineage.push_back(step.str());
  return out;
}

bool classify_equal_formula(int n, int two_d) {
  return n <= 2 || two_d <= 4 || (n == 3 && two_d == 8);
}

bool classify_equal_constructive(int n, int two_d) {
  if (n <= 2 || two_d <= 4) return true;
  if (n == 3) {
    for (int base : {6, 10, 14})
      if (two_d >= base && (two_d - base) % 6 == 0) return false;
    return true;
  }
  for (int base : {6, 8, 10, 12})
    if (two_d >= base && (two_d - base) % 8 == 0) return false;
  return true;
}

namespace {

FormId octic_seed(int n) {
  return n % 2 == 0 ? FormId::make(FormTag::D, n / 2) : FormId::make(FormTag::G, (n - 1) / 2);
}

WitnessRecipe strict_witness(int n, int two_d) {
  WitnessRecipe w;
  if (n == 3) {
    if (two_d == 6) {
      w.kind = WitnessRecipe::Kind::DirectForm;
      w.seed = FormId::make(FormTag::Robinson, 3);
      w.citation = "Robinson";
      w.constructible = true;
      return w;
    }
    if (two_d % 6 == 4) {  // 10, 16, 22, ...: no formula in hand for the decic seed
      w.kind = WitnessRecipe::Kind::Literature;
      w.citation = "ternary decics (Harris)";
      w.allvars_count = (two_d - 10) / 6;
      w.constructible = false;
      return w;
    }
    w.kind = WitnessRecipe::Kind::JumpChain;
    w.seed = FormId::make(FormTag::Robinson, 3);
    w.citation = "Robinson seed, jumped";
    w.constructible = true;
    if (two_d % 6 == 0) {
      w.allvars_count = (two_d - 6) / 6;
    } else {  // two_d % 6 == 2: 14, 20, ...
      w.pq_r = 2;
      w.allvars_count = (two_d - 14) / 6;
    }
    return w;
  }
  int base = 0;
  for (int candidate : {6, 8, 10, 12})
    if (candidate % 8 == two_d % 8) base = candidate;
  FormId seed;
  std::string family;
  switch (base) {
    case 6:
      seed = FormId::msextic(rat(1), rat(-5), rat(6), n);
      family = "power-sum sextics (Choi-Lam-Reznick)";
      break;
    case 8:
      seed = octic_seed(n);
      family = "difference-quartic avatars";
      break;
    case 10:
      seed = FormId::make(FormTag::P, n);
      family = "even symmetric decics";
      break;
    default:
      seed = n >= 5 ? FormId::make(FormTag::Q, n) : FormId::make(FormTag::Rdodecic, n);
      family = "even symmetric dodecics";
      break;
  }
  w.seed = seed;
  w.citation = family;
  w.constructible = true;
  if (two_d == base) {
    w.kind = WitnessRecipe::Kind::DirectForm;
  } else {
    w.kind = WitnessRecipe::Kind::JumpChain;
    w.pq_r = (two_d - base) / 4;
  }
  return w;
}

}  // namespace

ClassificationEntry classify(int n, int two_d) {
  if (n < 1) throw std::invalid_argument("classify requires n >= 1");
  if (two_d < 2 || two_d % 2 != 0)
    throw std::invalid_argument("classify requires a positive even degree");
  ClassificationEntry e;
  e.n = n;
  e.two_d = two_d;
  e.equal = classify_equal_formula(n, two_d);
  if (e.equal) {
    if (n == 1) e.citation = "univariate even forms";
    else if (n == 2) e.citation = "binary forms (Hilbert)";
    else if (two_d == 2) e.citation = "quadratic forms (Hilbert)";
    else if (two_d == 4 && n == 3) e.citation = "ternary quartics (Hilbert)";
    else if (two_d == 4) e.citation = "symmetric quartics (Choi-Lam-Reznick; Goel)";
    else e.citation = "ternary octics (Harris)";
    return e;
  }
  e.witness = strict_witness(n, two_d);
  e.citation = e.witness->citation;
  return e;
}

Chart chart(int n_max, int deg_max) {
  if (n_max < 2 || deg_max < 2) throw std::invalid_argument("chart bounds must be at least 2");
  Chart c;
  c.n_max = n_max;
  c.deg_max = deg_max;
  for (int two_d = 2; two_d <= deg_max; two_d += 2)
    for (int n = 2; n <= n_max; ++n) c.cells.push_back(classify(n, two_d));
  return c;
}

std::string WitnessRecipe::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Literature:
      os << "literature: " << citation;
      if (allvars_count > 0) os << ", then " << allvars_count << " all-variable jump(s)";
      return os.str();
    case Kind::DirectForm:
      os << seed->describe() << " (direct certificate)";
      return os.str();
    case Kind::JumpChain:
      os << seed->describe();
      if (pq_r > 0) os << ", pq jump r=" << pq_r;
      if (allvars_count > 0) os << ", " << allvars_count << " all-variable jump(s)";
      return os.str();
  }
  return "";
}

ProvenancedForm provenanced_seed(const FormId& id) {
  GlossaryEntry entry = build(id);
  ProvenancedForm out;
  out.form = entry.form;
  out.psd = derive_psd(id, entry.form);
  RefuteResult r = refute(entry.form, builtin_script(id));
  const RefutationCertificate* cert = std::get_if<RefutationCertificate>(&r);
  if (!cert)
    throw std::logic_error("builtin refutation unexpectedly inconclusive for " + id.describe());
  out.sos.kind = SosStatus::Kind::ProvedNotSos;
  out.sos.certificate = std::make_shared<RefutationCertificate>(*cert);
  out.sos.justification = cert->script.restrict_zero_count > 0
                              ? "refutation certificate for the zero-restriction"
                              : "refutation certificate";
  out.lineage.push_back("seed " + id.describe());
  return out;
}

ProvenancedForm realize_witness(const WitnessRecipe& recipe) {
  if (recipe.kind == WitnessRecipe::Kind::Literature)
    throw std::invalid_argument("literature witness has no in-library construction: " +
                                recipe.citation);
  ProvenancedForm f = provenanced_seed(*recipe.seed);
  if (recipe.pq_r > 0) f = jump_pq(f, recipe.pq_r);
  for (int i = 0; i < recipe.allvars_count; ++i) f = jump_allvars(f);
  return f;
}

}  // namespace forms
