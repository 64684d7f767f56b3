#include "forms/glossary.hpp"

#include <sstream>
#include <stdexcept>

namespace forms {

std::string tag_name(FormTag tag) {
  switch (tag) {
    case FormTag::M: return "M";
    case FormTag::L: return "L";
    case FormTag::C: return "C";
    case FormTag::G: return "G";
    case FormTag::D: return "D";
    case FormTag::T: return "T";
    case FormTag::P: return "P";
    case FormTag::Q: return "Q";
    case FormTag::Rdodecic: return "Rdodecic";
    case FormTag::Robinson: return "Robinson";
    case FormTag::pn: return "p";
    case FormTag::qn: return "q";
    case FormTag::MSextic: return "MSextic";
  }
  return "?";
}

FormId FormId::power_sum(int n, int r) {
  FormId id;
  id.tag = FormTag::M;
  id.n = n;
  id.r = r;
  return id;
}

FormId FormId::make(FormTag tag, int n_or_m) {
  FormId id;
  id.tag = tag;
  switch (tag) {
    case FormTag::L:
    case FormTag::C:
    case FormTag::G:
    case FormTag::D:
      id.m = n_or_m;
      break;
    default:
      id.n = n_or_m;
      break;
  }
  return id;
}

FormId FormId::msextic(const Rational& a, const Rational& b, const Rational& c, int n) {
  FormId id;
  id.tag = FormTag::MSextic;
  id.n = n;
  id.a = a;
  id.b = b;
  id.c = c;
  return id;
}

std::string FormId::describe() const {
  std::ostringstream os;
  os << tag_name(tag);
  switch (tag) {
    case FormTag::M: os << r << "(n=" << n << ")"; break;
    case FormTag::L: case FormTag::G: os << 2 * m + 1; break;
    case FormTag::C: case FormTag::D: os << 2 * m; break;
    case FormTag::Robinson: break;
    case FormTag::MSextic:
      os << "(" << a.get_str() << "," << b.get_str() << "," << c.get_str() << ",n=" << n << ")";
      break;
    default: os << n; break;
  }
  return os.str();
}

Form power_sum(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("power_sum needs n >= 1, r >= 1");
  std::vector<int> e(n, 0);
  e[0] = r;
  return symmetric_orbit_sum(n, e, rat(1));
}

namespace {

// a*M2^3 + b*M2*M4 + c*M6.
Form msextic_form(int n, const Rational& a, const Rational& b, const Rational& c) {
  Form m2 = power_sum(n, 2), m4 = power_sum(n, 4), m6 = power_sum(n, 6);
  return m2.pow(3).scaled(a) + (m2 * m4).scaled(b) + m6.scaled(c);
}

// Sum of x_i^2 x_j^2 x_k^2 over i<j<k (zero form when n < 3).
Form elementary3_of_squares(int n) {
  if (n < 3) return Form::zero(n, 6);
  std::vector<int> e(n, 0);
  e[0] = e[1] = e[2] = 2;
  return symmetric_orbit_sum(n, e, rat(1));
}

Form sum_pair_squares(int n) {  // sum_{i<j} x_i^2 x_j^2
  std::vector<int> e(n, 0);
  e[0] = e[1] = 2;
  return symmetric_orbit_sum(n, e, rat(1));
}

Form sum_ordered_x4x2(int n) {  // sum_{i != j} x_i^4 x_j^2
  std::vector<int> e(n, 0);
  e[0] = 4;
  e[1] = 2;
  return symmetric_orbit_sum(n, e, rat(1));
}

Form difference_quartic(int n) {  // m(m+1) sum (x_i-x_j)^4 - (sum (x_i-x_j)^2)^2, n = 2m+1
  int m = (n - 1) / 2;
  Form quartic_sum = Form::zero(n, 4);
  Form quadratic_sum = Form::zero(n, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      Form diff = Form::monomial(n, Monomial(ei), rat(1)) + Form::monomial(n, Monomial(ej), rat(-1));
      Form d2 = diff * diff;
      quadratic_sum = quadratic_sum + d2;
      quartic_sum = quartic_sum + d2 * d2;
    }
  }
  return quartic_sum.scaled(rat(static_cast<long>(m) * (m + 1))) - quadratic_sum * quadratic_sum;
}

Form robinson_form() {
  Form f = power_sum(3, 6);
  f = f - symmetric_orbit_sum(3, {4, 2, 0}, rat(1));
  f = f + symmetric_orbit_sum(3, {2, 2, 2}, rat(3));
  return f;
}

Form p_jump_form(int n) {  // 4 M4 - 17 sum_{i<j} x_i^2 x_j^2
  return power_sum(n, 4).scaled(rat(4)) - sum_pair_squares(n).scaled(rat(17));
}

Form q_jump_form(int n) {  // M6 + 3 sum_{i!=j} x_i^4 x_j^2 - 100 sum_{i<j<k} x_i^2 x_j^2 x_k^2
  return power_sum(n, 6) + sum_ordered_x4x2(n).scaled(rat(3)) -
         elementary3_of_squares(n).scaled(rat(100));
}

PatternPoint two_ones_pattern(int n, int count1, const Rational& other, int count_other) {
  std::vector<Rational> v(n, rat(0));
  for (int i = 0; i < count1; ++i) v[i] = rat(1);
  for (int i = 0; i < count_other; ++i) v[count1 + i] = other;
  return PatternPoint::concrete(std::move(v));
}

PatternPoint tu_curve(int n) {  // (T, U, 0, ..., 0)
  std::vector<Slot> s(n, Slot(rat(0)));
  s[0] = ParamT{};
  s[1] = ParamU{};
  return PatternPoint::from_slots(std::move(s));
}

}  // namespace

GlossaryEntry build(const FormId& id) {
  GlossaryEntry e;
  e.id = id;
  switch (id.tag) {
    case FormTag::M: {
      e.form = power_sum(id.n, id.r);
      e.claimed = {id.r % 2 == 0 ? Claim::Yes : Claim::No,
                   id.r % 2 == 0 ? Claim::Yes : Claim::No, "sum of even powers"};
      break;
    }
    case FormTag::L: {
      if (id.m < 2) throw std::invalid_argument("L requires m >= 2 (at least 5 variables)");
      e.form = difference_quartic(2 * id.m + 1);
      e.claimed = {Claim::Yes, Claim::No, "difference-quartic family"};
      e.zero_patterns.push_back(PatternPoint::vt(2 * id.m + 1, id.m + 1));
      e.zero_patterns.push_back(two_ones_pattern(2 * id.m + 1, id.m + 1, rat(2), id.m));
      break;
    }
    case FormTag::C: {
      if (id.m < 2) throw std::invalid_argument("C requires m >= 2 (at least 4 variables)");
      e.form = difference_quartic(2 * id.m + 1).drop_last_vars(1);
      e.claimed = {Claim::Yes, Claim::No, "difference-quartic family, restricted"};
      e.zero_patterns.push_back(PatternPoint::vt(2 * id.m, id.m));
      e.zero_patterns.push_back(PatternPoint::vt(2 * id.m, id.m + 1));
      break;
    }
    case FormTag::G: {
      if (id.m < 2) throw std::invalid_argument("G requires m >= 2 (at least 5 variables)");
      e.form = difference_quartic(2 * id.m + 1).substitute_squares();
      e.claimed = {Claim::Yes, Claim::No, "even avatar of the difference-quartic family"};
      e.zero_patterns.push_back(PatternPoint::vt(2 * id.m + 1, id.m + 1));
      e.zero_patterns.push_back(two_ones_pattern(2 * id.m + 1, id.m + 1, rat(2), id.m));
      break;
    }
    case FormTag::D: {
      if (id.m < 2) throw std::invalid_argument("D requires m >= 2 (at least 4 variables)");
      e.form = difference_quartic(2 * id.m + 1).substitute_squares().drop_last_vars(1);
      e.claimed = {Claim::Yes, Claim::No, "even symmetric octic family"};
      e.zero_patterns.push_back(PatternPoint::vt(2 * id.m, id.m));
      e.zero_patterns.push_back(PatternPoint::vt(2 * id.m, id.m + 1));
      break;
    }
    case FormTag::T: {
      if (id.n < 3) throw std::invalid_argument("T requires n >= 3");
      e.form = power_sum(id.n, 2) * msextic_form(id.n, rat(1), rat(-5), rat(6));
      e.claimed = {Claim::Yes, id.n >= 4 ? Claim::No : Claim::Yes,
                   id.n >= 4 ? "even symmetric octic family" : "ternary case is a square sum"};
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 2));
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 3));
      break;
    }
    case FormTag::P: {
      if (id.n < 3) throw std::invalid_argument("P requires n >= 3");
      Form first = power_sum(id.n, 4).scaled(rat(id.n)) - power_sum(id.n, 2).pow(2);
      e.form = first * msextic_form(id.n, rat(1), rat(-5), rat(6));
      e.claimed = {Claim::Yes, id.n >= 4 ? Claim::No : Claim::Yes,
                   id.n >= 4 ? "even symmetric decic family" : "ternary case is a square sum"};
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 2));
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 3));
      e.zero_patterns.push_back(PatternPoint::vt(id.n, id.n));
      break;
    }
    case FormTag::Q: {
      if (id.n < 3) throw std::invalid_argument("Q requires n >= 3");
      e.form = msextic_form(id.n, rat(1), rat(-5), rat(6)) *
               msextic_form(id.n, rat(1), rat(-7), rat(12));
      e.claimed = {Claim::Yes, id.n >= 5 ? Claim::No : Claim::Open,
                   id.n >= 5 ? "even symmetric dodecic family"
                             : "open for fewer than 5 variables"};
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 2));
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 3));
      if (id.n >= 4) e.zero_patterns.push_back(PatternPoint::vt(id.n, 4));
      break;
    }
    case FormTag::Rdodecic: {
      if (id.n < 3) throw std::invalid_argument("R requires n >= 3");
      e.form = (msextic_form(id.n, rat(1), rat(-3), rat(2)) *
                msextic_form(id.n, rat(1), rat(-5), rat(6)))
                   .scaled(rat(1, 12));
      e.claimed = {Claim::Yes, Claim::No, "even symmetric dodecic family"};
      e.zero_patterns.push_back(tu_curve(id.n));
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 1));
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 2));
      e.zero_patterns.push_back(PatternPoint::vt(id.n, 3));
      break;
    }
    case FormTag::Robinson: {
      if (id.n != 0 && id.n != 3)
        throw std::invalid_argument("the Robinson form is ternary");
      e.id.n = 3;
      e.form = robinson_form();
      e.claimed = {Claim::Yes, Claim::No, "Robinson"};
      e.zero_patterns.push_back(PatternPoint::vt(3, 2));
      e.zero_patterns.push_back(PatternPoint::vt(3, 3));
      break;
    }
    case FormTag::pn: {
      if (id.n < 3) throw std::invalid_argument("p requires n >= 3");
      e.form = p_jump_form(id.n);
      e.claimed = {Claim::No, Claim::No, "irreducible indefinite jump multiplier"};
      break;
    }
    case FormTag::qn: {
      if (id.n < 3) throw std::invalid_argument("q requires n >= 3");
      e.form = q_jump_form(id.n);
      e.claimed = {Claim::No, Claim::No, "irreducible indefinite jump multiplier"};
      break;
    }
    case FormTag::MSextic: {
      if (id.n < 1) throw std::invalid_argument("MSextic requires n >= 1");
      e.form = msextic_form(id.n, id.a, id.b, id.c);
      e.claimed = {Claim::Open, Claim::Open, "decided exactly by the power-sum sextic criterion"};
      break;
    }
  }
  return e;
}

IdentityReport verify_identities() {
  IdentityReport report;
  auto check = [&](const std::string& name, bool pass) {
    report.items.push_back({name, pass});
  };

  // (a) q_3 as a perturbed cube of M2.
  {
    Form lhs = build(FormId::make(FormTag::qn, 3)).form;
    Form rhs = power_sum(3, 2).pow(3) - Form::monomial(3, Monomial({2, 2, 2}), rat(106));
    check("q3_cube_identity", lhs == rhs);
  }

  // (b) n*M4 - M2^2 = sum_{i<j} (x_i^2 - x_j^2)^2 for n = 2..6.
  for (int n = 2; n <= 6; ++n) {
    Form lhs = power_sum(n, 4).scaled(rat(n)) - power_sum(n, 2).pow(2);
    Form rhs = Form::zero(n, 4);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> ei(n, 0), ej(n, 0);
        ei[i] = 2;
        ej[j] = 2;
        Form diff =
            Form::monomial(n, Monomial(ei), rat(1)) + Form::monomial(n, Monomial(ej), rat(-1));
        rhs = rhs + diff * diff;
      }
    check("pair_square_identity_n" + std::to_string(n), lhs == rhs);
  }

  // (c) The two dodecic expressions agree for n = 3..6.
  for (int n = 3; n <= 6; ++n) {
    Form lhs = build(FormId::make(FormTag::Rdodecic, n)).form;
    Form rhs = elementary3_of_squares(n) *
               (power_sum(n, 6) - sum_ordered_x4x2(n) + elementary3_of_squares(n).scaled(rat(3)));
    check("dodecic_product_identity_n" + std::to_string(n), lhs == rhs);
  }

  // (d) R_3 = (xyz)^2 * Robinson.
  {
    Form lhs = build(FormId::make(FormTag::Rdodecic, 3)).form;
    Form rhs = Form::monomial(3, Monomial({2, 2, 2}), rat(1)) * robinson_form();
    check("r3_robinson_factorization", lhs == rhs);
  }

  // (e) P_3 as an explicit sum of three squares.
  {
    Form lhs = build(FormId::make(FormTag::P, 3)).form;
    Form rhs = Form::zero(3, 10);
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      std::vector<int> sq(3, 0);
      sq[i] = 2;
      std::vector<int> e2i(3, 0), e2j(3, 0), e2k(3, 0);
      e2i[i] = 2;
      e2j[j] = 2;
      e2k[k] = 2;
      Form xi2 = Form::monomial(3, Monomial(e2i), rat(1));
      Form xj2 = Form::monomial(3, Monomial(e2j), rat(1));
      Form xk2 = Form::monomial(3, Monomial(e2k), rat(1));
      Form dij = xi2 - xj2, dik = xi2 - xk2;
      rhs = rhs + Form::monomial(3, Monomial(sq), rat(1)) * dij * dij * dik * dik;
    }
    check("p3_three_square_identity", lhs == rhs.scaled(rat(4)));
  }

  // (f) T_3 = 2 * M2 * Robinson.
  {
    Form lhs = build(FormId::make(FormTag::T, 3)).form;
    Form rhs = (power_sum(3, 2) * robinson_form()).scaled(rat(2));
    check("t3_robinson_identity", lhs == rhs);
  }

  // (g) C and D are the last-variable-zero restrictions of L and G.
  for (int m = 2; m <= 3; ++m) {
    Form c_form = build(FormId::make(FormTag::C, m)).form;
    Form l_restricted = build(FormId::make(FormTag::L, m)).form.drop_last_vars(1);
    check("c_restriction_m" + std::to_string(m), c_form == l_restricted);
    Form d_form = build(FormId::make(FormTag::D, m)).form;
    Form g_restricted = build(FormId::make(FormTag::G, m)).form.drop_last_vars(1);
    check("d_restriction_m" + std::to_string(m), d_form == g_restricted);
    Form g_form = build(FormId::make(FormTag::G, m)).form;
    Form l_squares = build(FormId::make(FormTag::L, m)).form.substitute_squares();
    check("g_even_avatar_m" + std::to_string(m), g_form == l_squares);
  }

  // (h) Binary restriction of p splits into four linear factors.
  {
    Form lhs = build(FormId::make(FormTag::pn, 3)).form.drop_last_vars(1);
    auto lin = [](long a, long b) {
      return Form::monomial(2, Monomial({1, 0}), rat(a)) +
             Form::monomial(2, Monomial({0, 1}), rat(b));
    };
    Form rhs = lin(1, 2) * lin(1, -2) * lin(2, 1) * lin(2, -1);
    check("binary_quartic_factorization", lhs == rhs);
  }

  return report;
}

}  // namespace forms
