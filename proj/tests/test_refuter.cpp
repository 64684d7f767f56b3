#include <doctest.h>

#include "forms/json_io.hpp"
#include "forms/refuter.hpp"

using namespace forms;

namespace {

Form named(FormTag tag, int param) { return build(FormId::make(tag, param)).form; }

RefutationCertificate expect_certificate(const Form& f, const RefutationScript& s) {
  RefuteResult r = refute(f, s);
  REQUIRE(holds_certificate(r));
  return std::get<RefutationCertificate>(r);
}

Inconclusive expect_inconclusive(const Form& f, const RefutationScript& s) {
  RefuteResult r = refute(f, s);
  REQUIRE_FALSE(holds_certificate(r));
  return std::get<Inconclusive>(r);
}

}  // namespace

TEST_CASE("candidate support enumeration") {
  ParityClass odd_all = candidate_support(3, 3, {1, 1, 1});
  REQUIRE(odd_all.support.size() == 1);
  CHECK(odd_all.support[0] == Monomial({1, 1, 1}));

  ParityClass first_odd = candidate_support(3, 3, {1, 0, 0});
  REQUIRE(first_odd.support.size() == 3);
  CHECK(first_odd.index_of(Monomial({3, 0, 0})) >= 0);
  CHECK(first_odd.index_of(Monomial({1, 2, 0})) >= 0);
  CHECK(first_odd.index_of(Monomial({1, 0, 2})) >= 0);

  CHECK(candidate_support(5, 6, {0, 0, 0, 0, 0}).support.size() == 35);
  CHECK_THROWS_AS(candidate_support(3, 3, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("Robinson refutation replays the 3x3 kernel oracle") {
  Form robinson = named(FormTag::Robinson, 3);
  RefutationScript script = builtin_script(FormId::make(FormTag::Robinson, 3));
  RefutationCertificate cert = expect_certificate(robinson, script);

  // Independent oracle: the class {x^3, x y^2, x z^2} meets rows
  // a+b = 0, a+c = 0, a+b+c = 0, whose determinant is -1, so the kernel is 0.
  ParityClass cls = candidate_support(3, 3, {1, 0, 0});
  ConstraintSystem sys = assemble_constraints(robinson, script, cls);
  REQUIRE(sys.rows.size() == 3);
  Mat m = sys.matrix();
  Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  CHECK(det != 0);
  CHECK(cert.kernel_basis.empty());
  CHECK(cert.cls.support.size() == 3);
  CHECK(verify_certificate(robinson, cert));
}

TEST_CASE("certificates for the octic families") {
  RefutationCertificate d4 =
      expect_certificate(named(FormTag::D, 2), builtin_script(FormId::make(FormTag::D, 2)));
  CHECK(d4.script.target == Monomial({4, 0, 0, 0}));
  CHECK(d4.diagonal_coefficient == rat(8));
  CHECK(verify_certificate(named(FormTag::D, 2), d4));

  // The G certificate works through the last-variable restriction.
  RefutationCertificate g5 =
      expect_certificate(named(FormTag::G, 2), builtin_script(FormId::make(FormTag::G, 2)));
  CHECK(g5.script.restrict_zero_count == 1);
  CHECK(g5.n == 4);
  CHECK(verify_certificate(named(FormTag::G, 2), g5));
  // ... and fails against a form whose restriction differs.
  CHECK_FALSE(verify_certificate(named(FormTag::G, 3), g5));
}

TEST_CASE("certificate kernel equations replay exactly") {
  Form q5 = named(FormTag::Q, 5);
  RefutationCertificate cert =
      expect_certificate(q5, builtin_script(FormId::make(FormTag::Q, 5)));
  CHECK(cert.kernel_basis.size() > 0);
  ConstraintSystem sys = assemble_constraints(q5, cert.script, cert.cls);
  Mat rows = sys.matrix();
  int mu_idx = cert.cls.index_of(cert.script.target);
  for (const auto& v : cert.kernel_basis) {
    CHECK(v[mu_idx] == 0);
    for (const auto& row : rows) {
      Rational dot(0);
      for (size_t j = 0; j < v.size(); ++j) dot += row[j] * v[j];
      CHECK(dot == 0);
    }
  }
}

TEST_CASE("dodecic certificate audits its factor pairs") {
  Form r4 = named(FormTag::Rdodecic, 4);
  RefutationCertificate cert =
      expect_certificate(r4, builtin_script(FormId::make(FormTag::Rdodecic, 4)));
  CHECK(cert.script.target == Monomial({1, 1, 4, 0}));
  CHECK(cert.diagonal_coefficient == rat(1));

  auto find_pair = [&](const Monomial& a, const Monomial& b) -> const FactorPairAudit* {
    for (const auto& e : cert.factor_pair_audit)
      if ((e.m1 == a && e.m2 == b) || (e.m1 == b && e.m2 == a)) return &e;
    return nullptr;
  };
  const FactorPairAudit* p1 = find_pair(Monomial({2, 2, 2, 0}), Monomial({0, 0, 6, 0}));
  REQUIRE(p1 != nullptr);
  CHECK(p1->status.find("eliminated") == 0);
  const FactorPairAudit* p2 = find_pair(Monomial({2, 0, 4, 0}), Monomial({0, 2, 4, 0}));
  REQUIRE(p2 != nullptr);
  CHECK(p2->status.find("eliminated") == 0);
  const FactorPairAudit* target = find_pair(Monomial({1, 1, 4, 0}), Monomial({1, 1, 4, 0}));
  REQUIRE(target != nullptr);
  CHECK(target->status == "target");

  // Brute-force audit completeness: scan all degree-6 monomial pairs.
  ParityClass all_deg6_even = candidate_support(4, 6, {0, 0, 0, 0});
  ParityClass all_deg6_ee = candidate_support(4, 6, {1, 1, 0, 0});
  std::vector<Monomial> everything;
  for (const auto& parity :
       {std::vector<int>{0, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0},
        {0, 1, 0, 1}, {0, 0, 1, 1}}) {
    ParityClass cls = candidate_support(4, 6, parity);
    everything.insert(everything.end(), cls.support.begin(), cls.support.end());
  }
  Monomial mu_sq = cert.script.target.times(cert.script.target);
  size_t brute_count = 0;
  for (size_t i = 0; i < everything.size(); ++i)
    for (size_t j = i; j < everything.size(); ++j)
      if (everything[i].times(everything[j]) == mu_sq) ++brute_count;
  CHECK(brute_count == cert.factor_pair_audit.size());
  CHECK(verify_certificate(r4, cert));
}

TEST_CASE("tampered certificates are rejected") {
  Form d4 = named(FormTag::D, 2);
  RefutationCertificate cert =
      expect_certificate(d4, builtin_script(FormId::make(FormTag::D, 2)));
  REQUIRE(verify_certificate(d4, cert));

  RefutationCertificate bad = cert;
  bad.diagonal_coefficient = -bad.diagonal_coefficient;
  CHECK_FALSE(verify_certificate(d4, bad));

  bad = cert;
  bad.forced_zero_proof[0] += rat(1);
  CHECK_FALSE(verify_certificate(d4, bad));

  bad = cert;
  bad.cls.support.pop_back();
  CHECK_FALSE(verify_certificate(d4, bad));

  // Cross-form check: a D4 certificate is not valid for D6.
  CHECK_FALSE(verify_certificate(named(FormTag::D, 3), cert));
}

TEST_CASE("soundness controls return inconclusive") {
  // P3 and T3 are sums of squares; their builtin-style scripts must fail.
  Inconclusive p3 = expect_inconclusive(named(FormTag::P, 3),
                                        builtin_script(FormId::make(FormTag::P, 3)));
  CHECK(p3.kernel_dim > 0);
  REQUIRE(p3.surviving_kernel_vector.has_value());

  expect_inconclusive(named(FormTag::T, 3), builtin_script(FormId::make(FormTag::T, 3)));

  // The sos sextic (1,-3,2): zeros at v_1 and v_2; try both parity classes.
  for (int n = 3; n <= 5; ++n) {
    Form f = build(FormId::msextic(rat(1), rat(-3), rat(2), n)).form;
    RefutationScript script;
    std::vector<int> mu(n, 0);
    mu[0] = 3;
    script.target = Monomial(mu);
    script.zero_orbits.push_back(PatternPoint::vt(n, 1));
    script.zero_orbits.push_back(PatternPoint::vt(n, 2));
    expect_inconclusive(f, script);

    std::vector<int> mu2(n, 0);
    mu2[0] = mu2[1] = mu2[2] = 1;
    script.target = Monomial(mu2);
    expect_inconclusive(f, script);
  }
}

TEST_CASE("open cases stay open") {
  Inconclusive q4 = expect_inconclusive(named(FormTag::Q, 4),
                                        builtin_script(FormId::make(FormTag::Q, 4)));
  CHECK(q4.kernel_dim > 0);
  expect_inconclusive(named(FormTag::Q, 3), builtin_script(FormId::make(FormTag::Q, 3)));
}

TEST_CASE("monotonicity: extra verified zero rows keep the certificate") {
  Form d4 = named(FormTag::D, 2);
  RefutationScript script = builtin_script(FormId::make(FormTag::D, 2));
  script.zero_orbits.push_back(PatternPoint::vt(4, 2));  // duplicate rows
  script.zero_orbits.push_back(PatternPoint::two_value(4, 2, rat(2), rat(0)));
  RefutationCertificate cert = expect_certificate(d4, script);
  CHECK(verify_certificate(d4, cert));
}

TEST_CASE("false zero claims are refused") {
  Form t4 = named(FormTag::T, 4);
  RefutationScript script = builtin_script(FormId::make(FormTag::T, 4));
  script.zero_orbits.push_back(PatternPoint::vt(4, 1));  // T4(v_1) = 2
  CHECK_THROWS_AS(refute(t4, script), std::invalid_argument);
}

TEST_CASE("constraint assembly stays inside the parity class") {
  Form q5 = named(FormTag::Q, 5);
  RefutationScript script = builtin_script(FormId::make(FormTag::Q, 5));
  ParityClass cls = candidate_support(5, 6, script.target.parity());
  for (const auto& m : cls.support) CHECK(m.parity() == script.target.parity());
  ConstraintSystem sys = assemble_constraints(q5, script, cls);
  for (const auto& row : sys.rows) CHECK(row.entries.size() == cls.support.size());
}

TEST_CASE("diagonal precondition") {
  // (1,-3,2) has no x1^6 term, so the x1^3 target cannot start a refutation.
  Form f = build(FormId::msextic(rat(1), rat(-3), rat(2), 3)).form;
  RefutationScript script;
  script.target = Monomial({3, 0, 0});
  Inconclusive inc = expect_inconclusive(f, script);
  CHECK(inc.reason.find("not positive") != std::string::npos);
}

TEST_CASE("refute validates its inputs") {
  RefutationScript script;
  script.target = Monomial({3, 0, 0});
  CHECK_THROWS_AS(refute(build(FormId::make(FormTag::L, 2)).form, script),
                  std::invalid_argument);  // not even
  script.target = Monomial({2, 0, 0});
  CHECK_THROWS_AS(refute(build(FormId::msextic(rat(1), rat(0), rat(1), 3)).form, script),
                  std::invalid_argument);  // wrong target degree
}

TEST_CASE("shape rule skips restrictions with irrational roots") {
  // f = x^2 - 2 y^2 restricted to (T, 1) is t^2 - 2: no rational roots.
  Form f = Form::monomial(2, Monomial({2, 0}), rat(1)) +
           Form::monomial(2, Monomial({0, 2}), rat(-2));
  RefutationScript script;
  script.target = Monomial({1, 0});
  std::vector<Slot> slots{ParamT{}, Slot(rat(1))};
  script.shaped_curves.push_back(
      {PatternPoint::from_slots(slots), UnivariatePoly::from_ints({-2, 0, 1})});
  ParityClass cls = candidate_support(2, 1, {1, 0});
  ConstraintSystem sys = assemble_constraints(f, script, cls);
  CHECK(sys.warnings.size() == 1);
  CHECK(sys.rows.empty());
  expect_inconclusive(f, script);
}

TEST_CASE("larger family instances certify and verify") {
  for (const FormId& id : {FormId::make(FormTag::D, 4), FormId::make(FormTag::Q, 7),
                           FormId::make(FormTag::Rdodecic, 6), FormId::make(FormTag::T, 6),
                           FormId::make(FormTag::P, 6)}) {
    INFO(id.describe());
    Form f = build(id).form;
    RefutationCertificate cert = expect_certificate(f, builtin_script(id));
    CHECK(verify_certificate(f, cert));
  }
}

TEST_CASE("scripted experiment: M2 times the even difference octic") {
  // Scripts are data: the decic M2 * G_{2m+1} is not a glossary family, but
  // a hand-written script (zeros at v-levels plus the two-value curve family)
  // refutes it. Both outcomes verify from scratch.
  for (int m : {2, 3}) {
    int n = 2 * m + 1;
    Form f = power_sum(n, 2) * named(FormTag::G, m);
    RefutationScript s;
    std::vector<int> mu(n, 0);
    mu[0] = 5;
    s.target = Monomial(mu);
    for (int t = 2; t <= n; ++t) {
      // v_t is a zero level iff its 1/0 multiplicities split as m+1 and m.
      if (t == m + 1 || n - t == m + 1 || t == n)
        s.zero_orbits.push_back(PatternPoint::vt(n, t));
    }
    std::vector<Slot> tu(n, Slot(ParamU{}));
    for (int i = 0; i <= m; ++i) tu[i] = ParamT{};
    s.zero_curves.push_back(PatternPoint::from_slots(tu));
    RefutationCertificate cert = expect_certificate(f, s);
    CHECK(verify_certificate(f, cert));
  }
}

TEST_CASE("squares of non-sos forms never certify") {
  // f = g^2 is sos by construction and inherits g's zero orbits, so the
  // engine must stay inconclusive even though g itself certifies.
  for (int n : {4, 5}) {
    Form g = build(FormId::msextic(rat(1), rat(-5), rat(6), n)).form;
    Form f = g * g;
    RefutationScript s;
    std::vector<int> mu(n, 0);
    mu[0] = 6;
    s.target = Monomial(mu);
    s.zero_orbits.push_back(PatternPoint::vt(n, 2));
    s.zero_orbits.push_back(PatternPoint::vt(n, 3));
    Inconclusive inc = expect_inconclusive(f, s);
    REQUIRE(inc.surviving_kernel_vector.has_value());
  }
  Form d4 = named(FormTag::D, 2);
  Form f = d4 * d4;
  RefutationScript s;
  s.target = Monomial({8, 0, 0, 0});
  s.zero_orbits.push_back(PatternPoint::vt(4, 2));
  s.zero_orbits.push_back(PatternPoint::vt(4, 3));
  expect_inconclusive(f, s);
}

TEST_CASE("script and certificate JSON round-trips") {
  RefutationScript script = builtin_script(FormId::make(FormTag::Rdodecic, 4));
  RefutationScript reparsed = script_from_json(script_to_json(script));
  CHECK(reparsed == script);

  Form r4 = named(FormTag::Rdodecic, 4);
  RefutationCertificate cert = expect_certificate(r4, script);
  Json j = certificate_to_json(cert);
  RefutationCertificate reparsed_cert = certificate_from_json(j);
  CHECK(verify_certificate(r4, reparsed_cert));
  CHECK(canonical_dump(certificate_to_json(reparsed_cert)) == canonical_dump(j));
}

TEST_CASE("builtin script registry") {
  CHECK_THROWS_AS(builtin_script(FormId::make(FormTag::L, 2)), std::invalid_argument);
  CHECK_THROWS_AS(builtin_script(FormId::msextic(rat(1), rat(-3), rat(2), 4)),
                  std::invalid_argument);
  RefutationScript p5 = builtin_script(FormId::make(FormTag::P, 5));
  CHECK(p5.target == Monomial({5, 0, 0, 0, 0}));
  CHECK(p5.zero_orbits.size() == 3);
}
