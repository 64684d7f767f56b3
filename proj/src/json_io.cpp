#include "forms/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace forms {

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  Rational q(s);
  q.canonicalize();
  return q;
}

namespace {

Json monomial_to_json(const Monomial& m) {
  Json a = Json::array();
  for (int e : m.exps) a.push_back(e);
  return a;
}

Monomial monomial_from_json(const Json& j) {
  std::vector<int> e;
  for (const auto& v : j) e.push_back(v.get<int>());
  return Monomial(e);
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_string(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  Vec v;
  for (const auto& s : j) v.push_back(rational_from_string(s.get<std::string>()));
  return v;
}

Json poly_to_json(const UnivariatePoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
  return a;
}

UnivariatePoly poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& s : j) c.push_back(rational_from_string(s.get<std::string>()));
  return UnivariatePoly(std::move(c));
}

}  // namespace

Json form_to_json(const Form& f) {
  Json j;
  j["n"] = f.vars();
  j["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["exp"] = monomial_to_json(m);
    t["num"] = num_string(c);
    t["den"] = den_string(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Form form_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  int degree = j.at("degree").get<int>();
  Form f(n, degree);
  for (const auto& t : j.at("terms")) {
    Monomial m = monomial_from_json(t.at("exp"));
    Rational c = rat_from_strings(t.at("num").get<std::string>(), t.at("den").get<std::string>());
    f.add_term(m, c);
  }
  return f;
}

Json pattern_to_json(const PatternPoint& p) {
  Json slots = Json::array();
  for (const auto& s : p.slots) {
    if (std::holds_alternative<ParamT>(s)) slots.push_back("T");
    else if (std::holds_alternative<ParamU>(s)) slots.push_back("U");
    else slots.push_back(rational_to_string(std::get<Rational>(s)));
  }
  Json j;
  j["slots"] = std::move(slots);
  return j;
}

PatternPoint pattern_from_json(const Json& j) {
  std::vector<Slot> slots;
  for (const auto& s : j.at("slots")) {
    std::string v = s.get<std::string>();
    if (v == "T") slots.emplace_back(ParamT{});
    else if (v == "U") slots.emplace_back(ParamU{});
    else slots.emplace_back(rational_from_string(v));
  }
  return PatternPoint::from_slots(std::move(slots));
}

Json script_to_json(const RefutationScript& s) {
  Json j;
  j["target"] = monomial_to_json(s.target);
  j["restrict_zero_count"] = s.restrict_zero_count;
  Json orbits = Json::array();
  for (const auto& p : s.zero_orbits) orbits.push_back(pattern_to_json(p));
  j["zero_orbits"] = std::move(orbits);
  Json curves = Json::array();
  for (const auto& p : s.zero_curves) curves.push_back(pattern_to_json(p));
  j["zero_curves"] = std::move(curves);
  Json shaped = Json::array();
  for (const auto& sc : s.shaped_curves) {
    Json e;
    e["pattern"] = pattern_to_json(sc.pattern);
    e["expected"] = poly_to_json(sc.expected);
    shaped.push_back(std::move(e));
  }
  j["shaped_curves"] = std::move(shaped);
  return j;
}

RefutationScript script_from_json(const Json& j) {
  RefutationScript s;
  s.target = monomial_from_json(j.at("target"));
  s.restrict_zero_count = j.value("restrict_zero_count", 0);
  if (j.contains("zero_orbits"))
    for (const auto& p : j.at("zero_orbits")) s.zero_orbits.push_back(pattern_from_json(p));
  if (j.contains("zero_curves"))
    for (const auto& p : j.at("zero_curves")) s.zero_curves.push_back(pattern_from_json(p));
  if (j.contains("shaped_curves"))
    for (const auto& e : j.at("shaped_curves"))
      s.shaped_curves.push_back(
          {pattern_from_json(e.at("pattern")), poly_from_json(e.at("expected"))});
  return s;
}

Json certificate_to_json(const RefutationCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["degree"] = c.degree;
  j["script"] = script_to_json(c.script);
  Json parity = Json::array();
  for (int b : c.cls.parity) parity.push_back(b);
  j["parity"] = std::move(parity);
  Json support = Json::array();
  for (const auto& m : c.cls.support) support.push_back(monomial_to_json(m));
  j["support"] = std::move(support);
  j["diagonal_coefficient"] = rational_to_string(c.diagonal_coefficient);
  Json kernel = Json::array();
  for (const auto& v : c.kernel_basis) kernel.push_back(vec_to_json(v));
  j["kernel_basis"] = std::move(kernel);
  j["forced_zero_proof"] = vec_to_json(c.forced_zero_proof);
  Json audit = Json::array();
  for (const auto& a : c.factor_pair_audit) {
    Json e;
    e["m1"] = monomial_to_json(a.m1);
    e["m2"] = monomial_to_json(a.m2);
    e["status"] = a.status;
    audit.push_back(std::move(e));
  }
  j["factor_pair_audit"] = std::move(audit);
  return j;
}

RefutationCertificate certificate_from_json(const Json& j) {
  RefutationCertificate c;
  c.n = j.at("n").get<int>();
  c.degree = j.at("degree").get<int>();
  c.script = script_from_json(j.at("script"));
  for (const auto& b : j.at("parity")) c.cls.parity.push_back(b.get<int>());
  for (const auto& m : j.at("support")) c.cls.support.push_back(monomial_from_json(m));
  c.diagonal_coefficient = rational_from_string(j.at("diagonal_coefficient").get<std::string>());
  for (const auto& v : j.at("kernel_basis")) c.kernel_basis.push_back(vec_from_json(v));
  c.forced_zero_proof = vec_from_json(j.at("forced_zero_proof"));
  for (const auto& a : j.at("factor_pair_audit"))
    c.factor_pair_audit.push_back({monomial_from_json(a.at("m1")), monomial_from_json(a.at("m2")),
                                   a.at("status").get<std::string>()});
  return c;
}

Json inconclusive_to_json(const Inconclusive& inc) {
  Json j;
  j["result"] = "inconclusive";
  j["reason"] = inc.reason;
  j["kernel_dim"] = inc.kernel_dim;
  if (inc.surviving_kernel_vector)
    j["surviving_kernel_vector"] = vec_to_json(*inc.surviving_kernel_vector);
  if (!inc.unresolved_pairs.empty()) {
    Json pairs = Json::array();
    for (const auto& [m1, m2] : inc.unresolved_pairs) {
      Json e;
      e["m1"] = monomial_to_json(m1);
      e["m2"] = monomial_to_json(m2);
      pairs.push_back(std::move(e));
    }
    j["unresolved_pairs"] = std::move(pairs);
  }
  return j;
}

Json verdict_to_json(const PsdVerdict& v) {
  Json j;
  switch (v.status) {
    case PsdStatus::ProvedPsd: j["status"] = "proved-psd"; break;
    case PsdStatus::ProvedNotPsd: j["status"] = "proved-not-psd"; break;
    case PsdStatus::Unknown: j["status"] = "unknown"; break;
  }
  j["method"] = v.method;
  if (v.witness) {
    Json w;
    w["point"] = vec_to_json(v.witness->point);
    w["value"] = rational_to_string(v.witness->value);
    j["witness"] = std::move(w);
  }
  return j;
}

Json identity_report_to_json(const IdentityReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items) {
    Json e;
    e["name"] = i.name;
    e["pass"] = i.pass;
    items.push_back(std::move(e));
  }
  Json j;
  j["identities"] = std::move(items);
  j["all_pass"] = r.all_pass();
  return j;
}

Json classification_to_json(const ClassificationEntry& e) {
  Json j;
  j["n"] = e.n;
  j["degree"] = e.two_d;
  j["answer"] = e.equal ? "equal" : "strict";
  j["citation"] = e.citation;
  if (e.witness) {
    Json w;
    switch (e.witness->kind) {
      case WitnessRecipe::Kind::DirectForm: w["kind"] = "direct"; break;
      case WitnessRecipe::Kind::JumpChain: w["kind"] = "jump-chain"; break;
      case WitnessRecipe::Kind::Literature: w["kind"] = "literature"; break;
    }
    if (e.witness->seed) w["seed"] = e.witness->seed->describe();
    if (e.witness->pq_r > 0) w["pq_r"] = e.witness->pq_r;
    if (e.witness->allvars_count > 0) w["allvars_count"] = e.witness->allvars_count;
    w["constructible"] = e.witness->constructible;
    w["recipe"] = e.witness->describe();
    j["witness"] = std::move(w);
  }
  return j;
}

Json chart_to_json(const Chart& c) {
  Json j;
  j["n_max"] = c.n_max;
  j["deg_max"] = c.deg_max;
  Json cells = Json::array();
  for (const auto& e : c.cells) cells.push_back(classification_to_json(e));
  j["cells"] = std::move(cells);
  return j;
}

std::string chart_to_text(const Chart& c) {
  std::ostringstream os;
  os << "deg \\ var";
  for (int n = 2; n <= c.n_max; ++n) os << "\t" << n;
  os << "\n";
  size_t idx = 0;
  for (int two_d = 2; two_d <= c.deg_max; two_d += 2) {
    os << two_d;
    for (int n = 2; n <= c.n_max; ++n) os << "\t" << (c.cells[idx++].equal ? "✓" : "×");
    os << "\n";
  }
  return os.str();
}

}  // namespace forms
