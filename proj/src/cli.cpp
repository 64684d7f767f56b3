#include "forms/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "forms/json_io.hpp"

namespace forms {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void write_payload(const std::string& out_path, const Json& payload, std::ostream& out) {
  std::string text = canonical_dump(payload);
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot write " + out_path);
  f << text;
}

std::optional<FormTag> parse_tag(const std::string& name) {
  for (FormTag tag : {FormTag::M, FormTag::L, FormTag::C, FormTag::G, FormTag::D, FormTag::T,
                      FormTag::P, FormTag::Q, FormTag::Rdodecic, FormTag::Robinson, FormTag::pn,
                      FormTag::qn, FormTag::MSextic})
    if (tag_name(tag) == name) return tag;
  return std::nullopt;
}

struct IdFlags {
  std::string id;
  int n = 0;
  int m = 0;
  int r = 0;
  std::string a, b, c;

  FormId to_form_id() const {
    auto tag = parse_tag(id);
    if (!tag) throw std::invalid_argument("unknown form id: " + id);
    FormId fid;
    fid.tag = *tag;
    switch (*tag) {
      case FormTag::M:
        if (n <= 0 || r <= 0) throw std::invalid_argument("M requires --n and --r");
        return FormId::power_sum(n, r);
      case FormTag::L:
      case FormTag::C:
      case FormTag::G:
      case FormTag::D:
        if (m <= 0) throw std::invalid_argument(id + " requires --m");
        return FormId::make(*tag, m);
      case FormTag::Robinson:
        return FormId::make(FormTag::Robinson, 3);
      case FormTag::MSextic:
        if (a.empty() || b.empty() || c.empty() || n <= 0)
          throw std::invalid_argument("MSextic requires --a --b --c --n");
        return FormId::msextic(rational_from_string(a), rational_from_string(b),
                               rational_from_string(c), n);
      default:
        if (n <= 0) throw std::invalid_argument(id + " requires --n");
        return FormId::make(*tag, n);
    }
  }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--id", id, "form family tag")->required();
    cmd->add_option("--n", n, "variable count");
    cmd->add_option("--m", m, "family parameter m");
    cmd->add_option("--r", r, "power-sum exponent");
    cmd->add_option("--a", a, "sextic coefficient a");
    cmd->add_option("--b", b, "sextic coefficient b");
    cmd->add_option("--c", c, "sextic coefficient c");
  }
};

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> pt;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) pt.push_back(rational_from_string(item));
  return pt;
}

unsigned long search_seed() {
  if (const char* env = std::getenv("FORMS_SEED")) return std::stoul(env);
  return 0;
}

int run_build(const IdFlags& flags, const std::string& out_path, std::ostream& out) {
  GlossaryEntry entry = build(flags.to_form_id());
  write_payload(out_path, form_to_json(entry.form), out);
  return 0;
}

int run_refute(const std::string& in_path, const std::string& builtin, const IdFlags& flags,
               const std::string& script_path, const std::string& out_path, bool trace,
               std::ostream& out, std::ostream& err) {
  Form f = form_from_json(read_json_file(in_path));
  RefutationScript script;
  if (!builtin.empty()) {
    IdFlags sf = flags;
    sf.id = builtin;
    if (sf.id == "MSextic" && sf.a.empty()) {
      sf.a = "1";
      sf.b = "-5";
      sf.c = "6";
    }
    if (sf.n == 0) sf.n = f.vars();
    if (sf.m == 0) sf.m = f.vars() / 2;  // D: n = 2m; G: n = 2m+1
    if (sf.id == "G") sf.m = (f.vars() - 1) / 2;
    script = builtin_script(sf.to_form_id());
  } else if (!script_path.empty()) {
    script = script_from_json(read_json_file(script_path));
  } else {
    throw std::invalid_argument("refute needs --builtin or --script");
  }

  if (trace) {
    Form g = script.restrict_zero_count > 0 ? f.drop_last_vars(script.restrict_zero_count) : f;
    ParityClass cls = candidate_support(g.vars(), script.target.degree(), script.target.parity());
    ConstraintSystem sys = assemble_constraints(g, script, cls);
    Json rows = Json::array();
    for (const auto& row : sys.rows) {
      Json r;
      r["provenance"] = row.provenance;
      Json entries = Json::array();
      for (const auto& x : row.entries) entries.push_back(rational_to_string(x));
      r["entries"] = std::move(entries);
      rows.push_back(std::move(r));
    }
    err << canonical_dump(rows);
  }

  RefuteResult result = refute(f, script);
  if (const RefutationCertificate* cert = std::get_if<RefutationCertificate>(&result)) {
    write_payload(out_path, certificate_to_json(*cert), out);
    return 0;
  }
  out << canonical_dump(inconclusive_to_json(std::get<Inconclusive>(result)));
  return 2;
}

int run_psd(const std::string& in_path, bool quartic, const std::vector<std::string>& msextic,
            bool search, long budget, std::ostream& out) {
  if (!msextic.empty()) {
    if (msextic.size() != 4) throw std::invalid_argument("--msextic needs a b c n");
    MSexticCoeffs coeffs{rational_from_string(msextic[0]), rational_from_string(msextic[1]),
                         rational_from_string(msextic[2]), std::stoi(msextic[3])};
    MSexticStatus st = m_sextic_status(coeffs);
    Json j;
    j["psd"] = st.psd;
    j["sos"] = st.sos;
    j["method"] = "power-sum sextic criterion";
    out << canonical_dump(j);
    return 0;
  }
  Form f = form_from_json(read_json_file(in_path));
  if (quartic) {
    PsdVerdict v = quartic_symmetric_psd(f);
    out << canonical_dump(verdict_to_json(v));
    return v.status == PsdStatus::Unknown ? 2 : 0;
  }
  if (search) {
    PsdVerdict v;
    if (auto w = search_counterexample(f, budget, search_seed())) {
      v.status = PsdStatus::ProvedNotPsd;
      v.witness = *w;
      v.method = "counterexample search";
      out << canonical_dump(verdict_to_json(v));
      return 0;
    }
    v.status = PsdStatus::Unknown;
    v.method = "counterexample search exhausted its budget";
    out << canonical_dump(verdict_to_json(v));
    return 2;
  }
  throw std::invalid_argument("psd needs --quartic-symmetric, --msextic, or --search");
}

int run_jump(const std::string& seed_builtin, const IdFlags& flags, const std::string& in_path,
             const std::string& cert_path, int pq_r, bool allvars, const std::string& out_path,
             std::ostream& out) {
  ProvenancedForm seed;
  if (!seed_builtin.empty()) {
    IdFlags sf = flags;
    sf.id = seed_builtin;
    if (sf.id == "MSextic" && sf.a.empty()) {
      sf.a = "1";
      sf.b = "-5";
      sf.c = "6";
    }
    seed = provenanced_seed(sf.to_form_id());
  } else {
    if (in_path.empty() || cert_path.empty())
      throw std::invalid_argument("jump needs --seed-builtin, or --in with --cert");
    Form f = form_from_json(read_json_file(in_path));
    RefutationCertificate cert = certificate_from_json(read_json_file(cert_path));
    if (!verify_certificate(f, cert))
      throw std::invalid_argument("certificate does not verify against the input form");
    if (auto w = search_counterexample(f, 20000, search_seed()))
      throw std::invalid_argument("seed form is not psd: negative value found");
    seed.form = f;
    PsdVerdict psd;
    psd.status = PsdStatus::ProvedPsd;
    psd.method = "asserted by caller (screened by counterexample search); "
                 "the certificate covers the not-sos side";
    seed.psd = psd;
    seed.sos.kind = SosStatus::Kind::ProvedNotSos;
    seed.sos.certificate = std::make_shared<RefutationCertificate>(std::move(cert));
    seed.sos.justification = "verified refutation certificate";
    seed.lineage.push_back("user-provided form with verified certificate");
  }
  ProvenancedForm jumped = allvars ? jump_allvars(seed) : jump_pq(seed, pq_r);
  Json j;
  j["form"] = form_to_json(jumped.form);
  Json lineage = Json::array();
  for (const auto& step : jumped.lineage) lineage.push_back(step);
  j["lineage"] = std::move(lineage);
  j["psd_method"] = jumped.psd.method;
  j["sos_status"] = "proved-not-sos";
  j["sos_justification"] = jumped.sos.justification;
  write_payload(out_path, j, out);
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact certificates for even symmetric forms"};
  app.require_subcommand(1);

  IdFlags build_flags;
  std::string build_out;
  CLI::App* cmd_build = app.add_subcommand("build", "expand a named form to JSON");
  build_flags.add_flags(cmd_build);
  cmd_build->add_option("--out", build_out, "output file (stdout if omitted)");

  std::string eval_in, eval_point;
  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a form at a rational point");
  cmd_eval->add_option("--in", eval_in)->required();
  cmd_eval->add_option("--point", eval_point, "comma-separated rationals")->required();

  std::string psd_in;
  bool psd_quartic = false, psd_search = false;
  long psd_budget = 100000;
  std::vector<std::string> psd_msextic;
  CLI::App* cmd_psd = app.add_subcommand("psd", "exact psd checks");
  cmd_psd->add_option("--in", psd_in);
  cmd_psd->add_flag("--quartic-symmetric", psd_quartic);
  cmd_psd->add_option("--msextic", psd_msextic, "a b c n")->expected(4);
  cmd_psd->add_flag("--search", psd_search);
  cmd_psd->add_option("--budget", psd_budget);

  std::string ref_in, ref_builtin, ref_script, ref_out;
  bool ref_trace = false;
  IdFlags ref_flags;
  CLI::App* cmd_refute = app.add_subcommand("refute", "derive a not-sos certificate");
  cmd_refute->add_option("--in", ref_in)->required();
  cmd_refute->add_option("--builtin", ref_builtin, "builtin script id");
  cmd_refute->add_option("--script", ref_script, "script JSON file");
  cmd_refute->add_option("--n", ref_flags.n);
  cmd_refute->add_option("--m", ref_flags.m);
  cmd_refute->add_option("--out", ref_out);
  cmd_refute->add_flag("--trace", ref_trace, "dump constraint rows to stderr");

  std::string vc_form, vc_cert;
  CLI::App* cmd_verify = app.add_subcommand("verify-cert", "re-check a certificate from scratch");
  cmd_verify->add_option("--form", vc_form)->required();
  cmd_verify->add_option("--cert", vc_cert)->required();

  CLI::App* cmd_identities =
      app.add_subcommand("verify-identities", "replay the displayed polynomial identities");

  int cls_n = 0, cls_deg = 0;
  CLI::App* cmd_classify = app.add_subcommand("classify", "answer for one (n, 2d) pair");
  cmd_classify->add_option("--n", cls_n)->required();
  cmd_classify->add_option("--deg", cls_deg)->required();

  int chart_n_max = 5, chart_deg_max = 14;
  std::string chart_format = "text";
  CLI::App* cmd_chart = app.add_subcommand("chart", "classification table");
  cmd_chart->add_option("--n-max", chart_n_max);
  cmd_chart->add_option("--deg-max", chart_deg_max);
  cmd_chart->add_option("--format", chart_format)->check(CLI::IsMember({"text", "json"}));

  std::string jump_seed, jump_in, jump_cert, jump_out;
  int jump_pq_r = 0;
  bool jump_all = false;
  IdFlags jump_flags;
  CLI::App* cmd_jump = app.add_subcommand("jump", "degree-jump a psd-not-sos seed");
  cmd_jump->add_option("--seed-builtin", jump_seed, "glossary id with builtin certificate");
  cmd_jump->add_option("--in", jump_in);
  cmd_jump->add_option("--cert", jump_cert);
  cmd_jump->add_option("--n", jump_flags.n);
  cmd_jump->add_option("--m", jump_flags.m);
  cmd_jump->add_option("--a", jump_flags.a);
  cmd_jump->add_option("--b", jump_flags.b);
  cmd_jump->add_option("--c", jump_flags.c);
  cmd_jump->add_option("--pq", jump_pq_r, "pq jump with this r");
  cmd_jump->add_flag("--allvars", jump_all);
  cmd_jump->add_option("--out", jump_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cmd_build->parsed()) return run_build(build_flags, build_out, out);
    if (cmd_eval->parsed()) {
      Form f = form_from_json(read_json_file(eval_in));
      Rational v = f.evaluate(parse_point(eval_point));
      Json j;
      j["value"] = rational_to_string(v);
      out << canonical_dump(j);
      return 0;
    }
    if (cmd_psd->parsed())
      return run_psd(psd_in, psd_quartic, psd_msextic, psd_search, psd_budget, out);
    if (cmd_refute->parsed())
      return run_refute(ref_in, ref_builtin, ref_flags, ref_script, ref_out, ref_trace, out, err);
    if (cmd_verify->parsed()) {
      Form f = form_from_json(read_json_file(vc_form));
      RefutationCertificate cert = certificate_from_json(read_json_file(vc_cert));
      bool ok = verify_certificate(f, cert);
      Json j;
      j["valid"] = ok;
      out << canonical_dump(j);
      return ok ? 0 : 1;
    }
    if (cmd_identities->parsed()) {
      IdentityReport report = verify_identities();
      out << canonical_dump(identity_report_to_json(report));
      return report.all_pass() ? 0 : 2;
    }
    if (cmd_classify->parsed()) {
      out << canonical_dump(classification_to_json(classify(cls_n, cls_deg)));
      return 0;
    }
    if (cmd_chart->parsed()) {
      Chart c = chart(chart_n_max, chart_deg_max);
      if (chart_format == "json") out << canonical_dump(chart_to_json(c));
      else out << chart_to_text(c);
      return 0;
    }
    if (cmd_jump->parsed())
      return run_jump(jump_seed, jump_flags, jump_in, jump_cert, jump_pq_r, jump_all, jump_out,
                      out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace forms
