#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "forms/cli.hpp"
#include "forms/json_io.hpp"

using namespace forms;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / "forms_cli_test";
    fs::create_directories(dir);
  }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::vector<std::string>& args, std::string* stdout_text = nullptr,
        std::string* stderr_text = nullptr) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  if (stdout_text) *stdout_text = out.str();
  if (stderr_text) *stderr_text = err.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("build round-trips canonically") {
  TempDir tmp;
  std::string path = tmp.file("d4.json");
  CHECK(run({"build", "--id", "D", "--m", "2", "--out", path}) == 0);
  std::string first = slurp(path);
  Json parsed = Json::parse(first);
  CHECK(canonical_dump(form_to_json(form_from_json(parsed))) == first);
}

TEST_CASE("eval matches library evaluation") {
  TempDir tmp;
  std::string path = tmp.file("t4.json");
  REQUIRE(run({"build", "--id", "T", "--n", "4", "--out", path}) == 0);
  std::string out;
  CHECK(run({"eval", "--in", path, "--point", "1,0,0,0"}, &out) == 0);
  CHECK(Json::parse(out).at("value") == "2");
  CHECK(run({"eval", "--in", path, "--point", "1,1,0,0"}, &out) == 0);
  CHECK(Json::parse(out).at("value") == "0");
}

TEST_CASE("refute emits a verifiable certificate") {
  TempDir tmp;
  std::string form_path = tmp.file("d4.json");
  std::string cert_path = tmp.file("d4.cert.json");
  REQUIRE(run({"build", "--id", "D", "--m", "2", "--out", form_path}) == 0);
  CHECK(run({"refute", "--in", form_path, "--builtin", "D", "--out", cert_path}) == 0);
  CHECK(run({"verify-cert", "--form", form_path, "--cert", cert_path}) == 0);

  // Tampering must be caught.
  Json cert = Json::parse(slurp(cert_path));
  cert["diagonal_coefficient"] = "-8";
  std::ofstream(tmp.file("bad.cert.json")) << canonical_dump(cert);
  std::string out;
  CHECK(run({"verify-cert", "--form", form_path, "--cert", tmp.file("bad.cert.json")}, &out) == 1);
  CHECK(Json::parse(out).at("valid") == false);
}

TEST_CASE("inconclusive refutation exits 2 with diagnostics") {
  TempDir tmp;
  std::string form_path = tmp.file("q4.json");
  REQUIRE(run({"build", "--id", "Q", "--n", "4", "--out", form_path}) == 0);
  std::string out;
  CHECK(run({"refute", "--in", form_path, "--builtin", "Q"}, &out) == 2);
  Json j = Json::parse(out);
  CHECK(j.at("result") == "inconclusive");
  CHECK(j.at("kernel_dim").get<int>() > 0);
}

TEST_CASE("refute accepts a user script file") {
  TempDir tmp;
  std::string form_path = tmp.file("rob.json");
  REQUIRE(run({"build", "--id", "Robinson", "--out", form_path}) == 0);
  Json script;
  script["target"] = Json::array({3, 0, 0});
  script["zero_orbits"] =
      Json::array({Json{{"slots", Json::array({"1", "1", "0"})}},
                   Json{{"slots", Json::array({"1", "1", "1"})}}});
  std::string script_path = tmp.file("script.json");
  std::ofstream(script_path) << canonical_dump(script);
  std::string out;
  CHECK(run({"refute", "--in", form_path, "--script", script_path}, &out) == 0);
  CHECK(Json::parse(out).contains("forced_zero_proof"));
}

TEST_CASE("identity suite via the CLI") {
  std::string out;
  CHECK(run({"verify-identities"}, &out) == 0);
  CHECK(Json::parse(out).at("all_pass") == true);
}

TEST_CASE("psd subcommand") {
  std::string out;
  CHECK(run({"psd", "--msextic", "1", "-5", "6", "5"}, &out) == 0);
  Json j = Json::parse(out);
  CHECK(j.at("psd") == true);
  CHECK(j.at("sos") == false);

  TempDir tmp;
  std::string path = tmp.file("l5.json");
  REQUIRE(run({"build", "--id", "L", "--m", "2", "--out", path}) == 0);
  CHECK(run({"psd", "--in", path, "--quartic-symmetric"}, &out) == 0);
  CHECK(Json::parse(out).at("status") == "proved-psd");
}

TEST_CASE("classification and chart output") {
  std::string out;
  CHECK(run({"classify", "--n", "4", "--deg", "8"}, &out) == 0);
  Json j = Json::parse(out);
  CHECK(j.at("answer") == "strict");
  CHECK(j.at("witness").at("kind") == "direct");

  CHECK(run({"classify", "--n", "3", "--deg", "8"}, &out) == 0);
  CHECK(Json::parse(out).at("answer") == "equal");

  CHECK(run({"chart", "--n-max", "4", "--deg-max", "8", "--format", "json"}, &out) == 0);
  CHECK(Json::parse(out).at("cells").size() == 4 * 3);
  CHECK(run({"chart", "--n-max", "4", "--deg-max", "8"}, &out) == 0);
  CHECK(out.find("deg") != std::string::npos);
}

TEST_CASE("jump subcommand") {
  TempDir tmp;
  std::string out_path = tmp.file("jumped.json");
  CHECK(run({"jump", "--seed-builtin", "Robinson", "--pq", "2", "--out", out_path}) == 0);
  Json j = Json::parse(slurp(out_path));
  CHECK(j.at("form").at("degree") == 14);
  CHECK(j.at("sos_status") == "proved-not-sos");

  CHECK(run({"jump", "--seed-builtin", "Robinson", "--allvars", "--out", out_path}) == 0);
  CHECK(Json::parse(slurp(out_path)).at("form").at("degree") == 12);
}

TEST_CASE("jump from a user form with a verified certificate") {
  TempDir tmp;
  std::string form_path = tmp.file("rob.json");
  std::string cert_path = tmp.file("rob.cert.json");
  REQUIRE(run({"build", "--id", "Robinson", "--out", form_path}) == 0);
  REQUIRE(run({"refute", "--in", form_path, "--builtin", "Robinson", "--out", cert_path}) == 0);
  std::string out_path = tmp.file("rob_jumped.json");
  CHECK(run({"jump", "--in", form_path, "--cert", cert_path, "--allvars", "--out", out_path}) == 0);
  CHECK(Json::parse(slurp(out_path)).at("form").at("degree") == 12);

  // A certificate for another form is rejected.
  std::string d4 = tmp.file("d4.json");
  REQUIRE(run({"build", "--id", "D", "--m", "2", "--out", d4}) == 0);
  std::string err;
  CHECK(run({"jump", "--in", d4, "--cert", cert_path, "--allvars"}, nullptr, &err) == 1);
  CHECK(err.find("does not verify") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  std::string err;
  CHECK(run({"build", "--id", "Nope"}, nullptr, &err) == 1);
  CHECK(run({"refute", "--in", "/nonexistent.json", "--builtin", "D"}, nullptr, &err) == 1);
  CHECK(run({"build", "--id", "L"}, nullptr, &err) == 1);  // missing --m
  CHECK(run({"frobnicate"}, nullptr, &err) == 1);
  CHECK(run({}, nullptr, &err) == 1);  // a subcommand is required

  std::string out;
  CHECK(run({"--help"}, &out) == 0);
  CHECK(out.find("build") != std::string::npos);
}
