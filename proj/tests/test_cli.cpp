#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"
#include "vop/catalog.hpp"
#include "vop/report.hpp"

using namespace vop;
using namespace vop::testutil;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / ("vop_cli_out_" + std::to_string(++counter));
  const fs::path err = dir / ("vop_cli_err_" + std::to_string(counter));
  const std::string cmd = std::string(VOP_CLI_BINARY) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int rc = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WEXITSTATUS(rc);
  res.out = slurp(out);
  res.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return res;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

}  // namespace

TEST_CASE("generate hermite emits the family JSON") {
  CliResult r = run_cli("generate --catalog hermite --max-n 10 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = report::json::parse(r.out);
  CHECK(j["spec"]["name"] == "hermite");
  CHECK(j["polynomials"][3]["monomial"] ==
        report::json::array({"0", "-3", "0", "1"}));
  CHECK(j["polynomials"].size() == 11);
}

TEST_CASE("generate with max-n 0 emits the single constant polynomial") {
  CliResult r = run_cli("generate --catalog hermite --max-n 0");
  REQUIRE(r.exit_code == 0);
  auto j = report::json::parse(r.out);
  CHECK(j["polynomials"].size() == 1);
  CHECK(j["polynomials"][0]["monomial"] == report::json::array({"1"}));
}

TEST_CASE("invalid spec file: nonzero q constant term exits 2") {
  const fs::path bad = write_temp("vop_bad_spec.json",
                                  R"({"realization":"continuous","R":["1"],)"
                                  R"("q":["1","1"],"max_n":5,"name":"bad"})");
  CliResult r = run_cli("generate --spec " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("q must have zero constant term") != std::string::npos);
  auto j = report::json::parse(r.err);
  CHECK(j["error"]["code"] == "InvalidSpec");
  fs::remove(bad);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("generate").exit_code == 2);  // no source
  CHECK(run_cli("generate --catalog hermite --spec x.json").exit_code == 2);
  CHECK(run_cli("generate --catalog nope").exit_code == 2);
  CHECK(run_cli("generate --catalog hermite --param zeta=1").exit_code == 2);
  CHECK(run_cli("verify --catalog hermite --checks nosuch").exit_code == 2);
  CHECK(run_cli("verify --catalog charlier --checks mellin").exit_code == 2);
  CHECK(run_cli("verify --catalog hermite --checks closed-form").exit_code == 2);
  CHECK(run_cli("transform --catalog charlier").exit_code == 2);
}

TEST_CASE("internal arithmetic alarms exit 3") {
  // ex3_2's offset-5 coefficient has degree 15 in n; at max-n 20 the fit is
  // under-sampled and the holdout alarm fires
  CliResult r = run_cli("recurrence --catalog ex3_2 --max-n 20");
  CHECK(r.exit_code == 3);
  auto j = report::json::parse(r.err);
  CHECK(j["error"]["code"] == "FitMismatch");
}

TEST_CASE("output is byte-deterministic, including under --jobs") {
  CliResult a = run_cli("generate --catalog ex2_2 --max-n 14");
  CliResult b = run_cli("generate --catalog ex2_2 --max-n 14");
  CliResult c = run_cli("generate --catalog ex2_2 --max-n 14 --jobs 3");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("verification failure exits 1: kravchuk degenerates at its cap") {
  // gamma_0(n) = N - n vanishes at n = N, so the nonvanishing check is an
  // honest failure at the boundary of the finite family
  CliResult r = run_cli("verify --catalog kravchuk --checks bandwidth --format text");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify hermite passes every check") {
  CliResult r = run_cli("verify --catalog hermite --max-n 15 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = report::json::parse(r.out);
  CHECK(j["passed"] == true);
  // L is emitted in operator JSON form
  CHECK(j["operators"]["L"]["realization"] == "differential");
  bool saw_eigen = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "eigen") {
      saw_eigen = true;
      CHECK(c["passed"] == true);
    }
  CHECK(saw_eigen);
}

TEST_CASE("recurrence csv snapshot for hermite") {
  CliResult r = run_cli("recurrence --catalog hermite --max-n 5 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out ==
        "n,j,gamma\n"
        "1,1,1\n"
        "2,1,2\n"
        "3,1,3\n"
        "4,1,4\n");
}

TEST_CASE("recurrence latex and json forms") {
  CliResult latex = run_cli("recurrence --catalog hermite --max-n 12 --format latex");
  REQUIRE(latex.exit_code == 0);
  CHECK(latex.out.find("x P_{n} = P_{n+1}") != std::string::npos);
  CHECK(latex.out.find("P_{n-1}") != std::string::npos);

  CliResult j = run_cli("recurrence --catalog laguerre --max-n 12");
  REQUIRE(j.exit_code == 0);
  auto parsed = report::json::parse(j.out);
  CHECK(parsed["d"] == 1);
  CHECK(parsed["bandwidth"] == 3);
  CHECK(parsed["gamma"][0]["poly_in_n"] == report::json::array({"1", "2"}));
  CHECK(parsed["gamma"][1]["poly_in_n"] == report::json::array({"0", "0", "1"}));
}

TEST_CASE("catalog list and show") {
  CliResult list = run_cli("catalog list --format json");
  REQUIRE(list.exit_code == 0);
  auto j = report::json::parse(list.out);
  bool has_hermite = false;
  for (const auto& p : j)
    if (p["name"] == "hermite") has_hermite = true;
  CHECK(has_hermite);
  CHECK(j.size() == catalog::presets().size());

  CliResult show = run_cli("catalog show meixner");
  REQUIRE(show.exit_code == 0);
  auto s = report::json::parse(show.out);
  CHECK(s["spec"]["realization"] == "discrete");
  // the emitted spec JSON round-trips through the loader
  FamilySpec loaded = report::spec_from_json(s["spec"]);
  CHECK(loaded.R == catalog::instantiate("meixner").R);
}

TEST_CASE("spec file route matches the catalog route") {
  CliResult show = run_cli("catalog show laguerre");
  REQUIRE(show.exit_code == 0);
  auto s = report::json::parse(show.out);
  const fs::path specfile = write_temp("vop_spec_roundtrip.json", s["spec"].dump());
  CliResult from_file = run_cli("generate --spec " + specfile.string() + " --max-n 8");
  CliResult from_catalog = run_cli("generate --catalog laguerre --max-n 8");
  REQUIRE(from_file.exit_code == 0);
  CHECK(from_file.out == from_catalog.out);
  fs::remove(specfile);
}

TEST_CASE("transform emits both families and per-index verdicts") {
  CliResult r = run_cli("transform --catalog hermite --max-n 10");
  REQUIRE(r.exit_code == 0);
  auto j = report::json::parse(r.out);
  CHECK(j["continuous"]["spec"]["realization"] == "continuous");
  CHECK(j["discrete"]["spec"]["realization"] == "discrete");
  REQUIRE(j["correspondence"].size() == 11);
  for (const auto& v : j["correspondence"]) CHECK(v["match"] == true);
}

TEST_CASE("--out writes the payload to a file") {
  const fs::path target = fs::temp_directory_path() / "vop_out_test.json";
  CliResult r = run_cli("generate --catalog hermite --max-n 3 --out " + target.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  auto j = report::json::parse(slurp(target));
  CHECK(j["polynomials"].size() == 4);
  fs::remove(target);
}

TEST_CASE("report helpers round-trip specs and reject malformed input") {
  FamilySpec s = catalog::instantiate("m2");
  auto j = report::spec_to_json(s);
  FamilySpec back = report::spec_from_json(j);
  CHECK(back.R == s.R);
  CHECK(back.q == s.q);
  CHECK(back.max_n == s.max_n);
  CHECK(back.realization == s.realization);

  CHECK_THROWS_AS(report::spec_from_json(report::json::parse(R"({"realization":"x"})")),
                  InvalidSpec);
  CHECK_THROWS_AS(
      report::poly_from_json(report::json::parse(R"(["0.5"])"), "R"),
      InvalidSpec);  // floats are rejected, rationals are strings like "1/2"
}

TEST_CASE("rationals in JSON are exact strings") {
  CliResult r = run_cli("generate --catalog laguerre --param alpha=1/2 --max-n 4");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"-3/2\"") != std::string::npos);  // P_1 = x - 3/2
  CHECK(r.out.find("0.5") == std::string::npos);
}
