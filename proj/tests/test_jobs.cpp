#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vvmf/jobs.hpp"
#include "vvmf/json_io.hpp"

using namespace vvmf;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path fixture_dir() { return std::filesystem::path(VVMF_FIXTURE_DIR); }

}  // namespace

TEST_CASE("golden replay: every fundamental-data fixture validates") {
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir())) {
    std::string name = entry.path().filename().string();
    if (name.rfind("rep_", 0) == 0 || name.rfind("invert_", 0) == 0) continue;
    CAPTURE(name);
    JobResult res = run_job("validate", slurp(entry.path()), "{}");
    CHECK(res.status == 0);
  }
}

TEST_CASE("golden replay: modular representation fixtures") {
  // rep_kappa3 fails the positivity test (S = -1), everything else passes
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir())) {
    std::string name = entry.path().filename().string();
    if (name.rfind("rep_", 0) != 0) continue;
    CAPTURE(name);
    JobResult res = run_job("rep-audit", slurp(entry.path()), "{}");
    if (name == "rep_kappa3.json")
      CHECK(res.status == 1);
    else
      CHECK(res.status == 0);
  }
}

TEST_CASE("golden replay: inversion example") {
  JobResult res = run_job("invert", slurp(fixture_dir() / "invert_e7.json"), "{\"order\": 8}");
  CHECK(res.status == 0);
  Json rpt = Json::parse(res.report_json);
  CHECK(rpt.at("results").at("components").size() == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  std::string input = slurp(fixture_dir() / "e7.json");
  JobResult a = run_job("expand", input, "{\"order\": 6}");
  JobResult b = run_job("expand", input, "{\"order\": 6}");
  CHECK(a.status == 0);
  CHECK(a.report_json == b.report_json);
  JobResult c = run_job("det-check", input, "{\"order\": 12}");
  JobResult d = run_job("det-check", input, "{\"order\": 12}");
  CHECK(c.report_json == d.report_json);
}

TEST_CASE("expand reproduces the printed coefficients through the CLI path") {
  std::string input = slurp(fixture_dir() / "e7.json");
  JobResult res = run_job("expand", input, "{\"order\": 2}");
  REQUIRE(res.status == 0);
  Json rpt = Json::parse(res.report_json);
  const Json& psi = rpt.at("results").at("fundamental").at("psi");
  // entry (0,0): offset lambda_0 - 1 = -7/24, coefficients 1, 133, 1673
  CHECK(psi.at(0).at(0).at("offset") == "-7/24");
  CHECK(psi.at(0).at(0).at("coeffs") == Json::array({"1", "133", "1673"}));
  CHECK(psi.at(1).at(1).at("coeffs") == Json::array({"1", "-377", "-22126"}));
  CHECK(psi.at(0).at(1).at("coeffs") == Json::array({"1248", "49504"}));
  CHECK(psi.at(1).at(0).at("coeffs") == Json::array({"56", "968"}));
}

TEST_CASE("serialization round trips") {
  // series
  SeriesQ eta = dedekind_eta(12);
  SeriesQ back = series_from_json(series_to_json(eta));
  CHECK(back.base() == eta.base());
  CHECK(back.coeff_count() == eta.coeff_count());
  CHECK(agree_through(back, eta, Rational(11)));
  SeriesQ zero = SeriesQ::zero_through(Rational(7, 2));
  SeriesQ zback = series_from_json(series_to_json(zero));
  CHECK(zback.is_zero());
  CHECK(*zback.frontier() == Rational(7, 2));

  // representation data with a cyclotomic S
  Json j = repdata_to_json(repdata_from_json(Json::parse(slurp(fixture_dir() / "ising_k4.json"))));
  RepData r = repdata_from_json(j);
  CHECK(r.lambda == repdata_from_json(j).lambda);
  CHECK(repdata_to_json(r) == j);

  // modular representation
  Json m = modrep_to_json(modrep_from_json(Json::parse(slurp(fixture_dir() / "rep_e7.json"))));
  CHECK(modrep_to_json(modrep_from_json(m)) == m);

  // principal parts accumulate duplicate keys and drop zeros
  Json pp = Json::parse(R"({"terms": [
    {"component": 0, "order": 2, "coeff": "1/2"},
    {"component": 0, "order": 2, "coeff": "1/2"},
    {"component": 1, "order": 1, "coeff": "0"}]})");
  PrincipalPart p = principal_part_from_json(pp);
  CHECK(p.terms.size() == 1);
  CHECK(p.terms.at({0, 2}) == Rational(1));
}

TEST_CASE("job statuses") {
  CHECK(run_job("validate", "{not json", "{}").status == 2);
  CHECK(run_job("nonsense-command", "{}", "{}").status == 2);
  // spectral failure is a precondition error for expand
  Json bad = Json::parse(slurp(fixture_dir() / "e7.json"));
  bad["X"][0][0] = "134";
  CHECK(run_job("expand", bad.dump(), "{}").status == 3);
  // but validate reports it as a failing check
  CHECK(run_job("validate", bad.dump(), "{}").status == 1);
  // missing required option
  CHECK(run_job("dims", slurp(fixture_dir() / "rep_trivial.json"), "{}").status == 3);
  CHECK(run_job("shift", slurp(fixture_dir() / "e7.json"), "{}").status == 3);
}

TEST_CASE("parser rejections") {
  CHECK(run_job("validate", R"({"lambda": ["1/2"], "X": [["1"], ["2"]]})", "{}").status == 2);
  CHECK(run_job("rep-audit", R"({"conductor": 0, "S": [["1"]], "T_diag": ["1"]})", "{}").status == 2);
  CHECK(run_job("dims", slurp(fixture_dir() / "rep_trivial.json"), R"({"weight": "1/3"})").status == 3);
  CHECK(run_job("invert", R"({"rep": {"lambda": ["1"], "X": [["0"]]},
    "principal_part": {"terms": [{"component": 0, "order": 0, "coeff": "1"}]}})", "{}").status == 2);
  CHECK(run_job("gf-check", slurp(fixture_dir() / "e7.json"), R"({"bi_order": [3]})").status == 2);
}

TEST_CASE("order cap from the environment") {
  setenv("VVMF_MAX_ORDER", "5", 1);
  std::string input = slurp(fixture_dir() / "e7.json");
  CHECK(run_job("expand", input, "{\"order\": 50}").status == 3);
  CHECK(run_job("expand", input, "{\"order\": 4}").status == 0);
  unsetenv("VVMF_MAX_ORDER");
}

TEST_CASE("dims and form-basis commands") {
  std::string triv = slurp(fixture_dir() / "rep_trivial.json");
  JobResult res = run_job("dims", triv, "{\"weight\": \"12\"}");
  REQUIRE(res.status == 0);
  Json rpt = Json::parse(res.report_json);
  CHECK(rpt.at("results").at("dim_forms") == 2);
  CHECK(rpt.at("results").at("dim_cusp") == 1);

  JobResult fb = run_job("form-basis", triv, "{\"weight\": \"12\", \"order\": 8}");
  REQUIRE(fb.status == 0);
  Json jb = Json::parse(fb.report_json);
  CHECK(jb.at("results").at("basis").size() == 2);

  // half-integer weight parses
  JobResult hw = run_job("dims", triv, "{\"weight\": \"7/2\"}");
  CHECK(hw.status == 1);  // not a genuine PSL2 representation: trivial space
}

TEST_CASE("invert with an empty principal part returns the zero vector") {
  Json job{{"rep", Json::parse(slurp(fixture_dir() / "e7.json"))},
           {"principal_part", Json{{"terms", Json::array()}}}};
  JobResult res = run_job("invert", job.dump(), "{\"order\": 6}");
  REQUIRE(res.status == 0);
  Json rpt = Json::parse(res.report_json);
  for (const auto& comp : rpt.at("results").at("components"))
    CHECK(comp.at("coeffs").empty());
}

TEST_CASE("blockwise trace relation through the job runner") {
  // direct sum of E7 and A1, validated per block
  RepData sum = direct_sum(repdata_from_json(Json::parse(slurp(fixture_dir() / "e7.json"))),
                           repdata_from_json(Json::parse(slurp(fixture_dir() / "a1.json"))));
  std::string input = repdata_to_json(sum).dump();
  JobResult res = run_job("validate", input, "{\"block\": [[0,1],[2,3]]}");
  CHECK(res.status == 0);
  Json rpt = Json::parse(res.report_json);
  bool saw_blocks = false;
  for (const auto& c : rpt.at("checks"))
    if (c.at("check").get<std::string>().find("block1") != std::string::npos) saw_blocks = true;
  CHECK(saw_blocks);
}

TEST_CASE("dual and shift and gf-check jobs") {
  std::string kappa = slurp(fixture_dir() / "table1_kappa.json");
  JobResult res = run_job("dual", kappa, "{\"order\": 8}");
  REQUIRE(res.status == 0);
  Json rpt = Json::parse(res.report_json);
  CHECK(rpt.at("results").at("dual").at("lambda") == Json::array({"1"}));
  CHECK(rpt.at("results").at("dual").at("X") == Json::array({Json::array({"0"})}));

  std::string e7 = slurp(fixture_dir() / "e7.json");
  JobResult sh = run_job("shift", e7, "{\"order\": 8, \"i\": 0, \"j\": 1}");
  REQUIRE(sh.status == 0);
  Json shr = Json::parse(sh.report_json);
  CHECK(shr.at("results").at("shifted").at("lambda") == Json::array({"41/24", "-13/24"}));

  JobResult gf = run_job("gf-check", e7, "{\"bi_order\": [4, 4]}");
  CHECK(gf.status == 0);

  JobResult basis = run_job("basis", e7, "{\"order\": 6, \"max_pole\": 3}");
  CHECK(basis.status == 0);

  JobResult reduce = run_job("reduce", slurp(fixture_dir() / "rep_ising.json"), "{}");
  CHECK(reduce.status == 0);
}
