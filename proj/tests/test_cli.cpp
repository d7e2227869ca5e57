#include "doctest.h"

#include "fixtures.hpp"
#include "ncspace/cli.hpp"

using namespace ncspace;
using namespace ncspace::cli;
using nlohmann::json;
using testutil::fixture_path;

namespace {
// minimal structural validation against docs/report.schema.json: the envelope
// has exactly these members with the right types
void check_schema(const json& rep) {
  REQUIRE(rep.is_object());
  REQUIRE(rep.size() == 5);
  CHECK(rep.at("command").is_string());
  CHECK(rep.at("version").is_string());
  CHECK((rep.at("input_digest").is_string() || rep.at("input_digest").is_null()));
  CHECK(rep.at("conventions").is_array());
  for (const auto& c : rep.at("conventions")) CHECK(c.is_string());
  CHECK(rep.at("results").is_object());
}
}  // namespace

TEST_CASE("cmd_validate: mu3 fixture is clean (exit 0)") {
  auto r = cmd_validate(fixture_path("mu3.ncs"));
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report);
  check_schema(rep);
  CHECK(rep["results"]["algebra"]["relations"] == 4);
  for (const auto& m : rep["results"]["modules"]) CHECK(m["valid"] == true);
}

TEST_CASE("cmd_validate: broken module names the violated relation (exit 3)") {
  auto r = cmd_validate(fixture_path("mu3_bad.ncs"));
  CHECK(r.exit_code == 3);
  json rep = json::parse(r.report);
  bool found = false;
  for (const auto& m : rep["results"]["modules"])
    if (m["valid"] == false)
      for (const auto& v : m["violations"])
        if (v.get<std::string>().find("g*x") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("cmd_validate: unparsable source exits 2") {
  std::string tmp = fixture_path("") + "/../build_tmp_empty.ncs";
  {
    std::ofstream out(tmp);
    out << "";
  }
  auto r = cmd_validate(tmp);
  CHECK(r.exit_code == 2);
  std::remove(tmp.c_str());
}

TEST_CASE("cmd_ext: dimensions in the report") {
  auto r = cmd_ext(fixture_path("quad_d2_p2.ncs"), "M3", "M3");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report);
  check_schema(rep);
  CHECK(rep["results"]["dim_ext1"] == 2);
  CHECK(rep["results"]["dim_hom"] == 2);
  CHECK(rep["results"]["cocycle_basis"].size() == 2);
  CHECK_THROWS_AS(cmd_ext(fixture_path("quad_d2_p2.ncs"), "M3", "Nope"), UnknownModule);
}

TEST_CASE("cmd_graph: wild family report with heights") {
  auto r = cmd_graph(fixture_path("quad_d2_p2.ncs"), {"M1", "M2", "M3"}, "single", "Q");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.report);
  check_schema(rep);
  CHECK(rep["results"]["ext1"] == json::parse("[[2,2,1],[2,2,1],[1,1,2]]"));
  CHECK(rep["results"]["nc_height"].get<double>() > 0.0);
  CHECK(r.dot.find("digraph tangent") == 0);
}

TEST_CASE("cmd_classify: axis family is one ramified fibre") {
  auto r = cmd_classify(fixture_path("mu3.ncs"), {"M1", "M2", "M3"}, {"r", "s", "t"});
  json rep = json::parse(r.report);
  check_schema(rep);
  REQUIRE(rep["results"]["fibres"].size() == 1);
  CHECK(rep["results"]["fibres"][0]["flag"] == "ramified");
  CHECK(rep["results"]["mueller_consistent"] == true);
}

TEST_CASE("cmd_height weil: worked examples") {
  auto r = cmd_height("weil", "Q", "4,6,2", "", "", false, "", 0, 0);
  json rep = json::parse(r.report);
  check_schema(rep);
  CHECK(rep["results"]["relative_height"].get<double>() == doctest::Approx(3.0));
  auto r2 = cmd_height("weil", "Qext x^2-2", "t,1", "", "", false, "", 0, 0);
  json rep2 = json::parse(r2.report);
  CHECK(rep2["results"]["absolute_height"].get<double>() ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
  CHECK_THROWS_AS(cmd_height("weil", "Q", "0,0", "", "", false, "", 0, 0), DegenerateInput);
}

TEST_CASE("cmd_height rep and total") {
  auto r = cmd_height("rep", "Q", "", "", "[[2]]", false, "", 0, 0);
  json rep = json::parse(r.report);
  CHECK(rep["results"]["h_rep"].get<double>() == doctest::Approx(-1.0));
  auto r2 = cmd_height("total", "Q", "", "", "", false, "4", -1.0, 4.0);
  json rep2 = json::parse(r2.report);
  CHECK(rep2["results"]["central"][0].get<double>() == doctest::Approx(4.0));
  CHECK(rep2["results"]["noncommutative"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("cmd_intersect: mu3 divisors and failure modes") {
  auto r = cmd_intersect("Q", {"r", "s", "t"},
                         "t^3 - r*s, r - 1, t - 1, s - 1",
                         "t^3 - r*s, r - 1, s - 1, t - 1", 9);
  json rep = json::parse(r.report);
  check_schema(rep);
  CHECK(rep["results"]["quotient_dimension"] == 1);
  CHECK(rep["results"]["intersection_number"] == 9);
  auto r2 = cmd_intersect("Q", {"r", "s", "t"}, "r - 1", "r - 2, s, t", 9);
  CHECK(json::parse(r2.report)["results"]["intersection_number"] == 0);
  CHECK_THROWS_AS(
      cmd_intersect("Q", {"r", "s", "t"}, "t^3 - r*s, s, t", "t^3 - r*s, s, t", 9),
      NotZeroDimensional);
}

TEST_CASE("reports are byte-identical across repeated in-process runs") {
  auto a = cmd_graph(fixture_path("mu3.ncs"), {"S1", "Sz", "Sz2"}, "single", "");
  auto b = cmd_graph(fixture_path("mu3.ncs"), {"S1", "Sz", "Sz2"}, "single", "");
  CHECK(a.report == b.report);
  CHECK(a.dot == b.dot);
  auto c = cmd_ext(fixture_path("mu3.ncs"), "M11", "M11");
  auto d = cmd_ext(fixture_path("mu3.ncs"), "M11", "M11");
  CHECK(c.report == d.report);
  // LF endings, no CR anywhere
  CHECK(a.report.find('\r') == std::string::npos);
}

TEST_CASE("input digest is stable and content-sensitive") {
  CHECK(fnv1a64("abc") == fnv1a64("abc"));
  CHECK(fnv1a64("abc") != fnv1a64("abd"));
  CHECK(fnv1a64("x").rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("golden reports: byte-for-byte stable across versions") {
  auto golden = [](const std::string& name) {
    return testutil::read_file(std::string(NCSPACE_GOLDEN_DIR) + "/" + name);
  };
  CHECK(cmd_ext(fixture_path("quad_d2_p2.ncs"), "M3", "M3").report ==
        golden("ext_wild_m3_m3.json"));
  CHECK(cmd_graph(fixture_path("quad_d3_p3.ncs"), {"M1", "M2", "M3"}, "single", "Q").report ==
        golden("graph_tame.json"));
  CHECK(cmd_height("weil", "Qext x^2-2", "t,1", "", "", false, "", 0, 0).report ==
        golden("height_weil_sqrt2.json"));
  CHECK(cmd_classify(fixture_path("mu3.ncs"), {"M11", "Mzz"}, {"r", "s", "t"}).report ==
        golden("classify_two_fibres.json"));
}

TEST_CASE("graph report honors product height mode") {
  auto r = cmd_graph(fixture_path("mu3.ncs"), {"S1", "Sz", "Sz2"}, "product", "");
  json rep = json::parse(r.report);
  // max eigenvalue 2, two embeddings of Q(zeta3): 2^2 = 4
  CHECK(rep["results"]["nc_height"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
  auto rs = cmd_graph(fixture_path("mu3.ncs"), {"S1", "Sz", "Sz2"}, "single", "");
  CHECK(json::parse(rs.report)["results"]["nc_height"].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-9));
}
