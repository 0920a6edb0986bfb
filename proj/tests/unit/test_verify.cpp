#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>

#include "brtk/error.hpp"
#include "brtk/verify/suites.hpp"

using namespace brtk;

TEST_CASE("report records keep their invariants", "[verify]") {
  VerificationReport r("demo", 3);
  r.pass("demo", "b", "x");
  r.check(false, false, "demo", "a", "y", "observed");
  r.skip("demo", "a", "x", "too big");
  CHECK_THROWS_AS(r.fail("demo", "a", "x", ""), ValidationError);
  CHECK_THROWS_AS(r.skip("demo", "a", "x", ""), ValidationError);
  CHECK_THROWS_AS(r.check(false, true, "demo", "a", "x", ""), ValidationError);
  CHECK(r.ok());
  r.check(false, true, "demo", "a", "z", "w");
  CHECK_FALSE(r.ok());

  r.sort();
  auto const& recs = r.records();
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].tag == "a");
  CHECK(recs[0].instance == "x");
  CHECK(recs.back().tag == "b");

  auto const s = r.summary();
  CHECK(s.checks == 4);
  CHECK(s.pass == 1);
  CHECK(s.fail == 1);
  CHECK(s.hypothesis_not_met == 1);
  CHECK(s.skipped == 1);
  CHECK(s.instances == 3);
}

TEST_CASE("records format is one JSON object per line plus a footer", "[verify]") {
  VerificationReport r("demo", 9);
  r.fail("demo", "t", "i", "at (0, 1)");
  r.skip("demo", "t", "j", "budget exceeded");
  r.pass("demo", "t", "k");
  r.sort();
  std::istringstream in(r.format(ReportFormat::records));
  std::vector<nlohmann::json> lines;
  for (std::string line; std::getline(in, line);) {
    lines.push_back(nlohmann::json::parse(line));
  }
  REQUIRE(lines.size() == 4);
  CHECK(lines[0]["witness"] == "at (0, 1)");
  CHECK(lines[1]["reason"] == "budget exceeded");
  CHECK_FALSE(lines[2].contains("note"));
  CHECK(lines[3]["summary"]["seed"] == 9);
  CHECK(lines[3]["summary"]["fail"] == 1);
  CHECK(lines[3]["summary"]["checks"] == 3);

  auto const text = r.format(ReportFormat::text);
  CHECK(text.find("fail  demo  t  i  | at (0, 1)") != std::string::npos);
  CHECK(text.find("summary: 3 checks over 3 instances") != std::string::npos);
}

TEST_CASE("merge then sort does not depend on the order of parts", "[verify]") {
  VerificationReport a("a", 1), b("b", 1);
  a.pass("a", "t", "2");
  a.pass("a", "t", "1");
  b.skip("b", "t", "1", "r");
  VerificationReport ab("all", 1), ba("all", 1);
  ab.merge(a);
  ab.merge(b);
  ba.merge(b);
  ba.merge(a);
  ab.sort();
  ba.sort();
  CHECK(ab.format(ReportFormat::records) == ba.format(ReportFormat::records));
}

TEST_CASE("config parsing", "[verify]") {
  auto const c = parse_config(R"({"seed": 7, "budget": 100, "explore_non_monoid": false})");
  CHECK(c.seed == 7);
  CHECK(c.budget == 100);
  CHECK_FALSE(c.explore_non_monoid);
  CHECK(c.topology_max_points == VerifyConfig{}.topology_max_points);

  CHECK(parse_config(format_config(c)).seed == 7);
  CHECK(format_config(parse_config(format_config(c))) == format_config(c));

  CHECK_THROWS_AS(parse_config("{\"sed\": 1}"), ValidationError);
  CHECK_THROWS_AS(parse_config("{\"seed\": -1}"), ValidationError);
  CHECK_THROWS_AS(parse_config("{\"seed\": 1.5}"), ValidationError);
  CHECK_THROWS_AS(parse_config("{\"explore_non_monoid\": 1}"), ValidationError);
  CHECK_THROWS_AS(parse_config("{\"discrete_max_points\": 5}"), ValidationError);
  CHECK_THROWS_AS(parse_config("[1]"), ValidationError);
  CHECK_THROWS_AS(parse_config("{"), ValidationError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ValidationError);
}

TEST_CASE("suites", "[verify]") {
  auto const& names = suite_names();
  CHECK(names.back() == "all");
  CHECK(std::find(names.begin(), names.end(), "topology-3-8") != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), ValidationError);

  VerifyConfig small;
  small.seed = 5;
  for (auto const& name : names) {
    if (name == "all") {
      continue;
    }
    DYNAMIC_SECTION(name) {
      auto const r = run_suite(name, small);
      CHECK(r.ok());
      CHECK(r.summary().pass > 0);
      for (auto const& rec : r.records()) {
        CHECK(rec.suite == name);
      }
      CHECK(r.format(ReportFormat::records) == run_suite(name, small).format(ReportFormat::records));
    }
  }
}

TEST_CASE("the seed changes the sampled instances", "[verify]") {
  VerifyConfig a, b;
  a.seed = 1;
  b.seed = 2;
  auto const ra = run_suite("topology-3-14", a);
  auto const rb = run_suite("topology-3-14", b);
  CHECK(ra.records() != rb.records());
  CHECK(ra.summary().checks > 0);
}

TEST_CASE("a tight budget marks instances skipped", "[verify]") {
  VerifyConfig c;
  c.budget = 1;
  auto const r = run_suite("exel", c);
  CHECK(r.summary().skipped > 0);
  for (auto const& rec : r.records()) {
    if (rec.status == Status::skipped) {
      CHECK(rec.detail.find("budget") != std::string::npos);
    }
  }
}
