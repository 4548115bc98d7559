#include "thetaconn/catalog.hpp"
#include "thetaconn/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace thetaconn;

TEST_CASE("JobSpec round-trips through its config serialization") {
  JobSpec j;
  j.series = 'A';
  j.rank = 4;
  j.sigma_perm = {3, 2, 1, 0};
  j.kac = {1, 0, 0};
  j.sampled = true;
  j.predicate = Predicate::Stable;
  j.seed = 11;
  j.truncation = 16;
  j.format = "text";
  std::map<std::string, std::string> kv;
  for (const std::string& line : detail::split(j.to_config(), '\n')) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    kv[detail::trim(line.substr(0, eq))] = detail::trim(line.substr(eq + 1));
  }
  JobSpec back = JobSpec::from_kv(kv);
  CHECK(back.series == j.series);
  CHECK(back.rank == j.rank);
  CHECK(back.sigma_perm == j.sigma_perm);
  CHECK(back.kac == j.kac);
  CHECK(back.sampled == j.sampled);
  CHECK(back.predicate == j.predicate);
  CHECK(back.seed == j.seed);
  CHECK(back.truncation == j.truncation);
  CHECK(back.format == j.format);
  CHECK(back.to_config() == j.to_config());

  JobSpec e;
  e.series = 'G';
  e.rank = 2;
  e.kac = {1, 1, 0};
  e.sampled = false;
  e.vector_coords = {Rat(1), Rat(-2), Rat(1, 2), Rat(0), Rat(3)};
  std::map<std::string, std::string> kv2;
  for (const std::string& line : detail::split(e.to_config(), '\n')) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    kv2[detail::trim(line.substr(0, eq))] = detail::trim(line.substr(eq + 1));
  }
  CHECK(JobSpec::from_kv(kv2).to_config() == e.to_config());
}

TEST_CASE("named examples produce the expected headline numbers") {
  ReportDocument g2 = run_analysis(example_job("g2-subregular"));
  CHECK(g2.grading->m == 3);
  CHECK(g2.local.h1.value() == 0);
  CHECK(g2.local.verdict.rigid.value());
  CHECK(g2.local.orbit_checks.dim_centralizer_sigma_x1 == 4);
  CHECK(*g2.local.slope == Rat(1, 3));

  ReportDocument a2 = run_analysis(example_job("2a2n:1"));
  CHECK(a2.grading->m == 2);
  CHECK(*a2.local.slope == Rat(1));
  CHECK(vec_is_zero(a2.local.residue));
  CHECK(a2.local.h1.value() == 0);

  ReportDocument fg = run_analysis(example_job("frenkel-gross:G2"));
  CHECK(*fg.local.slope == Rat(1, 6));
  CHECK(fg.local.h1.value() == 0);
  CHECK(fg.local.residue_nilpotent);
  CHECK(!vec_is_zero(fg.local.residue));

  CHECK_THROWS_AS(example_job("no-such-example"), InputError);
  CHECK_THROWS_AS(example_job("2a2n:9"), InputError);
}

TEST_CASE("reports are deterministic apart from timing") {
  JobSpec j = example_job("g2-subregular");
  Json a = run_analysis(j).to_json();
  Json b = run_analysis(j).to_json();
  a["timing_ms"] = 0;
  b["timing_ms"] = 0;
  CHECK(a.dump(2) == b.dump(2));
}

TEST_CASE("json report carries the schema and the exact strings") {
  ReportDocument doc = run_analysis(example_job("g2-subregular"));
  Json out = doc.to_json();
  CHECK(out["schema"] == 1);
  CHECK(out["version"] == std::string(kToolVersion));
  CHECK(out["grading"]["m"] == 3);
  CHECK(out["local"]["slope"] == "1/3");
  CHECK(out["local"]["irregularity"] == "4");
  CHECK(out["local"]["h1"] == 0);
  CHECK(out["local"]["rigid"] == true);
  CHECK(out["job"]["vector"]["seed"] == 7);
  // rationals are strings end to end; no floats anywhere
  CHECK(out["grading"]["lambda_check"].is_array());
  for (const auto& v : out["grading"]["lambda_check"]) CHECK(v.is_string());
}

TEST_CASE("text report renders the headline lines") {
  ReportDocument doc = run_analysis(example_job("2a2n:1"));
  std::string text = doc.to_text();
  CHECK(text.find("slope") != std::string::npos);
  CHECK(text.find("cohomologically rigid") != std::string::npos);
  CHECK(text.find("yes") != std::string::npos);
}

TEST_CASE("catalog lists the shipped gradings deterministically") {
  auto rows = catalog_rows();
  bool saw_g2 = false, saw_2a2 = false;
  for (const auto& r : rows) {
    if (r.name == "g2-subregular") {
      saw_g2 = true;
      CHECK(r.m == 3);
      CHECK(r.stable);
    }
    if (r.name == "2a2n:1") {
      saw_2a2 = true;
      CHECK(r.m == 2);
      CHECK(r.sigma_order == 2);
      CHECK(r.stable);
    }
  }
  CHECK(saw_g2);
  CHECK(saw_2a2);
  auto rows2 = catalog_rows();
  REQUIRE(rows.size() == rows2.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].name == rows2[i].name);
    CHECK(rows[i].m == rows2[i].m);
    CHECK(rows[i].stable == rows2[i].stable);
  }
}

TEST_CASE("explicit vector jobs validate their length") {
  JobSpec j;
  j.series = 'A';
  j.rank = 1;
  j.kac = {1, 1};
  j.sampled = false;
  j.vector_coords = {Rat(1)};  // g_1 has dimension 2
  CHECK_THROWS_AS(run_analysis(j), InputError);
}

TEST_CASE("verification suites pass on the shipped gradings") {
  auto g2 = build_grading(example_job("g2-subregular"));
  for (const auto& c : run_suite(*g2, "all", 5, 0, false)) {
    INFO(c.name << " " << c.counterexample);
    CHECK(c.pass);
  }
  auto a2 = build_grading(example_job("2a2n:1"));
  for (const auto& c : run_suite(*a2, "all", 5, 0, true)) {
    INFO(c.name << " " << c.counterexample);
    CHECK(c.pass);
  }
  // trivial grading (m = 1): the grading-sum and bound checks still pass
  JobSpec trivial;
  trivial.series = 'A';
  trivial.rank = 2;
  trivial.kac = {1, 0, 0};
  auto gt = build_grading(trivial);
  REQUIRE(gt->m == 1);
  for (const auto& c : run_suite(*gt, "gradings", 5, 0, false)) {
    INFO(c.name << " " << c.counterexample);
    CHECK(c.pass);
  }
  CHECK_THROWS_AS(run_suite(*g2, "bogus", 1, 0, false), InputError);
}
