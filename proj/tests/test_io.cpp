#include "doctest.h"
#include "nakayama/io.hpp"

using namespace nakayama;

namespace {

Algebra alg(std::vector<int> c) {
  const int n = static_cast<int>(c.size());
  return validate_kupisch(n, std::move(c));
}

}  // namespace

TEST_CASE("kupisch text round-trip") {
  const Algebra a = parse_kupisch_text("3,4,3,3,2");
  CHECK(a == alg({3, 4, 3, 3, 2}));
  CHECK(format_kupisch(a.kupisch()) == "3,4,3,3,2");
  CHECK_THROWS_AS(parse_kupisch_text("3,x,2"), Error);
  CHECK_THROWS_AS(parse_kupisch_text("3,1,2"), TooShort);
}

TEST_CASE("relations text round-trip") {
  const Algebra a = parse_relations_text("n=5;1:3,3:3,5:2");
  CHECK(a == alg({3, 4, 3, 3, 2}));
  CHECK(format_relations(relations_from_kupisch(a)) == "n=5;1:3,3:3,5:2");
  CHECK_THROWS_AS(parse_relations_text("5;1:3"), Error);
  CHECK_THROWS_AS(parse_relations_text("n=3;1:3,2:2"), InconsistentRelations);
}

TEST_CASE("module text parsing and factor rendering") {
  const Algebra a = alg({6, 7, 6, 7, 6});
  const UniserialModule m = parse_module_text(a, "top=2,len=7");
  CHECK(m == UniserialModule{2, 7});
  CHECK(format_factors(a, m) == "[2,3,4,5,1,2,3]");
  CHECK_THROWS_AS(parse_module_text(a, "top=2"), Error);
  CHECK_THROWS_AS(parse_module_text(a, "top=2,len=9"), InvalidLength);
}

TEST_CASE("invariants_json has the stable schema") {
  const nlohmann::json j = invariants_json(alg({3, 4, 3, 3, 2}));
  const std::vector<std::string> keys = {
      "kupisch",  "rank",    "selfinjective", "relations",      "gldim",
      "findim",   "phi_dim", "del",           "del_per_simple", "op_kupisch",
      "findim_op", "del_op", "delta_blocks",  "epsilon_kupisch"};
  CHECK(j.size() == keys.size());
  for (const std::string& key : keys) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }

  // Round-trip the values back out of the JSON and compare with the library.
  CHECK(j["kupisch"].get<std::vector<int>>() == std::vector<int>{3, 4, 3, 3, 2});
  CHECK(j["rank"] == 5);
  CHECK(j["selfinjective"] == false);
  CHECK(j["gldim"] == "inf");
  CHECK(j["findim"] == 1);
  CHECK(j["phi_dim"] == 2);
  CHECK(j["del"] == 1);
  CHECK(j["del_per_simple"].get<std::vector<nlohmann::json>>().size() == 5);
  CHECK(j["delta_blocks"].dump() == "[[1,1],[2,2],[4,2]]");
  CHECK(j["epsilon_kupisch"].get<std::vector<int>>() == std::vector<int>{2, 2, 2});
  CHECK(j["relations"].dump() == "[[1,3],[3,3],[5,2]]");
}

TEST_CASE("invariants_json encodes infinities as the string inf") {
  const nlohmann::json j = invariants_json(alg({2, 2}));
  CHECK(j["gldim"] == "inf");
  CHECK(j["selfinjective"] == true);
  CHECK(j["findim"] == 0);
  CHECK(j["phi_dim"] == 0);
  CHECK(j["del"] == 0);
  CHECK(j["epsilon_kupisch"].is_null());
  const nlohmann::json finite = invariants_json(alg({3, 2, 2}));
  CHECK(finite["gldim"] == 3);
}

TEST_CASE("sweep serialization") {
  const SweepReport report =
      sweep({2, 2, 3, true}, {kAllChecks.begin(), kAllChecks.end()}, 1);
  const nlohmann::json j = sweep_json(report);
  CHECK(j["algebra_count"] == 3);
  CHECK(j["failures"].empty());
  CHECK(j["spec"]["rank_min"] == 2);
  CHECK(j["totals"]["THM_MAIN"]["pass"] == 3);
  CHECK(j["histograms"].contains("findim"));
  // Wall time is deliberately absent: reports must be byte-stable.
  CHECK_FALSE(j.contains("wall_seconds"));

  const std::string csv = sweep_csv(report);
  CHECK(csv.rfind("canonical_kupisch,rank,gldim,findim,del,phi,findim_op,del_op,"
                  "eps_kupisch,failed_checks\n", 0) == 0);
  // One line per algebra plus the header.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find("\"2,2\",2,inf,0,0,0,0,0,,") != std::string::npos);
}

TEST_CASE("failures render with their witnesses") {
  // No algebra in the corpus fails a check, so exercise the rendering path
  // with a synthetic report.
  SweepReport report;
  report.spec = {2, 2, 3, true};
  report.checks = {CheckId::ThmMain};
  report.algebra_count = 1;
  report.totals[CheckId::ThmMain] = {0, 1, 0};
  report.failures.push_back({{2, 3}, CheckId::ThmMain, "findim=1 del=2"});
  AlgebraRow row;
  row.kupisch = {2, 3};
  row.rank = 2;
  row.gldim = Dim(2);
  row.findim = 2;
  row.del = Dim(2);
  row.phi = 2;
  row.findim_op = 2;
  row.del_op = Dim(2);
  row.failed = {CheckId::ThmMain};
  report.rows.push_back(row);

  const nlohmann::json j = sweep_json(report);
  REQUIRE(j["failures"].size() == 1);
  CHECK(j["failures"][0]["check"] == "THM_MAIN");
  CHECK(j["failures"][0]["kupisch"].get<std::vector<int>>() == std::vector<int>{2, 3});
  CHECK(j["failures"][0]["payload"] == "findim=1 del=2");
  CHECK(j["totals"]["THM_MAIN"]["fail"] == 1);

  const std::string csv = sweep_csv(report);
  CHECK(csv.find("\"2,3\",2,2,2,2,2,2,2,,THM_MAIN") != std::string::npos);
}
