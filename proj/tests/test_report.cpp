#include <doctest.h>

#include "kcover/edge_list.hpp"
#include "kcover/generators.hpp"
#include "kcover/report.hpp"
#include "test_helpers.hpp"

using namespace kcover;
using namespace kcover::testing;

namespace {

SolveOptions canonical_options(int k) {
  SolveOptions opts;
  opts.k = k;
  opts.methods = {Method::exact, Method::greedy, Method::derandomized,
                  Method::monte_carlo};
  opts.trials = 10;
  opts.seed = 1;
  opts.timings = false;
  return opts;
}

}  // namespace

TEST_CASE("solve_report carries audited per-method results") {
  const Graph g = path_graph(3);
  const Json report = solve_report(g, Json{{"path", "p3.edges"}}, canonical_options(1));

  CHECK(report.at("schema") == "kcover/1");
  CHECK(report.at("graph").at("n") == 3);
  CHECK(report.at("graph").at("m") == 2);
  CHECK(report.at("graph").at("c") == "4/9");
  CHECK(report.at("graph").at("max_degree") == 2);
  CHECK(report.at("graph").at("s") == "2/3");

  CHECK(report.at("solvers").size() == 4);
  for (const Json& entry : report.at("solvers")) {
    CHECK(entry.at("status") == "ok");
    CHECK(entry.at("covered") == 2);
    CHECK(entry.at("vertices") == Json::array({1}));
    CHECK(entry.at("certificate").at("verdict") == true);
    CHECK(!entry.contains("time_ms"));
  }
  CHECK(audit_report(report));
  CHECK(solve_exit_code(report) == 0);
}

TEST_CASE("solve_report records budget refusals without failing the rest") {
  const Graph g = gen_clique_plus_isolated(100, Rational(1, 4));
  SolveOptions opts = canonical_options(2);
  opts.budget = 10;  // C(100,2) = 4950 > 10
  const Json report = solve_report(g, Json{{"path", "gp.edges"}}, opts);

  CHECK(report.at("solvers")[0].at("method") == "exact");
  CHECK(report.at("solvers")[0].at("status") == "refused");
  CHECK(report.at("solvers")[0].at("error").get<std::string>().find("budget") !=
        std::string::npos);
  CHECK(report.at("solvers")[2].at("method") == "derandomized");
  CHECK(report.at("solvers")[2].at("status") == "ok");
  CHECK(report.at("solvers")[2].at("covered") == 51);
  CHECK(solve_exit_code(report) == 0);
}

TEST_CASE("audit_report catches tampered verdicts") {
  const Graph g = complete_graph(5);
  Json report = solve_report(g, Json{{"path", "k5"}}, canonical_options(2));
  REQUIRE(audit_report(report));
  report["solvers"][0]["certificate"]["verdict"] = false;
  CHECK(!audit_report(report));
}

TEST_CASE("verify_report is byte-stable and self-consistent") {
  VerifySpec spec;
  spec.count = 5;
  spec.n_min = 8;
  spec.n_max = 24;
  spec.k_min = 2;
  spec.k_max = 3;
  spec.seed = 7;

  const Json a = verify_report(spec, false);
  const Json b = verify_report(spec, false);
  CHECK(a.dump() == b.dump());

  // 5 random + 9 clique-isolated + 12 regular + 2 complete
  CHECK(a.at("instances") == 28);
  const int k_values = spec.k_max - spec.k_min + 1;
  CHECK(a.at("checks").at("certificate").at("pass") == 28 * k_values);
  CHECK(a.at("checks").at("certificate").at("fail") == 0);
  CHECK(a.at("checks").at("eq1_slack").at("fail") == 0);
  CHECK(a.at("checks").at("pair_identity").at("fail") == 0);
  CHECK(a.at("checks").at("oracle_dominance").at("fail") == 0);
  CHECK(a.at("checks").at("oracle_dominance").at("pass") > 0);
  CHECK(a.at("failures").empty());
  CHECK(verify_exit_code(a) == 0);

  // a different seed changes the corpus
  spec.seed = 8;
  CHECK(verify_report(spec, false).dump() != a.dump());
}

TEST_CASE("verify_report with count 0 is empty") {
  VerifySpec spec;
  spec.count = 0;
  const Json report = verify_report(spec, false);
  CHECK(report.at("instances") == 0);
  CHECK(report.at("checks").at("certificate").at("pass") == 0);
  CHECK(report.at("failures").empty());
  CHECK(verify_exit_code(report) == 0);
}

TEST_CASE("sweep_report_json shape") {
  const auto report = sweep_lemma(2, 3, 9, 10, 1e-9);
  const Json j = sweep_report_json(report, false, 0.0);
  CHECK(j.at("schema") == "kcover/1");
  CHECK(j.at("k_min") == 2);
  CHECK(j.at("k_max") == 3);
  CHECK(j.at("violations").is_array());
  CHECK(j.at("violations").empty());
  CHECK(!j.contains("time_ms"));
  CHECK(j.at("argmin").contains("c"));
}

TEST_CASE("graph stats round numbers") {
  const Json stats = graph_stats_json(gen_clique_plus_isolated(100, Rational(1, 4)));
  CHECK(stats.at("n") == 100);
  CHECK(stats.at("m") == 1275);
  CHECK(stats.at("c") == "51/200");
  CHECK(stats.at("c_float") == 0.255);
  CHECK(stats.at("max_degree") == 50);
  CHECK(stats.at("s") == "1/2");
}
