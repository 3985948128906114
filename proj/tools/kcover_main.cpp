// kcover: generate graphs, run the coverage solvers, certify the
// min{(1-(1-c)^k)n, sqrt(c)n} bound exactly, and sweep the key inequality.
//
// Exit codes: 0 success / all checks pass, 1 usage or I/O error,
// 2 a mathematical claim failed its check.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kcover/bounds.hpp"
#include "kcover/edge_list.hpp"
#include "kcover/generators.hpp"
#include "kcover/lemma.hpp"
#include "kcover/report.hpp"

namespace {

using kcover::Json;

struct Range {
  int lo = 0, hi = 0;
};

// "a..b" or a single "a".
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a range like 2..5, got '" + text + "'");
  }
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

int run_gen(const std::string& family, int n, double p, const std::string& c_text,
            int d, std::uint64_t seed, const std::string& out_path) {
  kcover::Graph g = [&] {
    if (family == "gnp") return kcover::gen_gnp(n, p, seed);
    if (family == "clique-isolated")
      return kcover::gen_clique_plus_isolated(n, kcover::parse_fraction(c_text));
    if (family == "regular") return kcover::gen_regular(n, d, seed);
    throw std::domain_error("unknown family '" + family + "'");
  }();
  kcover::save_edge_list_file(g, out_path);

  Json out;
  out["schema"] = kcover::kSchemaTag;
  out["command"] = "gen";
  out["family"] = family;
  if (family == "gnp") {
    out["p"] = p;
    out["seed"] = seed;
  } else if (family == "clique-isolated") {
    out["c"] = c_text;
  } else {
    out["d"] = d;
    out["seed"] = seed;
  }
  out["out"] = out_path;
  out["graph"] = kcover::graph_stats_json(g);
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  kcover::apply_thread_cap_from_env();

  CLI::App app{"k-neighborhood coverage solver and bound checker"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph and write an edge list");
  std::string family, c_text = "1/4", out_path;
  int n = 100, d = 3;
  double p = 0.5;
  std::uint64_t seed = 1;
  gen->add_option("--family", family, "gnp | clique-isolated | regular")->required();
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--p", p, "edge probability (gnp)");
  gen->add_option("--c", c_text, "density target as num/den (clique-isolated)");
  gen->add_option("--d", d, "degree (regular)");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output edge-list path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "run coverage solvers on an edge list");
  std::string in_path, methods_text = "exact,greedy,derandomized,monte_carlo";
  kcover::SolveOptions solve_opts;
  bool solve_no_timings = false;
  solve->add_option("--in", in_path, "input edge-list path")->required();
  solve->add_option("--k", solve_opts.k, "number of vertices to pick")->required();
  solve->add_option("--methods", methods_text,
                    "comma list of exact,greedy,derandomized,monte_carlo");
  solve->add_option("--budget", solve_opts.budget, "exact-enumeration union budget");
  solve->add_option("--trials", solve_opts.trials, "monte carlo trials");
  solve->add_option("--seed", solve_opts.seed, "monte carlo seed");
  solve->add_flag("--no-timings", solve_no_timings, "canonical byte-stable output");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid-check F(s) >= min{G(c), sqrt(c)}");
  std::string sweep_k = "2..10";
  int c_points = 199, s_points = 200;
  double tolerance = 1e-9;
  bool sweep_no_timings = false;
  sweep->add_option("--k", sweep_k, "k range, e.g. 2..10");
  sweep->add_option("--c-points", c_points, "grid points in (0,1)");
  sweep->add_option("--s-points", s_points, "grid points in [c, sqrt(c)]");
  sweep->add_option("--tol", tolerance, "violation tolerance");
  sweep->add_flag("--no-timings", sweep_no_timings, "canonical byte-stable output");

  // verify
  auto* verify = app.add_subcommand("verify", "batch theorem check over a corpus");
  kcover::VerifySpec vspec;
  std::string verify_n = "8..64", verify_k = "2..5";
  bool verify_no_timings = false;
  verify->add_option("--count", vspec.count, "number of random instances");
  verify->add_option("--n", verify_n, "vertex-count range, e.g. 8..64");
  verify->add_option("--k", verify_k, "k range, e.g. 2..5");
  verify->add_option("--seed", vspec.seed, "corpus seed");
  verify->add_option("--exact-upto", vspec.exact_upto,
                     "run the exhaustive oracle on instances with n <= this");
  verify->add_option("--budget", vspec.budget, "exact-enumeration union budget");
  verify->add_flag("--no-timings", verify_no_timings, "canonical byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return run_gen(family, n, p, c_text, d, seed, out_path);

    if (solve->parsed()) {
      std::istringstream tokens(methods_text);
      for (std::string token; std::getline(tokens, token, ',');)
        if (!token.empty()) solve_opts.methods.push_back(kcover::method_from_name(token));
      solve_opts.timings = !solve_no_timings;
      const kcover::Graph g = kcover::load_edge_list_file(in_path);
      const Json report = kcover::solve_report(g, Json{{"path", in_path}}, solve_opts);
      std::cout << report.dump(2) << '\n';
      return kcover::solve_exit_code(report);
    }

    if (sweep->parsed()) {
      const Range kr = parse_range(sweep_k);
      const auto start = std::chrono::steady_clock::now();
      const kcover::LemmaSweepReport report =
          kcover::sweep_lemma(kr.lo, kr.hi, c_points, s_points, tolerance);
      std::cout << kcover::sweep_report_json(report, !sweep_no_timings,
                                             elapsed_since(start))
                       .dump(2)
                << '\n';
      return report.violations.empty() ? 0 : 2;
    }

    if (verify->parsed()) {
      const Range nr = parse_range(verify_n);
      const Range kr = parse_range(verify_k);
      vspec.n_min = nr.lo;
      vspec.n_max = nr.hi;
      vspec.k_min = kr.lo;
      vspec.k_max = kr.hi;
      const Json report = kcover::verify_report(vspec, !verify_no_timings);
      std::cout << report.dump(2) << '\n';
      return kcover::verify_exit_code(report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
