#include "kcover/report.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include "kcover/bounds.hpp"
#include "kcover/edge_list.hpp"
#include "kcover/generators.hpp"

namespace kcover {

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
      .count();
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

const char* binding_side_name(BindingSide side) {
  switch (side) {
    case BindingSide::a_side: return "A";
    case BindingSide::b_side: return "B";
    case BindingSide::both: return "both";
    case BindingSide::vacuous: return "vacuous";
  }
  throw std::logic_error("unreachable");
}

CoverageSolution run_method(const Graph& g, Method method, const SolveOptions& opts) {
  switch (method) {
    case Method::exact:
      return exact_best(g, opts.k, EnumerationBudget{opts.budget});
    case Method::greedy:
      return greedy_best(g, opts.k);
    case Method::derandomized:
      return proof_derandomized(g, opts.k);
    case Method::monte_carlo:
      return monte_carlo(g, opts.k, opts.trials, opts.seed);
  }
  throw std::logic_error("unreachable");
}

// Corpus instance descriptors for cmd_verify.
struct Instance {
  std::string family;
  int n = 0;
  double p = 0.0;       // gnp
  Rational c;           // clique-isolated
  int d = 0;            // regular
  std::uint64_t seed = 0;

  Json descriptor() const {
    Json desc;
    desc["family"] = family;
    desc["n"] = n;
    if (family == "gnp") {
      desc["p"] = p;
      desc["seed"] = seed;
    } else if (family == "clique-isolated") {
      desc["c"] = to_fraction_string(c);
    } else if (family == "regular") {
      desc["d"] = d;
      desc["seed"] = seed;
    }
    return desc;
  }

  Graph build() const {
    if (family == "gnp") return gen_gnp(n, p, seed);
    if (family == "clique-isolated") return gen_clique_plus_isolated(n, c);
    if (family == "regular") return gen_regular(n, d, seed);
    throw std::logic_error("unknown family " + family);
  }
};

std::vector<Instance> build_corpus(const VerifySpec& spec) {
  std::vector<Instance> corpus;
  if (spec.count <= 0) return corpus;  // --count 0 means an empty run

  corpus.reserve(static_cast<std::size_t>(spec.count) + 24);
  for (int i = 0; i < spec.count; ++i) {
    std::uint64_t state = spec.seed ^ (0x9e3779b97f4a7c15ull * (i + 1));
    Instance inst;
    inst.family = "gnp";
    inst.n = spec.n_min +
             static_cast<int>(splitmix64(state) % (spec.n_max - spec.n_min + 1));
    inst.p = (1 + static_cast<int>(splitmix64(state) % 9)) / 10.0;
    inst.seed = splitmix64(state);
    corpus.push_back(std::move(inst));
  }
  // Extremal families: tight-clique graphs, sparse regular graphs, and the
  // complete graph (d = n-1).
  for (int n : {50, 100, 200}) {
    for (int den : {16, 4, 2}) {
      Instance inst;
      inst.family = "clique-isolated";
      inst.n = n;
      inst.c = Rational(1, den);
      corpus.push_back(std::move(inst));
    }
  }
  std::uint64_t state = spec.seed ^ 0xa0761d6478bd642full;
  for (int n : {8, 16, 32, 64}) {
    for (int d : {2, 3, 4}) {
      Instance inst;
      inst.family = "regular";
      inst.n = n;
      inst.d = d;
      inst.seed = splitmix64(state);
      corpus.push_back(std::move(inst));
    }
  }
  for (int n : {8, 16}) {
    Instance inst;
    inst.family = "regular";
    inst.n = n;
    inst.d = n - 1;
    corpus.push_back(std::move(inst));
  }
  return corpus;
}

struct InstanceOutcome {
  int cert_pass = 0, cert_fail = 0;
  int eq1_pass = 0, eq1_fail = 0;
  int pair_pass = 0, pair_fail = 0;
  int dominance_pass = 0, dominance_fail = 0;
  std::vector<Json> failures;
};

InstanceOutcome check_instance(std::size_t index, const Instance& inst,
                               const VerifySpec& spec) {
  InstanceOutcome out;
  auto fail = [&](const std::string& check, const std::string& detail) {
    Json f;
    f["instance"] = index;
    f["descriptor"] = inst.descriptor();
    f["check"] = check;
    f["detail"] = detail;
    out.failures.push_back(std::move(f));
  };

  Graph g = inst.build();

  for (int k = spec.k_min; k <= spec.k_max; ++k) {
    const CoverageSolution sol = proof_derandomized(g, k);
    const BoundCertificate cert = bound_certify(g, k, sol.covered);
    if (cert.verdict) {
      ++out.cert_pass;
    } else {
      ++out.cert_fail;
      fail("certificate", "k=" + std::to_string(k) + " coverage " +
                              std::to_string(sol.covered) + " misses the bound");
    }

    const bool small_enough =
        g.vertex_count() <= spec.exact_upto && k <= 3 &&
        binomial_capped(g.vertex_count(), k, spec.budget) <= spec.budget;
    if (small_enough) {
      const CoverageSolution oracle = exact_best_serial(g, k, EnumerationBudget{spec.budget});
      if (oracle.covered >= sol.covered) {
        ++out.dominance_pass;
      } else {
        ++out.dominance_fail;
        fail("oracle_dominance", "exact " + std::to_string(oracle.covered) +
                                     " < derandomized " + std::to_string(sol.covered));
      }
    }
  }

  if (eq1_slack(g) >= 0) {
    ++out.eq1_pass;
  } else {
    ++out.eq1_fail;
    fail("eq1_slack", "negative degree-mass slack");
  }

  if (g.vertex_count() >= 2) {
    const auto [left, right] = k2_pair_identity(g);
    if (left == right) {
      ++out.pair_pass;
    } else {
      ++out.pair_fail;
      fail("pair_identity", std::to_string(left) + " != " + std::to_string(right));
    }
  } else {
    ++out.pair_pass;  // vacuous on a single vertex
  }

  return out;
}

}  // namespace

Json graph_stats_json(const Graph& g) {
  const SeedDecomposition seed = max_degree_seed(g);
  const Rational c = average_degree(g);
  const Rational s(seed.delta, g.vertex_count());
  Json stats;
  stats["n"] = g.vertex_count();
  stats["m"] = g.edge_count();
  stats["c"] = to_fraction_string(c);
  stats["c_float"] = to_double(c);
  stats["max_degree"] = seed.delta;
  stats["s"] = to_fraction_string(s);
  stats["s_float"] = to_double(s);
  return stats;
}

Json certificate_json(const BoundCertificate& cert, int n) {
  Json j;
  j["coverage"] = cert.coverage;
  j["n"] = n;
  j["a_times_n"] = to_fraction_string(cert.a_times_n);
  j["b_squared"] = cert.b_squared;
  j["verdict"] = cert.verdict;
  j["binding_side"] = binding_side_name(cert.binding_side);
  return j;
}

Json solve_report(const Graph& g, const Json& input_descriptor, const SolveOptions& opts) {
  Json report;
  report["schema"] = kSchemaTag;
  report["command"] = "solve";
  report["input"] = input_descriptor;
  report["k"] = opts.k;
  report["graph"] = graph_stats_json(g);
  report["solvers"] = Json::array();

  for (Method method : opts.methods) {
    Json entry;
    entry["method"] = method_name(method);
    const double start = now_ms();
    try {
      const CoverageSolution sol = run_method(g, method, opts);
      if (union_coverage(g, sol.vertices) != sol.covered)
        throw std::logic_error("coverage recount mismatch before emission");
      entry["status"] = "ok";
      entry["vertices"] = sol.vertices;
      entry["covered"] = sol.covered;
      entry["certificate"] =
          certificate_json(bound_certify(g, opts.k, sol.covered), g.vertex_count());
    } catch (const BudgetExceededError& refusal) {
      entry["status"] = "refused";
      entry["error"] = refusal.what();
    }
    if (opts.timings) entry["time_ms"] = now_ms() - start;
    report["solvers"].push_back(std::move(entry));
  }
  return report;
}

int solve_exit_code(const Json& report) {
  for (const Json& entry : report.at("solvers")) {
    if (entry.at("method") != method_name(Method::derandomized)) continue;
    if (entry.at("status") != "ok") return 2;
    if (!entry.at("certificate").at("verdict").get<bool>()) return 2;
  }
  return 0;
}

Json sweep_report_json(const LemmaSweepReport& report, bool timings, double elapsed_ms) {
  Json j;
  j["schema"] = kSchemaTag;
  j["command"] = "sweep";
  j["k_min"] = report.k_min;
  j["k_max"] = report.k_max;
  j["c_points"] = report.c_points;
  j["s_points"] = report.s_points;
  j["tolerance"] = report.tolerance;
  j["min_margin"] = report.min_margin;
  j["argmin"] = Json{{"c", report.argmin_c}, {"s", report.argmin_s}, {"k", report.argmin_k}};
  j["violations"] = Json::array();
  for (const auto& v : report.violations)
    j["violations"].push_back(
        Json{{"c", v.c}, {"s", v.s}, {"k", v.k}, {"margin", v.margin}});
  if (timings) j["time_ms"] = elapsed_ms;
  return j;
}

Json verify_report(const VerifySpec& spec, bool timings) {
  const double start = now_ms();
  const std::vector<Instance> corpus = build_corpus(spec);

  std::vector<InstanceOutcome> outcomes(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(corpus.size()); ++i)
    outcomes[i] = check_instance(static_cast<std::size_t>(i), corpus[i], spec);

  Json checks;
  InstanceOutcome total;
  for (const InstanceOutcome& o : outcomes) {
    total.cert_pass += o.cert_pass;
    total.cert_fail += o.cert_fail;
    total.eq1_pass += o.eq1_pass;
    total.eq1_fail += o.eq1_fail;
    total.pair_pass += o.pair_pass;
    total.pair_fail += o.pair_fail;
    total.dominance_pass += o.dominance_pass;
    total.dominance_fail += o.dominance_fail;
  }

  Json report;
  report["schema"] = kSchemaTag;
  report["command"] = "verify";
  report["spec"] = Json{{"count", spec.count},
                        {"n", std::to_string(spec.n_min) + ".." + std::to_string(spec.n_max)},
                        {"k", std::to_string(spec.k_min) + ".." + std::to_string(spec.k_max)},
                        {"seed", spec.seed},
                        {"exact_upto", spec.exact_upto}};
  report["instances"] = corpus.size();
  checks["certificate"] = Json{{"pass", total.cert_pass}, {"fail", total.cert_fail}};
  checks["eq1_slack"] = Json{{"pass", total.eq1_pass}, {"fail", total.eq1_fail}};
  checks["pair_identity"] = Json{{"pass", total.pair_pass}, {"fail", total.pair_fail}};
  checks["oracle_dominance"] =
      Json{{"pass", total.dominance_pass}, {"fail", total.dominance_fail}};
  report["checks"] = checks;
  report["failures"] = Json::array();
  for (const InstanceOutcome& o : outcomes)
    for (const Json& f : o.failures) report["failures"].push_back(f);
  if (timings) report["time_ms"] = now_ms() - start;
  return report;
}

int verify_exit_code(const Json& report) {
  return report.at("failures").empty() ? 0 : 2;
}

bool audit_report(const Json& report) {
  auto audit_certificate = [](const Json& cert) {
    const auto coverage = cert.at("coverage").get<std::int64_t>();
    const auto b_squared = cert.at("b_squared").get<std::int64_t>();
    const Rational a_times_n = parse_fraction(cert.at("a_times_n").get<std::string>());
    const bool a_ok = Rational(coverage) >= a_times_n;
    const bool b_ok = coverage * coverage >= b_squared;
    const std::string side = a_ok && b_ok ? "both" : a_ok ? "A" : b_ok ? "B" : "vacuous";
    return cert.at("verdict").get<bool>() == (a_ok || b_ok) &&
           cert.at("binding_side").get<std::string>() == side;
  };
  if (!report.contains("solvers")) return true;
  for (const Json& entry : report.at("solvers")) {
    if (entry.at("status") != "ok") continue;
    if (!audit_certificate(entry.at("certificate"))) return false;
  }
  return true;
}

void apply_thread_cap_from_env() {
  if (const char* raw = std::getenv("KCOVER_THREADS")) {
    const int cap = std::atoi(raw);
    if (cap >= 1) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
  }
}

}  // namespace kcover
