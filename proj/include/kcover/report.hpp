#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcover/bounds.hpp"
#include "kcover/coverage.hpp"
#include "kcover/graph.hpp"
#include "kcover/lemma.hpp"

namespace kcover {

// Key order is part of the wire format: reports must be byte-stable for a
// fixed seed, so everything uses ordered_json.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "kcover/1";

/// n, m, exact c and s (as "num/den" plus convenience floats), max degree.
Json graph_stats_json(const Graph& g);

Json certificate_json(const BoundCertificate& cert, int n);

struct SolveOptions {
  int k = 2;
  std::vector<Method> methods;  // run in the given order
  std::int64_t budget = EnumerationBudget{}.max_unions;
  int trials = 100;
  std::uint64_t seed = 1;
  bool timings = true;
};

/// Full RunReport for one graph: per-method solution + certificate, with
/// every coverage recounted through union_coverage before emission. A
/// budget refusal is recorded on the method entry ("status": "refused")
/// without failing the other methods.
Json solve_report(const Graph& g, const Json& input_descriptor, const SolveOptions& opts);

/// 0 when every derandomized certificate in the report is true, else 2.
int solve_exit_code(const Json& report);

Json sweep_report_json(const LemmaSweepReport& report, bool timings, double elapsed_ms);

struct VerifySpec {
  int count = 100;
  int n_min = 8, n_max = 64;
  int k_min = 2, k_max = 5;
  std::uint64_t seed = 1;
  int exact_upto = 16;  // oracle-dominance check for n <= this, k <= 3
  std::int64_t budget = EnumerationBudget{}.max_unions;
};

/**
 * Batch theorem check: `count` seeded G(n,p) instances plus (when count > 0)
 * the extremal families (clique+isolated, sparse regular, complete). Each
 * instance runs the derandomized solver and exact certificate for every k in
 * range, the degree-mass slack check, and the complement pair identity;
 * instances small enough also get the exhaustive oracle-dominance check.
 * Instances are processed independently (OpenMP) and reported in index
 * order, so output is byte-identical for a fixed seed.
 */
Json verify_report(const VerifySpec& spec, bool timings);

int verify_exit_code(const Json& report);

/// Recomputes every certificate verdict in a solve/verify report from the
/// reported integers alone (coverage, a_times_n, b_squared); true when all
/// reported verdicts and binding sides reproduce.
bool audit_report(const Json& report);

/// Applies the KCOVER_THREADS cap to OpenMP, when the variable is set.
void apply_thread_cap_from_env();

}  // namespace kcover
