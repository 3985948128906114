#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcover/bitset.hpp"
#include "kcover/graph.hpp"

namespace kcover {

enum class Method { exact, greedy, derandomized, monte_carlo };

std::string method_name(Method m);
Method method_from_name(const std::string& name);  // throws std::invalid_argument

/**
 * A k-tuple of (not necessarily distinct) vertices plus its exact union
 * coverage. Every solver recomputes `covered` through union_coverage on the
 * final tuple, so the field never depends on solver-internal bookkeeping.
 */
struct CoverageSolution {
  std::vector<int> vertices;
  std::int64_t covered = 0;
  Method method = Method::exact;
  /// derandomized only: conditional expectation of final T-coverage after
  /// the seed and after each pick (k entries for a k-tuple). Non-decreasing.
  std::vector<double> expectation_trace;
};

struct EnumerationBudget {
  std::int64_t max_unions = 100'000'000;
};

class BudgetExceededError : public std::runtime_error {
public:
  BudgetExceededError(std::int64_t required, std::int64_t budget, const std::string& what)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  std::int64_t required() const { return required_; }
  std::int64_t budget() const { return budget_; }

private:
  std::int64_t required_;
  std::int64_t budget_;
};

/// C(n,k) capped at `cap` (returns cap+1 on overflow past it).
std::int64_t binomial_capped(int n, int k, std::int64_t cap);

/**
 * True maximum coverage over all k-subsets of distinct vertices, which is
 * the maximum over all k-tuples as well: a repeated vertex never grows the
 * union. Ties break to the lexicographically smallest subset. Refuses with
 * BudgetExceededError when C(n,k) exceeds the budget. The OpenMP variant
 * partitions the enumeration by the subset's first vertex; its merge is an
 * associative max with lexicographic tie-break, so it returns exactly the
 * serial result.
 */
CoverageSolution exact_best(const Graph& g, int k, EnumerationBudget budget = {});
CoverageSolution exact_best_serial(const Graph& g, int k, EnumerationBudget budget = {});

/// Picks k vertices one at a time, each maximizing marginal new coverage,
/// ties to the smallest id.
CoverageSolution greedy_best(const Graph& g, int k);

/**
 * The proof procedure, made deterministic by conditional expectations:
 * start from the smallest maximum-degree vertex u0, then pick each of the
 * remaining k-1 vertices to maximize the conditional expectation of final
 * T-coverage
 *     E = |T| - sum_{u in U} (1 - d(u)/n)^r
 * over uncovered U and r choices left. The expectation never decreases
 * along the picks, so the result meets the exact theorem certificate.
 */
CoverageSolution proof_derandomized(const Graph& g, int k);

/// Literal sampling: u0 plus k-1 uniform vertices per trial, best of
/// `trials`. Deterministic for a given seed; earlier trials win ties.
CoverageSolution monte_carlo(const Graph& g, int k, int trials, std::uint64_t seed);

/// E as above for the max-degree decomposition of g. `uncovered` must be a
/// subset of T (bitset width n); r >= 0. r = 0 gives |T| - |uncovered|.
double conditional_expectation(const Graph& g, const Bitset& uncovered, int r);

}  // namespace kcover
