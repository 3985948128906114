#include "kcover/coverage.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "kcover/generators.hpp"

namespace kcover {

namespace {

void check_k(int k) {
  if (k < 1) throw std::domain_error("k must be >= 1");
}

struct Candidate {
  std::int64_t covered = -1;
  std::vector<int> subset;

  // Strictly-better replacement keeps the lexicographically smallest
  // maximizer when subsets arrive in lexicographic order.
  void offer(std::int64_t cov, const std::vector<int>& s) {
    if (cov > covered) {
      covered = cov;
      subset = s;
    }
  }
};

// Enumerates k-subsets with prefix unions: level i holds the OR of the
// rows picked so far. `subset` levels 0..level-1 are fixed.
void enumerate_from(const Graph& g, int k, int level, int first,
                    std::vector<int>& subset,
                    std::vector<std::vector<BitWord>>& prefix, Candidate& best) {
  const int n = g.vertex_count();
  const int words = g.row_words();
  for (int v = first; v <= n - (k - level); ++v) {
    const auto& above = prefix[level];  // union of rows before this level
    auto& here = prefix[level + 1];
    const auto row = g.row(v);
    for (int w = 0; w < words; ++w) here[w] = above[w] | row[w];
    subset[level] = v;
    if (level == k - 1) {
      std::int64_t covered = 0;
      for (int w = 0; w < words; ++w) covered += std::popcount(here[w]);
      best.offer(covered, subset);
    } else {
      enumerate_from(g, k, level + 1, v + 1, subset, prefix, best);
    }
  }
}

Candidate best_with_first(const Graph& g, int k, int v0) {
  const int words = g.row_words();
  std::vector<std::vector<BitWord>> prefix(k + 1, std::vector<BitWord>(words, 0));
  std::vector<int> subset(k);
  Candidate best;
  const auto row = g.row(v0);
  for (int w = 0; w < words; ++w) prefix[1][w] = row[w];
  subset[0] = v0;
  if (k == 1) {
    std::int64_t covered = 0;
    for (int w = 0; w < words; ++w) covered += std::popcount(prefix[1][w]);
    best.offer(covered, subset);
  } else {
    enumerate_from(g, k, 1, v0 + 1, subset, prefix, best);
  }
  return best;
}

std::int64_t check_budget(const Graph& g, int k_eff, const EnumerationBudget& budget) {
  const std::int64_t subsets =
      binomial_capped(g.vertex_count(), k_eff, budget.max_unions);
  if (subsets > budget.max_unions)
    throw BudgetExceededError(
        subsets, budget.max_unions,
        "exact enumeration refused: C(" + std::to_string(g.vertex_count()) + "," +
            std::to_string(k_eff) + ") exceeds the budget of " +
            std::to_string(budget.max_unions) + " set unions");
  return subsets;
}

// Repeats never help a union, so k > n reduces to the full-vertex subset;
// the tuple is padded back to length k with its last element.
CoverageSolution finish_exact(const Graph& g, int k, Candidate best) {
  CoverageSolution sol;
  sol.method = Method::exact;
  sol.vertices = std::move(best.subset);
  while (static_cast<int>(sol.vertices.size()) < k)
    sol.vertices.push_back(sol.vertices.back());
  sol.covered = union_coverage(g, sol.vertices);
  if (sol.covered != best.covered)
    throw std::logic_error("exact_best coverage recount mismatch");
  return sol;
}

double pow_int(double base, int exp) {
  double acc = 1.0;
  while (exp > 0) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

// E = |T| - sum over uncovered of (1 - d(u)/n)^r, summed in ascending
// vertex order so every caller gets bit-identical values.
double ce_value(int t_size, const std::vector<double>& stay_uncovered_1step,
                const Bitset& uncovered, int r) {
  double missing = 0.0;
  uncovered.for_each_set(
      [&](int u) { missing += pow_int(stay_uncovered_1step[u], r); });
  return static_cast<double>(t_size) - missing;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::greedy: return "greedy";
    case Method::derandomized: return "derandomized";
    case Method::monte_carlo: return "monte_carlo";
  }
  throw std::logic_error("unreachable");
}

Method method_from_name(const std::string& name) {
  if (name == "exact") return Method::exact;
  if (name == "greedy") return Method::greedy;
  if (name == "derandomized") return Method::derandomized;
  if (name == "monte_carlo" || name == "monte-carlo") return Method::monte_carlo;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::int64_t binomial_capped(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) may overflow past any practical cap; bail out early.
    if (result > (cap + 1) / (n - k + i) + 1) return cap + 1;
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

CoverageSolution exact_best_serial(const Graph& g, int k, EnumerationBudget budget) {
  check_k(k);
  const int k_eff = std::min(k, g.vertex_count());
  check_budget(g, k_eff, budget);
  Candidate best;
  std::vector<int> subset(k_eff);
  std::vector<std::vector<BitWord>> prefix(k_eff + 1,
                                           std::vector<BitWord>(g.row_words(), 0));
  enumerate_from(g, k_eff, 0, 0, subset, prefix, best);
  return finish_exact(g, k, std::move(best));
}

CoverageSolution exact_best(const Graph& g, int k, EnumerationBudget budget) {
  check_k(k);
  const int n = g.vertex_count();
  const int k_eff = std::min(k, n);
  check_budget(g, k_eff, budget);

  // One slot per first vertex; merging in ascending order afterwards keeps
  // the result independent of the schedule.
  const int first_count = n - k_eff + 1;
  std::vector<Candidate> per_first(first_count);
#pragma omp parallel for schedule(dynamic)
  for (int v0 = 0; v0 < first_count; ++v0)
    per_first[v0] = best_with_first(g, k_eff, v0);

  Candidate best;
  for (Candidate& c : per_first)
    if (c.covered >= 0) best.offer(c.covered, c.subset);
  return finish_exact(g, k, std::move(best));
}

CoverageSolution greedy_best(const Graph& g, int k) {
  check_k(k);
  const int n = g.vertex_count();
  const int words = g.row_words();
  Bitset covered(n);
  CoverageSolution sol;
  sol.method = Method::greedy;
  for (int step = 0; step < k; ++step) {
    int best_v = 0;
    int best_gain = -1;
    for (int v = 0; v < n; ++v) {
      int gain = 0;
      const auto row = g.row(v);
      const auto cov = covered.words();
      for (int w = 0; w < words; ++w) gain += std::popcount(row[w] & ~cov[w]);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    sol.vertices.push_back(best_v);
    Bitset row = g.neighborhood(best_v);
    covered |= row;
  }
  sol.covered = union_coverage(g, sol.vertices);
  return sol;
}

CoverageSolution proof_derandomized(const Graph& g, int k) {
  check_k(k);
  const int n = g.vertex_count();
  const SeedDecomposition seed = max_degree_seed(g);
  const int t_size = seed.T.count();

  std::vector<double> stay(n);  // per-vertex one-step miss probability
  for (int u = 0; u < n; ++u)
    stay[u] = 1.0 - static_cast<double>(g.degree(u)) / n;

  CoverageSolution sol;
  sol.method = Method::derandomized;
  sol.vertices.push_back(seed.u0);

  Bitset uncovered = seed.T;  // T-vertices hit by none of the picks yet
  sol.expectation_trace.push_back(ce_value(t_size, stay, uncovered, k - 1));

  std::vector<double> weight(n);
  for (int step = 1; step < k; ++step) {
    const int r_after = k - 1 - step;  // choices left after this pick
    uncovered.for_each_set(
        [&](int u) { weight[u] = pow_int(stay[u], r_after); });

    // E(v) = |T| - sum_{u in U \ N(v)} weight[u]; maximizing E(v) is
    // maximizing the weight captured from U, ties to the smallest id.
    int best_v = 0;
    double best_gain = -1.0;
    for (int v = 0; v < n; ++v) {
      double gain = 0.0;
      const auto row = g.row(v);
      const auto unc = uncovered.words();
      for (std::size_t w = 0; w < unc.size(); ++w) {
        BitWord bits = row[w] & unc[w];
        while (bits) {
          const int b = std::countr_zero(bits);
          gain += weight[static_cast<int>(w) * kBitsPerWord + b];
          bits &= bits - 1;
        }
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }

    sol.vertices.push_back(best_v);
    uncovered.subtract(g.neighborhood(best_v));
    const double expect = ce_value(t_size, stay, uncovered, r_after);
    // Exact in real arithmetic; a gross drop can only mean a broken pick.
    if (expect < sol.expectation_trace.back() - 1e-6 * n)
      throw std::logic_error("conditional expectation decreased");
    sol.expectation_trace.push_back(expect);
  }

  sol.covered = union_coverage(g, sol.vertices);
  return sol;
}

CoverageSolution monte_carlo(const Graph& g, int k, int trials, std::uint64_t seed) {
  check_k(k);
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  const int n = g.vertex_count();
  const int u0 = max_degree_seed(g).u0;

  std::mt19937_64 rng(seed);
  std::vector<int> tuple(static_cast<std::size_t>(k));
  tuple[0] = u0;
  CoverageSolution sol;
  sol.method = Method::monte_carlo;
  std::int64_t best = -1;
  for (int t = 0; t < trials; ++t) {
    for (int i = 1; i < k; ++i)
      tuple[i] = static_cast<int>(bounded_rand(rng, static_cast<std::uint64_t>(n)));
    const std::int64_t covered = union_coverage(g, tuple);
    if (covered > best) {
      best = covered;
      sol.vertices = tuple;
    }
  }
  sol.covered = union_coverage(g, sol.vertices);
  return sol;
}

double conditional_expectation(const Graph& g, const Bitset& uncovered, int r) {
  if (r < 0) throw std::domain_error("r must be >= 0");
  if (uncovered.size_bits() != g.vertex_count())
    throw std::domain_error("uncovered bitset width must equal n");
  const SeedDecomposition seed = max_degree_seed(g);
  if (!uncovered.is_subset_of(seed.T))
    throw std::domain_error("uncovered must be a subset of T");
  const int n = g.vertex_count();
  std::vector<double> stay(n);
  for (int u = 0; u < n; ++u)
    stay[u] = 1.0 - static_cast<double>(g.degree(u)) / n;
  return ce_value(seed.T.count(), stay, uncovered, r);
}

}  // namespace kcover
