#include "kcover/generators.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace kcover {

std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
  // Lemire multiply-shift with rejection of the biased low range.
  std::uint64_t x = rng();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("edge probability must be in [0,1]");
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // 53-bit uniform in [0,1); strictly below p keeps p=0 edgeless and
      // p=1 complete.
      const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (unit < p) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

// Smallest t >= 0 with t^2 * den >= num * n^2, i.e. t = ceil(sqrt(c) * n),
// decided in exact integer arithmetic (float only seeds the search).
std::int64_t ceil_sqrt_c_times_n(int n, const Rational& c) {
  const BigInt num = numerator(c);
  const BigInt den = denominator(c);
  const BigInt target = num * n * n;
  auto holds = [&](std::int64_t t) { return BigInt(t) * t * den >= target; };
  std::int64_t t = static_cast<std::int64_t>(
      std::ceil(std::sqrt(to_double(c)) * n));
  t = std::max<std::int64_t>(0, t - 2);
  while (!holds(t)) ++t;
  while (t > 0 && holds(t - 1)) --t;
  return t;
}

}  // namespace

Graph gen_clique_plus_isolated(int n, const Rational& c) {
  if (n < 1) throw std::domain_error("need n >= 1");
  if (c < 0 || c > 1) throw std::domain_error("density must be in [0,1]");
  const std::int64_t clique = ceil_sqrt_c_times_n(n, c) + 1;
  if (clique > n)
    throw std::domain_error("clique of " + std::to_string(clique) +
                            " vertices does not fit in n=" + std::to_string(n));
  Graph g(n);
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_regular(int n, int d, std::uint64_t seed, int max_retries) {
  if (n < 1 || d < 0 || d >= n)
    throw std::domain_error("regular graph needs 0 <= d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
    throw std::domain_error("n*d must be even");

  Graph g(n);
  if (d == 0) return g;
  if (d == n - 1) {  // only one simple graph has this degree sequence
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  std::mt19937_64 rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::size_t idx = 0;
    for (int u = 0; u < n; ++u)
      for (int j = 0; j < d; ++j) stubs[idx++] = u;
    for (std::size_t i = stubs.size() - 1; i > 0; --i)
      std::swap(stubs[i], stubs[bounded_rand(rng, i + 1)]);

    Graph candidate(n);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const int u = stubs[i], v = stubs[i + 1];
      if (u == v || candidate.has_edge(u, v)) {
        simple = false;
        break;
      }
      candidate.add_edge(u, v);
    }
    if (simple) return candidate;
  }
  throw RetryableError("pairing model produced no simple " + std::to_string(d) +
                       "-regular graph on " + std::to_string(n) + " vertices in " +
                       std::to_string(max_retries) + " attempts");
}

}  // namespace kcover
