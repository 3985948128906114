#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "kcover/graph.hpp"
#include "kcover/rational.hpp"

namespace kcover {

/// Pairing-model regular generation ran out of retries; a different seed
/// (or another attempt) may succeed.
class RetryableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unbiased integer in [0, bound) from the engine's raw 64-bit stream.
/// Fully determined by the engine state, unlike the standard distributions,
/// so seeded output is stable across standard library implementations.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound);

/// G(n,p): each unordered pair independently an edge with probability p.
/// Deterministic for a given seed. Throws std::domain_error unless
/// 0 <= p <= 1.
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// Clique on ceil(sqrt(c)*n)+1 vertices (0-based prefix), rest isolated.
/// The clique size is computed in exact integer arithmetic, and the result
/// always satisfies average_degree >= c. Throws std::domain_error if the
/// clique does not fit (ceil(sqrt(c)*n)+1 > n) or c is outside [0,1].
Graph gen_clique_plus_isolated(int n, const Rational& c);

/// d-regular graph via the pairing model with rejection of self-loops and
/// multi-edges (up to max_retries shuffles, then RetryableError).
/// d = 0 and d = n-1 are closed-form (edgeless / complete). Throws
/// std::domain_error if d is out of range or n*d is odd.
Graph gen_regular(int n, int d, std::uint64_t seed, int max_retries = 1000);

}  // namespace kcover
