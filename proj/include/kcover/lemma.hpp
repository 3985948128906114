#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kcover/graph.hpp"
#include "kcover/rational.hpp"

namespace kcover {

/**
 * Grid verification of F(s) >= min{G(c), sqrt(c)} over 0 < c < 1,
 * s in [c, sqrt(c)], k in [k_min, k_max]. The c grid is uniform on the
 * open interval (endpoints excluded: the lemma's hypothesis is open);
 * the s grid is uniform on the closed box [c, sqrt(c)] per c.
 */
struct LemmaSweepReport {
  int k_min = 0, k_max = 0;
  int c_points = 0, s_points = 0;
  double tolerance = 0.0;

  double min_margin = 0.0;  // min of F(s) - min{G(c), sqrt(c)}
  double argmin_c = 0.0, argmin_s = 0.0;
  int argmin_k = 0;

  struct Violation {
    double c = 0.0, s = 0.0;
    int k = 0;
    double margin = 0.0;
  };
  std::vector<Violation> violations;  // margin < -tolerance; expected empty
};

/// OpenMP over (k, c) rows; rows merge in index order, so the report is
/// bit-identical to sweep_lemma_serial.
LemmaSweepReport sweep_lemma(int k_min, int k_max, int c_points, int s_points,
                             double tolerance);
LemmaSweepReport sweep_lemma_serial(int k_min, int k_max, int c_points, int s_points,
                                    double tolerance);

/// Case 1 boundary value P(1 - sqrt(c)), which clears to sqrt(c) - G(c);
/// nullopt when the case hypothesis G(c) <= sqrt(c) does not hold.
/// Throws std::logic_error if the cleared identity misses 1e-12.
std::optional<double> case1_boundary(double c, int k);

/// Case 2 boundary value Q(1-c), checked against the closed form
/// (1 - (1-c)^{k-1}(1 + sqrt(c))) / sqrt(c) and, away from the knife edge
/// |G(c) - sqrt(c)| <= 1e-12, against the sign of G(c) - sqrt(c).
double case2_boundary(double c, int k);

/// Both sides of sum_{pairs} |N_H(u1) ^ N_H(u2)| = sum_v C(d_H(v), 2)
/// on the complement H of g, each computed independently and exactly.
std::pair<std::int64_t, std::int64_t> k2_pair_identity(const Graph& g);

/// Average pairwise complement-neighborhood intersection,
/// sum_v C(d_H(v), 2) / C(n, 2), as an exact rational.
Rational eq0_average_pair(const Graph& g);

}  // namespace kcover
