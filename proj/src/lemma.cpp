#include "kcover/lemma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kcover/bounds.hpp"

namespace kcover {

namespace {

struct RowResult {
  double min_margin = std::numeric_limits<double>::infinity();
  double min_s = 0.0;
  std::vector<LemmaSweepReport::Violation> violations;
};

// One (k, c) row: scan the s grid in ascending order.
RowResult sweep_row(double c, int k, int s_points, double tolerance) {
  RowResult row;
  const double root_c = std::sqrt(c);
  const double floor_value = std::min(bound_A(c, k), root_c);
  for (int i = 0; i < s_points; ++i) {
    const double s =
        s_points == 1 ? c : c + i * (root_c - c) / (s_points - 1);
    const double margin = F_eval(s, c, k) - floor_value;
    if (margin < row.min_margin) {
      row.min_margin = margin;
      row.min_s = s;
    }
    if (margin < -tolerance) row.violations.push_back({c, s, k, margin});
  }
  return row;
}

void check_sweep_args(int k_min, int k_max, int c_points, int s_points,
                      double tolerance) {
  if (k_min < 1 || k_max < k_min) throw std::domain_error("need 1 <= k_min <= k_max");
  if (c_points < 1 || s_points < 1) throw std::domain_error("grids must be nonempty");
  // tolerance 0 is allowed: it reports float-level noise as violations.
  if (!(tolerance >= 0.0)) throw std::domain_error("tolerance must be nonnegative");
}

LemmaSweepReport merge_rows(int k_min, int k_max, int c_points, int s_points,
                            double tolerance, std::vector<RowResult> rows) {
  LemmaSweepReport report;
  report.k_min = k_min;
  report.k_max = k_max;
  report.c_points = c_points;
  report.s_points = s_points;
  report.tolerance = tolerance;
  report.min_margin = std::numeric_limits<double>::infinity();

  std::size_t idx = 0;
  for (int k = k_min; k <= k_max; ++k) {
    for (int j = 1; j <= c_points; ++j, ++idx) {
      const double c = static_cast<double>(j) / (c_points + 1);
      const RowResult& row = rows[idx];
      if (row.min_margin < report.min_margin) {
        report.min_margin = row.min_margin;
        report.argmin_c = c;
        report.argmin_s = row.min_s;
        report.argmin_k = k;
      }
      report.violations.insert(report.violations.end(), row.violations.begin(),
                               row.violations.end());
    }
  }
  return report;
}

}  // namespace

LemmaSweepReport sweep_lemma_serial(int k_min, int k_max, int c_points, int s_points,
                                    double tolerance) {
  check_sweep_args(k_min, k_max, c_points, s_points, tolerance);
  const std::size_t row_count =
      static_cast<std::size_t>(k_max - k_min + 1) * c_points;
  std::vector<RowResult> rows(row_count);
  for (std::size_t idx = 0; idx < row_count; ++idx) {
    const int k = k_min + static_cast<int>(idx) / c_points;
    const int j = 1 + static_cast<int>(idx) % c_points;
    rows[idx] = sweep_row(static_cast<double>(j) / (c_points + 1), k, s_points, tolerance);
  }
  return merge_rows(k_min, k_max, c_points, s_points, tolerance, std::move(rows));
}

LemmaSweepReport sweep_lemma(int k_min, int k_max, int c_points, int s_points,
                             double tolerance) {
  check_sweep_args(k_min, k_max, c_points, s_points, tolerance);
  const std::int64_t row_count =
      static_cast<std::int64_t>(k_max - k_min + 1) * c_points;
  std::vector<RowResult> rows(static_cast<std::size_t>(row_count));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t idx = 0; idx < row_count; ++idx) {
    const int k = k_min + static_cast<int>(idx / c_points);
    const int j = 1 + static_cast<int>(idx % c_points);
    rows[idx] = sweep_row(static_cast<double>(j) / (c_points + 1), k, s_points, tolerance);
  }
  return merge_rows(k_min, k_max, c_points, s_points, tolerance, std::move(rows));
}

std::optional<double> case1_boundary(double c, int k) {
  const double root_c = std::sqrt(c);
  const double g_of_c = bound_A(c, k);
  if (g_of_c > root_c) return std::nullopt;  // Case 2 territory
  const double p_at_x0 = P_poly(1.0 - root_c, c, k);
  // (1 - c - x0) = sqrt(c) - c, so clearing the denominator:
  if (std::abs(p_at_x0 * (root_c - c) - (root_c - g_of_c)) > 1e-12)
    throw std::logic_error("case 1 boundary identity failed");
  return p_at_x0;
}

double case2_boundary(double c, int k) {
  const double root_c = std::sqrt(c);
  const double q_at_x0 = Q_poly(1.0 - c, c, k);
  const double closed_form =
      (1.0 - std::pow(1.0 - c, k - 1) * (1.0 + root_c)) / root_c;
  if (std::abs(q_at_x0 - closed_form) > 1e-12)
    throw std::logic_error("case 2 boundary closed form failed");
  const double g_of_c = bound_A(c, k);
  if (std::abs(g_of_c - root_c) > 1e-12 && (q_at_x0 >= 0.0) != (g_of_c >= root_c))
    throw std::logic_error("case 2 boundary sign disagrees with G(c) vs sqrt(c)");
  return q_at_x0;
}

std::pair<std::int64_t, std::int64_t> k2_pair_identity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw std::domain_error("need n >= 2");
  const Graph h = complement(g);

  std::int64_t left = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : left)
  for (int u = 0; u < n; ++u) {
    const auto row_u = h.row(u);
    for (int v = u + 1; v < n; ++v) {
      const auto row_v = h.row(v);
      int common = 0;
      for (std::size_t w = 0; w < row_u.size(); ++w)
        common += std::popcount(row_u[w] & row_v[w]);
      left += common;
    }
  }

  std::int64_t right = 0;
  for (int v = 0; v < n; ++v) {
    const std::int64_t d = h.degree(v);
    right += d * (d - 1) / 2;
  }
  return {left, right};
}

Rational eq0_average_pair(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  if (n < 2) throw std::domain_error("need n >= 2");
  const Graph h = complement(g);
  BigInt total = 0;
  for (int v = 0; v < n; ++v) {
    const std::int64_t d = h.degree(v);
    total += BigInt(d) * (d - 1) / 2;
  }
  return Rational(total, BigInt(n) * (n - 1) / 2);
}

}  // namespace kcover
