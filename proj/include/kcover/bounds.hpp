#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kcover/graph.hpp"
#include "kcover/rational.hpp"

namespace kcover {

enum class BindingSide { a_side, b_side, both, vacuous };

/**
 * Exact-arithmetic record that a coverage count m meets
 * min{(1-(1-c)^k)*n, sqrt(c)*n}. Since m >= min{A*n, B} iff m >= A*n or
 * m >= B, and m >= sqrt(c)*n iff m^2 >= 2|E| for m >= 0, the verdict is
 * decided entirely on rationals and integers; no floating point anywhere.
 * binding_side records which comparison(s) passed; vacuous means neither,
 * so verdict == (binding_side != vacuous).
 */
struct BoundCertificate {
  std::int64_t coverage = 0;
  Rational a_times_n;          // (1-(1-c)^k) * n, exact
  std::int64_t b_squared = 0;  // 2|E|
  bool verdict = false;
  BindingSide binding_side = BindingSide::vacuous;
};

/// G(c) = 1 - (1-c)^k. Throws std::domain_error outside 0 <= c <= 1.
double bound_A(double c, int k);
Rational bound_A(const Rational& c, int k);

/// 2|E|, the exact square of the theorem's sqrt(c)*n branch.
std::int64_t bound_B_squared(const Graph& g);

/// Certifies coverage against the theorem bound for g's exact density.
BoundCertificate bound_certify(const Graph& g, int k, std::int64_t coverage);

/// f(x) = 1 - (1-x)^{k-1}; concave on [0,1], f(0)=0, f(1)=1.
double f_concave(double x, int k);

/// F(s) = s + (1-(1-s)^{k-1})/s * (c - s^2); the s=0 limit is (k-1)*c.
double F_eval(double s, double c, int k);
Rational F_eval_exact(const Rational& s, const Rational& c, int k);

/// Case-1 polynomial, coefficients ascending in x:
/// (1-c)^{k-1}-1, (1-c)^{k-2}-1, ..., (1-c)-1, 1.
/// Satisfies (1-c-x) * P(x) = F(1-x) - G(c).
std::vector<double> P_coeffs(double c, int k);
double P_poly(double x, double c, int k);

/// Case-2 polynomial Q(x) = sqrt(c) * sum_{i<k-1} x^i - x^{k-1},
/// coefficients sqrt(c), ..., sqrt(c), -1. (sqrt(c)-s) * Q(1-s) = F(s)-sqrt(c).
std::vector<double> Q_coeffs(double c, int k);
double Q_poly(double x, double c, int k);

/// Horner evaluation of ascending coefficients.
double eval_poly(std::span<const double> ascending_coeffs, double x);

/// Descartes sign-change count of a coefficient sequence, zeros skipped.
/// Throws std::domain_error on an empty or all-zero sequence.
int sign_changes(std::span<const double> coeffs);

/// Delta^2 - sum of degrees over S = N(u0); equals the degree mass of T
/// minus (c - s^2) * n^2 and is nonnegative because no degree exceeds Delta.
std::int64_t eq1_slack(const Graph& g);

/// The randomized step's expected T-coverage floor (f(s)/s)*(c-s^2)*n with
/// s = Delta/n, clamped at 0 (the s > sqrt(c) regime short-circuits).
double expectation_lower_bound(const Graph& g, int k);

/// Evaluates both sides of "G(c) >= sqrt(c) iff (1-c)^{k-1}(1+sqrt(c)) <= 1".
std::pair<bool, bool> gc_sqrtc_equivalence(double c, int k);

}  // namespace kcover
