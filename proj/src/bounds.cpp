#include "kcover/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace kcover {

namespace {

void check_k(int k) {
  if (k < 1) throw std::domain_error("k must be >= 1");
}

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error(std::string(name) + " must be in [0,1]");
}

void check_open_unit(double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("c must be in (0,1)");
}

}  // namespace

double bound_A(double c, int k) {
  check_k(k);
  check_unit(c, "c");
  return 1.0 - std::pow(1.0 - c, k);
}

Rational bound_A(const Rational& c, int k) {
  check_k(k);
  if (c < 0 || c > 1) throw std::domain_error("c must be in [0,1]");
  return 1 - pow_rational(1 - c, static_cast<unsigned>(k));
}

std::int64_t bound_B_squared(const Graph& g) { return 2 * g.edge_count(); }

BoundCertificate bound_certify(const Graph& g, int k, std::int64_t coverage) {
  check_k(k);
  const int n = g.vertex_count();
  if (coverage < 0 || coverage > n)
    throw std::domain_error("coverage must be in [0,n]");

  BoundCertificate cert;
  cert.coverage = coverage;
  cert.a_times_n = bound_A(average_degree(g), k) * n;
  cert.b_squared = bound_B_squared(g);

  const bool a_ok = Rational(coverage) >= cert.a_times_n;
  const bool b_ok = coverage * coverage >= cert.b_squared;
  cert.verdict = a_ok || b_ok;
  cert.binding_side = a_ok && b_ok ? BindingSide::both
                      : a_ok      ? BindingSide::a_side
                      : b_ok      ? BindingSide::b_side
                                  : BindingSide::vacuous;
  return cert;
}

double f_concave(double x, int k) {
  check_k(k);
  check_unit(x, "x");
  return 1.0 - std::pow(1.0 - x, k - 1);
}

double F_eval(double s, double c, int k) {
  check_k(k);
  if (s == 0.0) return (k - 1) * c;
  return s + (1.0 - std::pow(1.0 - s, k - 1)) / s * (c - s * s);
}

Rational F_eval_exact(const Rational& s, const Rational& c, int k) {
  check_k(k);
  if (s == 0) return (k - 1) * c;
  return s + (1 - pow_rational(1 - s, static_cast<unsigned>(k - 1))) / s * (c - s * s);
}

std::vector<double> P_coeffs(double c, int k) {
  check_k(k);
  check_open_unit(c);
  std::vector<double> coeffs(static_cast<std::size_t>(k));
  for (int i = 0; i < k - 1; ++i)
    coeffs[i] = std::pow(1.0 - c, k - 1 - i) - 1.0;
  coeffs[k - 1] = 1.0;
  return coeffs;
}

std::vector<double> Q_coeffs(double c, int k) {
  check_k(k);
  check_open_unit(c);
  std::vector<double> coeffs(static_cast<std::size_t>(k), std::sqrt(c));
  coeffs[k - 1] = -1.0;
  return coeffs;
}

double eval_poly(std::span<const double> ascending_coeffs, double x) {
  double acc = 0.0;
  for (auto it = ascending_coeffs.rbegin(); it != ascending_coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

double P_poly(double x, double c, int k) { return eval_poly(P_coeffs(c, k), x); }
double Q_poly(double x, double c, int k) { return eval_poly(Q_coeffs(c, k), x); }

int sign_changes(std::span<const double> coeffs) {
  if (coeffs.empty()) throw std::domain_error("empty coefficient list");
  int changes = 0;
  int prev = 0;
  for (double a : coeffs) {
    const int sign = a > 0.0 ? 1 : a < 0.0 ? -1 : 0;
    if (sign == 0) continue;
    if (prev != 0 && sign != prev) ++changes;
    prev = sign;
  }
  if (prev == 0) throw std::domain_error("all coefficients are zero");
  return changes;
}

std::int64_t eq1_slack(const Graph& g) {
  const SeedDecomposition seed = max_degree_seed(g);
  std::int64_t degree_mass_s = 0;
  seed.S.for_each_set([&](int v) { degree_mass_s += g.degree(v); });
  return static_cast<std::int64_t>(seed.delta) * seed.delta - degree_mass_s;
}

double expectation_lower_bound(const Graph& g, int k) {
  check_k(k);
  const SeedDecomposition seed = max_degree_seed(g);
  if (seed.delta == 0) return 0.0;
  const int n = g.vertex_count();
  const double s = static_cast<double>(seed.delta) / n;
  const double c = to_double(average_degree(g));
  if (c <= s * s) return 0.0;
  return f_concave(s, k) / s * (c - s * s) * n;
}

std::pair<bool, bool> gc_sqrtc_equivalence(double c, int k) {
  check_k(k);
  check_open_unit(c);
  const double root_c = std::sqrt(c);
  const bool lhs = bound_A(c, k) >= root_c;
  const bool rhs = std::pow(1.0 - c, k - 1) * (1.0 + root_c) <= 1.0;
  return {lhs, rhs};
}

}  // namespace kcover
