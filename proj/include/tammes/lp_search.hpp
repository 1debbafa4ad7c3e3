#pragma once

// Numerical search for Delsarte certificates.
//
// With c_0 fixed to 1 the bound f# = f(1) = 1 + sum_k c_k, and the class
// P(K, tau, n) becomes the LP
//
//   min sum_k c_k   s.t.  sum_k c_k P_k(t) <= -1  for t in [-1, tau],  c >= 0,
//
// discretized on a grid of t values.  The simplex runs on the dual
//
//   max sum_j y_j   s.t.  sum_j -P_k(t_j) y_j <= 1  (k = 1..K),  y >= 0,
//
// whose all-slack basis is feasible; the c_k are its optimal prices.  After
// each solve f is scanned densely on [-1, tau]; local maxima above the
// tolerance join the grid and the LP is solved again.

#include "tammes/certificate.hpp"
#include "tammes/gegenbauer.hpp"
#include "tammes/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

namespace tammes {

enum class LPStatus { optimal, infeasible_grid, iteration_limit };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible_grid: return "infeasible-grid";
    case LPStatus::iteration_limit: return "iteration-limit";
  }
  return "?";
}

struct LPOptions {
  double tolerance = 1e-9;            // allowed max of f on [-1, tau]
  int max_rounds = 20;                // refinement re-solves
  std::size_t dense_samples = 100000;
  std::size_t max_new_points = 50;    // per round
  SimplexOptions simplex;
};

struct LPResult {
  int dim = 0;
  double tau = 0.0;
  int degree = 0;
  LPStatus status = LPStatus::iteration_limit;
  double bound = 0.0;           // f(1) / c_0 with c_0 = 1
  std::vector<double> coeffs;   // c_1..c_K
  double violation = 0.0;       // max of f on [-1, tau] after the dense re-check
  int refinement_rounds = 0;
  std::size_t grid_size = 0;
  std::size_t simplex_iterations = 0;
};

/// Chebyshev-Lobatto points mapped to [lo, hi], endpoints included, ascending.
inline std::vector<double> chebyshev_grid(double lo, double hi, std::size_t count) {
  if (count < 2) throw std::invalid_argument("chebyshev_grid needs at least two points");
  std::vector<double> g(count);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (std::size_t j = 0; j < count; ++j) {
    const double theta = std::numbers::pi * static_cast<double>(count - 1 - j) / static_cast<double>(count - 1);
    g[j] = mid + half * std::cos(theta);
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

/// f(t) = 1 + sum_k c_k P_k^(n)(t) in double precision.
inline double lp_polynomial_value(int n, std::span<const double> coeffs, double t) {
  const auto p = gegenbauer_values(n, static_cast<int>(coeffs.size()), t);
  double f = 1.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) f += coeffs[k] * p[k + 1];
  return f;
}

namespace detail {

struct ScanResult {
  double max_value = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, double>> violated;  // (value, t), largest first
};

// Golden-section maximization of f on [a, b].
template <class Fn>
std::pair<double, double> golden_max(Fn&& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

inline ScanResult dense_scan(int n, std::span<const double> coeffs, double lo, double hi,
                             std::size_t samples, double tolerance, const std::stop_token& stop) {
  auto f = [&](double t) { return lp_polynomial_value(n, coeffs, t); };
  std::vector<double> ts(samples);
  std::vector<double> fs(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    ts[i] = i + 1 == samples ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    fs[i] = f(ts[i]);
  }
  ScanResult out;
  for (std::size_t i = 0; i < samples; ++i) {
    if (i % 4096 == 0) throw_if_cancelled(stop);
    out.max_value = std::max(out.max_value, fs[i]);
    const bool left_ok = i == 0 || fs[i] >= fs[i - 1];
    const bool right_ok = i + 1 == samples || fs[i] >= fs[i + 1];
    if (!(left_ok && right_ok)) continue;
    double t_best = ts[i];
    double f_best = fs[i];
    if (i > 0 && i + 1 < samples) {
      const auto [t, v] = golden_max(f, ts[i - 1], ts[i + 1]);
      if (v > f_best) {
        t_best = t;
        f_best = v;
      }
    }
    out.max_value = std::max(out.max_value, f_best);
    if (f_best > tolerance) out.violated.emplace_back(f_best, t_best);
  }
  std::sort(out.violated.begin(), out.violated.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  return out;
}

}  // namespace detail

inline LPResult lp_bound(int n, double tau, int degree, const LPOptions& opt = {},
                         const std::stop_token& stop = {}) {
  if (n < 2) throw std::invalid_argument("lp_bound: dimension must be >= 2");
  if (degree < 1) throw std::invalid_argument("lp_bound: degree must be >= 1");
  if (!(tau > -1.0 && tau < 1.0)) throw std::invalid_argument("lp_bound: tau must lie in (-1, 1)");

  LPResult res;
  res.dim = n;
  res.tau = tau;
  res.degree = degree;
  const auto k = static_cast<Eigen::Index>(degree);

  std::vector<double> grid =
      chebyshev_grid(-1.0, tau, std::max<std::size_t>(4 * static_cast<std::size_t>(degree), 64));
  Eigen::MatrixXd a(k, 0);
  auto append_columns = [&](std::span<const double> ts) {
    const Eigen::Index old = a.cols();
    a.conservativeResize(k, old + static_cast<Eigen::Index>(ts.size()));
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const auto p = gegenbauer_values(n, degree, ts[j]);
      for (Eigen::Index r = 0; r < k; ++r) a(r, old + static_cast<Eigen::Index>(j)) = -p[static_cast<std::size_t>(r + 1)];
    }
  };
  append_columns(grid);
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(k);

  std::vector<int> basis;
  for (int round = 0;; ++round) {
    throw_if_cancelled(stop);
    const Eigen::VectorXd obj = Eigen::VectorXd::Ones(a.cols());
    const SimplexResult sx = simplex_maximize(a, obj, rhs, opt.simplex, basis);
    res.simplex_iterations += sx.iterations;
    res.refinement_rounds = round;
    res.grid_size = grid.size();
    if (sx.status == SimplexStatus::unbounded) {
      res.status = LPStatus::infeasible_grid;
      res.coeffs.clear();
      res.bound = std::numeric_limits<double>::infinity();
      return res;
    }
    if (sx.status == SimplexStatus::iteration_limit) {
      res.status = LPStatus::iteration_limit;
      return res;
    }
    basis = sx.basis;
    res.coeffs.assign(static_cast<std::size_t>(k), 0.0);
    double sum = 0.0;
    for (Eigen::Index r = 0; r < k; ++r) {
      res.coeffs[static_cast<std::size_t>(r)] = std::max(0.0, sx.duals(r));
      sum += res.coeffs[static_cast<std::size_t>(r)];
    }
    res.bound = 1.0 + sum;

    const auto scan = detail::dense_scan(n, res.coeffs, -1.0, tau, opt.dense_samples, opt.tolerance, stop);
    res.violation = scan.max_value;
    if (scan.violated.empty() && res.violation <= opt.tolerance) {
      res.status = LPStatus::optimal;
      return res;
    }
    if (round >= opt.max_rounds) {
      res.status = LPStatus::iteration_limit;
      return res;
    }
    std::vector<double> fresh;
    for (const auto& [value, t] : scan.violated) {
      if (fresh.size() >= opt.max_new_points) break;
      if (std::find(grid.begin(), grid.end(), t) != grid.end()) continue;
      fresh.push_back(t);
    }
    if (fresh.empty()) {
      // Violations sit exactly on grid points: the LP cannot do better here.
      res.status = LPStatus::iteration_limit;
      return res;
    }
    grid.insert(grid.end(), fresh.begin(), fresh.end());
    append_columns(fresh);
  }
}

/// Best rational approximation with denominator <= cap (continued fractions
/// with the final semiconvergent).
inline Rational best_rational(double x, const Integer& cap) {
  if (!std::isfinite(x)) throw std::invalid_argument("best_rational: non-finite input");
  if (cap < 1) throw std::invalid_argument("best_rational: cap must be >= 1");
  Rational r(x);  // exact binary value
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = r;
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
    const Integer p2 = a * p1 + p0;
    const Integer q2 = a * q1 + q0;
    if (q2 > cap) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Rational frac = rest - Rational(a);
    if (frac == 0) return Rational(p1, q1);
    rest = 1 / frac;
  }
  // Semiconvergent p0 + t p1 over q0 + t q1 with the largest admissible t.
  const Integer t = (cap - q0) / q1;
  Rational semi(p0 + t * p1, q0 + t * q1);
  semi.canonicalize();
  Rational conv(p1, q1);
  conv.canonicalize();
  return abs(semi - r) < abs(conv - r) ? semi : conv;
}

struct RationalizeResult {
  std::optional<Certificate> certificate;
  std::vector<Rational> coeffs;  // c_0..c_K after rounding
  MembershipReport membership;
  std::string failure;  // names the violated membership condition
};

inline RationalizeResult rationalize_certificate(const LPResult& r, int n, const ExactScalar& tau_exact,
                                                 const Integer& denominator_cap,
                                                 const std::stop_token& stop = {}) {
  if (r.status != LPStatus::optimal) throw PreconditionError("rationalize_certificate: LP result is not optimal");
  RationalizeResult out;
  out.coeffs.emplace_back(1);
  for (double c : r.coeffs) {
    out.coeffs.push_back(std::abs(c) < 1e-9 ? Rational(0) : best_rational(c, denominator_cap));
  }
  std::vector<ExactScalar> exact;
  for (const auto& q : out.coeffs) exact.emplace_back(q);
  Certificate cert = Certificate::from_gegenbauer(n, tau_exact, std::move(exact));
  out.membership = check_membership(cert, stop);
  if (!out.membership.member) {
    out.failure = !out.membership.coefficients_ok
                      ? "condition (i): " + out.membership.failure
                      : "condition (ii): " + out.membership.failure;
    return out;
  }
  out.certificate = std::move(cert);
  return out;
}

}  // namespace tammes
