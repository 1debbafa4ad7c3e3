#pragma once

// Dense revised simplex for   max obj.y  s.t.  A y <= rhs,  y >= 0
// with rhs >= 0, so the all-slack basis is feasible and no phase 1 is
// needed.  Bland's rule picks both entering and leaving variables.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tammes {

enum class SimplexStatus { optimal, unbounded, iteration_limit };

struct SimplexOptions {
  std::size_t max_iterations = 200000;
  double pricing_tolerance = 1e-11;
  double pivot_tolerance = 1e-11;
};

struct SimplexResult {
  SimplexStatus status = SimplexStatus::iteration_limit;
  double objective = 0.0;
  Eigen::VectorXd primal;  // y, one per column of A
  Eigen::VectorXd duals;   // one per row of A; optimal solution of the dual LP
  std::vector<int> basis;  // column indices; -(i+1) denotes the slack of row i
  std::size_t iterations = 0;
};

/// `warm_basis`, when non-empty, must be a feasible basis for the same rows
/// (e.g. the final basis of a previous solve on a subset of the columns);
/// columns appended since then are simply new candidates.
inline SimplexResult simplex_maximize(const Eigen::MatrixXd& a, const Eigen::VectorXd& obj,
                                      const Eigen::VectorXd& rhs, const SimplexOptions& opt = {},
                                      std::vector<int> warm_basis = {}) {
  const auto m = a.rows();
  const auto n = a.cols();
  if (obj.size() != n || rhs.size() != m) throw std::invalid_argument("simplex: shape mismatch");
  if ((rhs.array() < 0.0).any()) throw std::invalid_argument("simplex: rhs must be nonnegative");

  auto column = [&](int j) -> Eigen::VectorXd {
    if (j < n) return a.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
    e(j - n) = 1.0;
    return e;
  };
  auto cost = [&](int j) { return j < n ? obj(j) : 0.0; };

  SimplexResult res;
  std::vector<int>& basis = res.basis;
  if (!warm_basis.empty()) {
    if (static_cast<Eigen::Index>(warm_basis.size()) != m) throw std::invalid_argument("simplex: bad warm basis");
    basis.clear();
    for (int j : warm_basis) {
      if (j >= n) throw std::invalid_argument("simplex: warm basis column out of range");
      basis.push_back(j < 0 ? static_cast<int>(n) - j - 1 : j);
    }
  } else {
    basis.resize(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = static_cast<int>(n + i);
  }
  std::vector<char> in_basis(static_cast<std::size_t>(n + m), 0);
  for (int j : basis) in_basis[static_cast<std::size_t>(j)] = 1;

  Eigen::MatrixXd b(m, m);
  Eigen::VectorXd cb(m);
  Eigen::VectorXd xb;
  Eigen::VectorXd pi;
  for (res.iterations = 0; res.iterations < opt.max_iterations; ++res.iterations) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const int j = basis[static_cast<std::size_t>(i)];
      b.col(i) = column(j);
      cb(i) = cost(j);
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
    xb = lu.solve(rhs);
    pi = lu.transpose().solve(cb);

    int enter = -1;
    for (int j = 0; j < n + m; ++j) {
      if (in_basis[static_cast<std::size_t>(j)]) continue;
      const double reduced = j < n ? obj(j) - pi.dot(a.col(j)) : -pi(j - n);
      if (reduced > opt.pricing_tolerance) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      res.status = SimplexStatus::optimal;
      break;
    }

    const Eigen::VectorXd u = lu.solve(column(enter));
    Eigen::Index leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (u(i) <= opt.pivot_tolerance) continue;
      const double ratio = std::max(0.0, xb(i)) / u(i);
      const bool tie = leave >= 0 && std::abs(ratio - best) <= 1e-14 * std::max(1.0, best);
      if (ratio < best && !tie) {
        best = ratio;
        leave = i;
      } else if (tie && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]) {
        leave = i;
      }
    }
    if (leave < 0) {
      res.status = SimplexStatus::unbounded;
      break;
    }
    in_basis[static_cast<std::size_t>(basis[static_cast<std::size_t>(leave)])] = 0;
    basis[static_cast<std::size_t>(leave)] = enter;
    in_basis[static_cast<std::size_t>(enter)] = 1;
  }

  if (res.status == SimplexStatus::optimal) {
    res.primal = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) {
      const int j = basis[static_cast<std::size_t>(i)];
      if (j < n) res.primal(j) = std::max(0.0, xb(i));
    }
    res.duals = pi;
    res.objective = obj.dot(res.primal);
  }
  for (int& j : basis) {
    if (j >= n) j = -(j - static_cast<int>(n)) - 1;
  }
  return res;
}

}  // namespace tammes
