#include "tammes/simplex.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using tammes::SimplexStatus;

TEST(Simplex, TextbookProblem) {
  // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18.
  Eigen::MatrixXd a(3, 2);
  a << 1, 0, 0, 2, 3, 2;
  const Eigen::Vector2d c(3, 5);
  const Eigen::Vector3d b(4, 12, 18);
  const auto r = tammes::simplex_maximize(a, c, b);
  ASSERT_EQ(r.status, SimplexStatus::optimal);
  EXPECT_NEAR(r.objective, 36.0, 1e-12);
  EXPECT_NEAR(r.primal(0), 2.0, 1e-12);
  EXPECT_NEAR(r.primal(1), 6.0, 1e-12);
  // Dual optimum: b.pi equals the primal objective, pi >= 0.
  EXPECT_NEAR(b.dot(r.duals), 36.0, 1e-12);
  EXPECT_TRUE((r.duals.array() >= -1e-12).all());
  // Row 0 stays slack at the optimum.
  EXPECT_NE(std::find(r.basis.begin(), r.basis.end(), -1), r.basis.end());
}

TEST(Simplex, MatchesVertexEnumeration) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 3.0);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 2 + trial % 4;
    const int n = 2 + (trial / 4) % 4;
    Eigen::MatrixXd a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = u(rng);
    // A positive row keeps the problem bounded.
    for (int j = 0; j < n; ++j) a(0, j) = pos(rng);
    Eigen::VectorXd c(n), b(m);
    for (int j = 0; j < n; ++j) c(j) = u(rng);
    for (int i = 0; i < m; ++i) b(i) = pos(rng);
    const auto r = tammes::simplex_maximize(a, c, b);
    ASSERT_EQ(r.status, SimplexStatus::optimal);
    const double best = std::max(0.0, oracle::lp_max_by_vertices(a, c, b));
    EXPECT_NEAR(r.objective, best, 1e-8 * std::max(1.0, std::abs(best)));
    EXPECT_TRUE(((a * r.primal - b).array() <= 1e-9).all());
    EXPECT_NEAR(b.dot(r.duals), r.objective, 1e-8 * std::max(1.0, std::abs(best)));
    ++compared;
  }
  EXPECT_EQ(compared, 150);
}

TEST(Simplex, DetectsUnbounded) {
  Eigen::MatrixXd a(1, 2);
  a << 1, -1;
  const auto r = tammes::simplex_maximize(a, Eigen::Vector2d(0, 1), Eigen::VectorXd::Ones(1));
  EXPECT_EQ(r.status, SimplexStatus::unbounded);
}

TEST(Simplex, DegenerateRhsTerminates) {
  // Zero right-hand sides everywhere: Bland's rule must not cycle.
  Eigen::MatrixXd a(3, 4);
  a << 0.5, -5.5, -2.5, 9, 0.5, -1.5, -0.5, 1, 1, 0, 0, 0;
  Eigen::Vector3d b(0, 0, 1);
  Eigen::Vector4d c(10, -57, -9, -24);
  const auto r = tammes::simplex_maximize(a, c, b);
  ASSERT_EQ(r.status, SimplexStatus::optimal);
  EXPECT_NEAR(r.objective, 1.0, 1e-12);
}

TEST(Simplex, WarmStartAfterAddingColumns) {
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 3, 1;
  const Eigen::Vector2d b(4, 6);
  const auto first = tammes::simplex_maximize(a, Eigen::Vector2d(1, 1), b);
  ASSERT_EQ(first.status, SimplexStatus::optimal);
  Eigen::MatrixXd wider(2, 3);
  wider << a, Eigen::Vector2d(1, 1);
  const Eigen::Vector3d c(1, 1, 1.5);
  const auto cold = tammes::simplex_maximize(wider, c, b);
  const auto warm = tammes::simplex_maximize(wider, c, b, {}, first.basis);
  ASSERT_EQ(warm.status, SimplexStatus::optimal);
  EXPECT_NEAR(warm.objective, cold.objective, 1e-12);
  EXPECT_LE(warm.iterations, cold.iterations);
}

TEST(Simplex, IterationLimit) {
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 3, 1;
  tammes::SimplexOptions opt;
  opt.max_iterations = 1;
  const auto r = tammes::simplex_maximize(a, Eigen::Vector2d(1, 1), Eigen::Vector2d(4, 6), opt);
  EXPECT_EQ(r.status, SimplexStatus::iteration_limit);
}

TEST(Simplex, RejectsBadInput) {
  Eigen::MatrixXd a(2, 2);
  a << 1, 0, 0, 1;
  EXPECT_THROW(tammes::simplex_maximize(a, Eigen::Vector2d(1, 1), Eigen::Vector2d(-1, 1)), std::invalid_argument);
  EXPECT_THROW(tammes::simplex_maximize(a, Eigen::Vector3d(1, 1, 1), Eigen::Vector2d(1, 1)), std::invalid_argument);
  EXPECT_THROW(tammes::simplex_maximize(a, Eigen::Vector2d(1, 1), Eigen::Vector2d(1, 1), {}, {0}),
               std::invalid_argument);
}
