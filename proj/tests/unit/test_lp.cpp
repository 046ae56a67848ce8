#include <gtest/gtest.h>

#include <cmath>
#include <optional>

#include "spnkit/error.hpp"
#include "spnkit/generators.hpp"
#include "spnkit/lp.hpp"

using namespace spnkit;

namespace {

// Brute-force LP over x >= 0 with rows . x >= rhs in two or three variables:
// every vertex is the solution of n tight constraints drawn from the rows and
// the bounds. Returns the least objective over feasible vertices.
std::optional<double> vertex_enumeration(const LpProblem& p) {
  const std::size_t n = p.num_vars;
  std::vector<std::vector<double>> rows = p.rows;
  std::vector<double> rhs = p.rhs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    rows.push_back(e);
    rhs.push_back(0.0);
  }
  const std::size_t m = rows.size();
  std::optional<double> best;
  std::vector<std::size_t> pick(n);
  const auto solve = [&]() -> std::optional<std::vector<double>> {
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a[r][c] = rows[pick[r]][c];
      a[r][n] = rhs[pick[r]];
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
      if (std::abs(a[piv][c]) < 1e-12) return std::nullopt;
      std::swap(a[c], a[piv]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        const double f = a[r][c] / a[c][c];
        for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
      }
    }
    std::vector<double> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = a[r][n] / a[r][r];
    return x;
  };
  const auto visit = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == n) {
      auto x = solve();
      if (!x) return;
      for (std::size_t r = 0; r < m; ++r) {
        double lhs = 0.0;
        for (std::size_t c = 0; c < n; ++c) lhs += rows[r][c] * (*x)[c];
        if (lhs < rhs[r] - 1e-9) return;
      }
      double obj = 0.0;
      for (std::size_t c = 0; c < n; ++c) obj += p.objective[c] * (*x)[c];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (std::size_t r = start; r < m; ++r) {
      pick[depth] = r;
      self(self, depth + 1, r + 1);
    }
  };
  visit(visit, 0, 0);
  return best;
}

}  // namespace

TEST(Lp, SmallKnownOptimum) {
  // min x + y  s.t. x + 2y >= 4, 3x + y >= 6.
  LpProblem p{2, {{1, 2}, {3, 1}}, {4, 6}, {1, 1}};
  const LpResult r = solve_lp(p);
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x[0], 1.6, 1e-12);
  EXPECT_NEAR(r.x[1], 1.2, 1e-12);
}

TEST(Lp, DetectsInfeasibility) {
  // x >= 2 and -x >= -1.
  LpProblem p{1, {{1}, {-1}}, {2, -1}, {1}};
  EXPECT_FALSE(solve_lp(p).feasible);
}

TEST(Lp, UnboundedPhaseTwoThrows) {
  LpProblem p{2, {{1, -1}}, {1}, {-1, 0}};
  try {
    solve_lp(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LpNumericalFailure);
  }
}

TEST(Lp, FeasibilityOnlyWithoutObjective) {
  LpProblem p{2, {{1, 1}, {1, -1}}, {1, 0}, {}};
  const LpResult r = solve_lp(p);
  ASSERT_TRUE(r.feasible);
  EXPECT_GE(r.x[0] + r.x[1], 1.0 - 1e-9);
  EXPECT_GE(r.x[0] - r.x[1], -1e-9);
}

TEST(Lp, MatchesVertexEnumeration) {
  Rng rng(31);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> cost(0.1, 3.0);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    LpProblem p;
    p.num_vars = 2 + t % 2;
    const std::size_t m = 2 + t % 4;
    for (std::size_t r = 0; r < m; ++r) {
      std::vector<double> row(p.num_vars);
      for (double& v : row) v = coef(rng);
      p.rows.push_back(row);
      p.rhs.push_back(coef(rng));
    }
    // Positive costs over x >= 0 keep every instance bounded.
    for (std::size_t j = 0; j < p.num_vars; ++j) p.objective.push_back(cost(rng));
    const auto oracle = vertex_enumeration(p);
    const LpResult r = solve_lp(p);
    ASSERT_EQ(r.feasible, oracle.has_value()) << t;
    if (!oracle) continue;
    ++feasible;
    double obj = 0.0;
    for (std::size_t j = 0; j < p.num_vars; ++j) obj += p.objective[j] * r.x[j];
    EXPECT_NEAR(obj, *oracle, 1e-8 * (1.0 + std::abs(*oracle))) << t;
  }
  EXPECT_GT(feasible, 100);
}

TEST(Lp, DegenerateInstanceTerminates) {
  // Many redundant constraints through the same vertex.
  LpProblem p;
  p.num_vars = 3;
  for (int k = 1; k <= 30; ++k) {
    p.rows.push_back({1.0, static_cast<double>(k), static_cast<double>(k * k % 7)});
    p.rhs.push_back(0.0);
  }
  p.rows.push_back({1, 1, 1});
  p.rhs.push_back(1.0);
  p.objective = {1, 2, 3};
  const LpResult r = solve_lp(p);
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x[0], 1.0, 1e-9);
}
