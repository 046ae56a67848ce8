#pragma once

#include <cstddef>
#include <vector>

namespace spnkit {

/// Rows encode coefficients . x >= rhs over variables x >= 0.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  /// Minimised in phase two when non-empty; phase one alone decides feasibility.
  std::vector<double> objective;
};

struct LpResult {
  bool feasible = false;
  std::vector<double> x;
  std::size_t pivots = 0;
};

/// Dense two-phase simplex. Ratio ties go to the largest pivot element, and to
/// Bland's rule after a long degenerate run. Feasibility is declared when the
/// phase-one optimum is at most 1e-9. Throws LpNumericalFailure when the pivot
/// budget runs out, phase two is unbounded, or the returned point fails a
/// recheck against the original rows.
LpResult solve_lp(const LpProblem& problem, std::size_t max_pivots = 100000);

}  // namespace spnkit
