#include "spnkit/lp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spnkit/error.hpp"

namespace spnkit {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-11;
constexpr double kFeasTol = 1e-9;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), cols_(cols), t_(rows * (cols + 1), 0.0), basis_(rows), cost_(cols + 1, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return cols_; }

  // Reduced costs for costs `c` (size cols) given the current basis.
  void price(const std::vector<double>& c) {
    for (std::size_t j = 0; j < cols_; ++j) cost_[j] = c[j];
    cost_[cols_] = 0.0;
    for (std::size_t r = 0; r < m_; ++r) {
      const double cb = c[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= cb * at(r, j);
    }
  }

  // Minimises the priced objective over columns with allowed[j]. Returns
  // false when unbounded. The entering column is the lowest index with a
  // negative reduced cost. Among rows tied in the ratio test the largest
  // pivot element is taken; after a long run of degenerate pivots ties go to
  // the lowest basis index instead, which is Bland's rule and cannot cycle.
  bool optimise(const std::vector<bool>& allowed, std::size_t& pivots, std::size_t max_pivots) {
    constexpr std::size_t kDegenerateRun = 50;
    std::size_t degenerate = 0;
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && cost_[j] < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < m_; ++r) {
        const double a = at(r, enter);
        if (a > kPivotTol) best = std::min(best, std::max(rhs(r), 0.0) / a);
      }
      if (!std::isfinite(best)) return false;
      const bool bland = degenerate >= kDegenerateRun;
      const double slack = 1e-12 * (1.0 + best);
      std::size_t leave = m_;
      for (std::size_t r = 0; r < m_; ++r) {
        const double a = at(r, enter);
        if (a <= kPivotTol || std::max(rhs(r), 0.0) / a > best + slack) continue;
        if (leave == m_ || (bland ? basis_[r] < basis_[leave] : a > at(leave, enter))) leave = r;
      }
      if (++pivots > max_pivots) {
        throw Error(ErrorKind::LpNumericalFailure,
                    "simplex exceeded " + std::to_string(max_pivots) + " pivots");
      }
      degenerate = best <= slack ? degenerate + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (std::size_t k = 0; k < m_; ++k) {
      if (k == r) continue;
      const double f = at(k, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(k, j) -= f * at(r, j);
    }
    const double f = cost_[c];
    if (f != 0.0)
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= f * at(r, j);
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
             t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  double objective() const { return -cost_[cols_]; }

 private:
  std::size_t m_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
  std::vector<double> cost_;
};

}  // namespace

LpResult solve_lp(const LpProblem& problem, std::size_t max_pivots) {
  const std::size_t nv = problem.num_vars;
  const std::size_t m = problem.rows.size();
  if (problem.rhs.size() != m) throw Error(ErrorKind::InvalidArgument, "rhs size mismatch");
  if (!problem.objective.empty() && problem.objective.size() != nv) {
    throw Error(ErrorKind::InvalidArgument, "objective size mismatch");
  }
  // Columns: x (nv), surplus (m), artificial (m).
  const std::size_t cols = nv + 2 * m;
  Tableau t(m, cols);
  std::vector<bool> artificial(cols, false);
  std::vector<double> phase1(cols, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = problem.rows[r];
    if (row.size() != nv) throw Error(ErrorKind::InvalidArgument, "row size mismatch");
    for (double v : row)
      if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "non-finite LP coefficient");
    // Rows are scaled to unit largest coefficient; the surplus absorbs the scale.
    double big = std::abs(problem.rhs[r]);
    for (double v : row) big = std::max(big, std::abs(v));
    const double sign = (problem.rhs[r] >= 0.0 ? 1.0 : -1.0) / (big > 0.0 ? big : 1.0);
    for (std::size_t j = 0; j < nv; ++j) t.at(r, j) = sign * row[j];
    t.at(r, nv + r) = sign > 0.0 ? -1.0 : 1.0;
    t.rhs(r) = sign * problem.rhs[r];
    if (sign > 0.0) {
      const std::size_t a = nv + m + r;
      t.at(r, a) = 1.0;
      artificial[a] = true;
      phase1[a] = 1.0;
      t.basis(r) = a;
    } else {
      t.basis(r) = nv + r;
    }
  }

  LpResult result;
  std::vector<bool> allowed(cols, true);
  t.price(phase1);
  t.optimise(allowed, result.pivots, max_pivots);
  if (t.objective() > kFeasTol) return result;

  // Remove artificials left in the basis at level zero.
  for (std::size_t r = 0; r < t.rows();) {
    if (!artificial[t.basis(r)]) {
      ++r;
      continue;
    }
    std::size_t enter = cols;
    double largest = kPivotTol;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!artificial[j] && std::abs(t.at(r, j)) > largest) {
        enter = j;
        largest = std::abs(t.at(r, j));
      }
    }
    if (enter == cols) {
      t.drop_row(r);
    } else {
      // The artificial sits at a level below kFeasTol; treat it as zero so the
      // pivot cannot push another variable negative.
      t.rhs(r) = 0.0;
      t.pivot(r, enter);
      ++r;
    }
  }

  for (std::size_t j = 0; j < cols; ++j) allowed[j] = !artificial[j];
  if (!problem.objective.empty()) {
    std::vector<double> cost(cols, 0.0);
    for (std::size_t j = 0; j < nv; ++j) cost[j] = problem.objective[j];
    t.price(cost);
    if (!t.optimise(allowed, result.pivots, max_pivots)) {
      throw Error(ErrorKind::LpNumericalFailure, "phase two is unbounded");
    }
  }

  result.feasible = true;
  result.x.assign(nv, 0.0);
  for (std::size_t r = 0; r < t.rows(); ++r)
    if (t.basis(r) < nv) result.x[t.basis(r)] = std::max(t.rhs(r), 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    double lhs = 0.0, scale = std::abs(problem.rhs[r]);
    for (std::size_t j = 0; j < nv; ++j) {
      lhs += problem.rows[r][j] * result.x[j];
      scale = std::max(scale, std::abs(problem.rows[r][j] * result.x[j]));
    }
    if (lhs < problem.rhs[r] - kFeasTol * (1.0 + scale)) {
      throw Error(ErrorKind::LpNumericalFailure,
                  "simplex returned a point violating row " + std::to_string(r));
    }
  }
  return result;
}

}  // namespace spnkit
