#include "spnkit/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "spnkit/classes.hpp"
#include "spnkit/error.hpp"
#include "spnkit/linalg.hpp"

namespace spnkit {

const char* to_string(OrbitMethod method) {
  switch (method) {
    case OrbitMethod::RescaleOnly: return "RescaleOnly";
    case OrbitMethod::PermuteOnly: return "PermuteOnly";
    case OrbitMethod::Joint: return "Joint";
  }
  return "Unknown";
}

namespace {

int sign_of(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

// A positive rescaling keeps signs, so a row of an M_n member must read
// negatives, then zeros, then positives.
bool rows_sign_monotone(const SymMatrix& a, const std::vector<std::size_t>& perm, double eps) {
  const std::size_t n = a.n();
  for (std::size_t r = 0; r < n; ++r) {
    int last = -1;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == r) continue;
      const int sg = sign_of(a(perm[r], perm[s]), eps);
      if (sg < last) return false;
      last = sg;
    }
  }
  return true;
}

}  // namespace

LpProblem rescale_lp(const SymMatrix& a) {
  const std::size_t n = a.n();
  LpProblem lp;
  lp.num_vars = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(n, 0.0);
    row[i] = 1.0;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(1.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t prev = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      if (prev != n) {
        std::vector<double> row(n, 0.0);
        row[k] += a(i, k);
        row[prev] -= a(i, prev);
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(0.0);
      }
      prev = k;
    }
  }
  lp.objective.assign(n, 1.0);
  return lp;
}

std::optional<LpProblem> rescale_lp_log(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.n();
  const std::size_t t = n;
  LpProblem lp;
  lp.num_vars = n + 1;
  const auto difference = [&](std::size_t hi, std::size_t lo, double rhs) {
    std::vector<double> row(n + 1, 0.0);
    row[hi] = 1.0;
    row[lo] = -1.0;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(rhs);
  };
  for (std::size_t i = 0; i < n; ++i) difference(t, i, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      if (j != n) {
        // Need a_ij d_j <= a_ik d_k.
        const int sj = sign_of(a(i, j), tol.eps_ord);
        const int sk = sign_of(a(i, k), tol.eps_ord);
        if (sj > 0 && sk > 0) {
          difference(k, j, std::log(a(i, j) / a(i, k)));
        } else if (sj < 0 && sk < 0) {
          difference(j, k, std::log(a(i, k) / a(i, j)));
        } else if (sj > sk) {
          return std::nullopt;
        }
      }
      j = k;
    }
  }
  lp.objective.assign(n + 1, 0.0);
  lp.objective[t] = 1.0;
  return lp;
}

OrbitResult rescale_into_Mn(const SymMatrix& a, const Tolerances& tol) {
  OrbitResult out;
  out.method = OrbitMethod::RescaleOnly;
  const std::optional<LpProblem> problem = rescale_lp_log(a, tol);
  if (!problem) return out;
  const LpResult lp = solve_lp(*problem);
  if (!lp.feasible) return out;
  std::vector<double> d(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) d[i] = std::exp(lp.x[i]);
  GroupElement g = GroupElement::scaling(std::move(d));
  if (!is_Mn(apply_group(g, a), tol)) {
    throw Error(ErrorKind::LpNumericalFailure,
                "rescaling LP reported feasibility but the scaled matrix fails the M_n check");
  }
  out.found = true;
  out.witness = std::move(g);
  return out;
}

OrbitResult permute_into_Mn(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.n();
  OrbitResult out;
  out.method = OrbitMethod::PermuteOnly;
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (a(i, j) < a(i, k) - tol.eps_ord) arc[j][k] = true;
      }
    }
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (arc[j][k]) ++indegree[k];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t k = 0; k < n; ++k)
      if (arc[v][k] && --indegree[k] == 0) ready.push(k);
  }
  if (order.size() != n) return out;
  out.found = true;
  out.witness = GroupElement::permutation(std::move(order));
  return out;
}

OrbitResult joint_orbit_search(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.n();
  if (n > kMaxJointDim) {
    throw Error(ErrorKind::DimensionTooLarge,
                "exhaustive orbit search is limited to n <= " + std::to_string(kMaxJointDim));
  }
  OrbitResult out;
  out.method = OrbitMethod::Joint;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // A permutation whose scaling cannot be verified in floating point is
  // skipped; "not found" is only reported when every candidate was decided.
  std::optional<Error> numerical;
  do {
    if (!rows_sign_monotone(a, perm, tol.eps_ord)) continue;
    const GroupElement p = GroupElement::permutation(perm);
    try {
      const OrbitResult scaled = rescale_into_Mn(apply_group(p, a), tol);
      if (scaled.found) {
        out.found = true;
        out.witness = p * *scaled.witness;
        return out;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::LpNumericalFailure) throw;
      if (!numerical) numerical = e;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (numerical) throw *numerical;
  return out;
}

SymMatrix kn_generator(const KnGenerator& spec) {
  using Kind = KnGenerator::Kind;
  switch (spec.kind) {
    case Kind::UnitPair: {
      if (spec.i >= spec.n || spec.j >= spec.n || spec.i == spec.j) {
        throw Error(ErrorKind::InvalidParams, "unit pair needs two distinct indices below n");
      }
      std::vector<double> m(spec.n * spec.n, 0.0);
      m[spec.i * spec.n + spec.j] = 1.0;
      m[spec.j * spec.n + spec.i] = 1.0;
      return SymMatrix(spec.n, std::move(m));
    }
    case Kind::RankOneSignedVector: {
      const auto& v = spec.values;
      if (v.empty()) throw Error(ErrorKind::InvalidParams, "empty vector");
      std::size_t neg = 0, pos = 0;
      for (double x : v) {
        if (!std::isfinite(x) || x == 0.0) {
          throw Error(ErrorKind::InvalidParams, "vector entries must be finite and nonzero");
        }
        (x < 0 ? neg : pos) += 1;
      }
      if (neg > 1 && pos > 1) {
        throw Error(ErrorKind::InvalidParams,
                    "v or -v must have at most one negative entry");
      }
      return SymMatrix::outer(v);
    }
    case Kind::RankOnePlusMinus: {
      if (spec.i >= spec.n || spec.j >= spec.n || spec.i == spec.j) {
        throw Error(ErrorKind::InvalidParams, "plus-minus pair needs two distinct indices below n");
      }
      double p = 1.0, q = 1.0;
      if (!spec.values.empty()) {
        if (spec.values.size() != 2) {
          throw Error(ErrorKind::InvalidParams, "expected two magnitudes");
        }
        p = spec.values[0];
        q = spec.values[1];
      }
      if (!(p > 0) || !(q > 0) || !std::isfinite(p) || !std::isfinite(q)) {
        throw Error(ErrorKind::InvalidParams, "magnitudes must be positive and finite");
      }
      std::vector<double> v(spec.n, 0.0);
      v[spec.i] = p;
      v[spec.j] = -q;
      return SymMatrix::outer(v);
    }
  }
  throw Error(ErrorKind::InvalidParams, "unknown generator kind");
}

}  // namespace spnkit
