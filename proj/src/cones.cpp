#include "spnkit/cones.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "spnkit/classes.hpp"
#include "spnkit/error.hpp"
#include "spnkit/linalg.hpp"

namespace spnkit {

std::string TraceStep::to_string() const {
  switch (kind) {
    case Kind::StripRow: return "StripRow(" + std::to_string(index) + ")";
    case Kind::SchurStep: return "SchurStep(" + std::to_string(index) + ")";
    case Kind::BaseCase: return "BaseCase(" + std::to_string(index) + ")";
  }
  return "?";
}

namespace {

double quadratic_form(const SymMatrix& a, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.n(); ++j) row += a(i, j) * x[j];
    s += x[i] * row;
  }
  return s;
}

double entry_sum(const SymMatrix& x) {
  const auto d = x.data();
  return std::accumulate(d.begin(), d.end(), 0.0);
}

std::optional<DnnWitness> try_witness(const SymMatrix& a, const SymMatrix& y,
                                      const Tolerances& tol) {
  auto x = to_dnn(y, tol);
  if (!x) return std::nullopt;
  const double obj = inner(a, *x);
  if (obj < -tol.eps_feas) return DnnWitness{std::move(*x), obj};
  return std::nullopt;
}

SpnCertificate make_certificate(const SymMatrix& a, SymMatrix p, SymMatrix n,
                                std::vector<TraceStep> trace) {
  const double residual = (a - p - n).frobenius_norm();
  return SpnCertificate{std::move(p), std::move(n), residual, std::move(trace)};
}

// Projection onto {X PSD, X >= 0, E.X = 1} by Dykstra's method over the three
// sets. `calls` counts eigendecompositions.
SymMatrix project_dnn_simplex(const SymMatrix& z, int sweeps, const Tolerances& tol,
                              std::size_t& calls) {
  const std::size_t n = z.n();
  const double nn = static_cast<double>(n * n);
  SymMatrix x = z;
  SymMatrix p1 = SymMatrix::zeros(n), p2 = SymMatrix::zeros(n), p3 = SymMatrix::zeros(n);
  for (int s = 0; s < sweeps; ++s) {
    SymMatrix y = project_psd(x + p1, tol);
    ++calls;
    p1 = x + p1 - y;
    SymMatrix w = clamp_nonnegative(y + p2);
    p2 = y + p2 - w;
    SymMatrix v = w + p3;
    v = v.shifted((1.0 - entry_sum(v)) / nn);
    p3 = w + p3 - v;
    x = v;
  }
  return x;
}

// Calls visit(x, x^T A x) for the KKT point of every support of the simplex
// whose stationarity system has a nonnegative solution. Returns the number of
// supports examined.
template <class Visit>
std::size_t for_each_stationary_point(const SymMatrix& a, const Tolerances& tol, Visit&& visit) {
  const std::size_t n = a.n();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  if (n > kMaxEnumerationDim) {
    throw Error(ErrorKind::DimensionTooLarge,
                "support enumeration is limited to n <= " + std::to_string(kMaxEnumerationDim));
  }
  std::vector<std::size_t> support;
  std::vector<double> x(n);
  const std::uint32_t count = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= count; ++mask) {
    support.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) support.push_back(i);
    const std::size_t s = support.size();
    // [A_S e; e^T 0] [x; -mu] = [0; 1]
    std::vector<double> k((s + 1) * (s + 1), 0.0);
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < s; ++c) k[r * (s + 1) + c] = a(support[r], support[c]);
      k[r * (s + 1) + s] = 1.0;
      k[s * (s + 1) + r] = 1.0;
    }
    std::vector<double> rhs(s + 1, 0.0);
    rhs[s] = 1.0;
    std::vector<double> sol;
    if (s == 1) {
      sol = {1.0};
    } else {
      sol = solve_symmetric(SymMatrix(s + 1, std::move(k)), rhs, tol);
    }
    bool feasible = true;
    double total = 0.0;
    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t r = 0; r < s; ++r) {
      if (!(sol[r] >= -tol.eps_feas)) {
        feasible = false;
        break;
      }
      x[support[r]] = std::max(sol[r], 0.0);
      total += x[support[r]];
    }
    if (!feasible || !(total > 0.0)) continue;
    for (double& xi : x) xi /= total;
    visit(x, quadratic_form(a, x));
  }
  return count;
}

// Douglas-Rachford for B = A - zE, z the simplex minimum of A, restricted to
// the face that every decomposition of B must lie on: for each zero x of
// x^T B x on the simplex, P x = 0 and N vanishes on supp(x) x supp(x). On that
// face the problem is usually well conditioned even when A is nearly
// degenerate. The shift zE is returned inside the nonnegative part.
std::optional<SpnCertificate> face_decomposition(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.n();
  double z = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::vector<double>, double>> points;
  for_each_stationary_point(a, tol, [&](const std::vector<double>& x, double v) {
    z = std::min(z, v);
    points.emplace_back(x, v);
  });
  const SymMatrix b = a.shifted(-z);
  const double zero_tol = 1e-12 * (1.0 + a.frobenius_norm());
  std::vector<double> gram(n * n, 0.0);
  std::vector<bool> free(n * n, true);
  for (const auto& [x, v] : points) {
    if (v - z > zero_tol) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        gram[i * n + j] += x[i] * x[j];
        if (x[i] > 0.0 && x[j] > 0.0) free[i * n + j] = false;
      }
    }
  }
  // Columns of `v` span the orthogonal complement of the zeros.
  const EigenDecomposition g = sym_eigen(SymMatrix(n, gram), tol);
  const double g_tol = 1e-10 * std::max(g.values.back(), 1.0);
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < n; ++k)
    if (g.values[k] <= g_tol) kept.push_back(k);
  const std::size_t m = kept.size();
  const auto project_face = [&](const SymMatrix& y) {
    if (m == 0) return SymMatrix::zeros(n);
    std::vector<double> w(m * m, 0.0);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            s += g.vector_entry(i, kept[r]) * y(i, j) * g.vector_entry(j, kept[c]);
        w[r * m + c] = s;
      }
    const SymMatrix wp = project_psd(SymMatrix(m, std::move(w)), tol);
    std::vector<double> out(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            s += g.vector_entry(i, kept[r]) * wp(r, c) * g.vector_entry(j, kept[c]);
        out[i * n + j] = s;
      }
    return SymMatrix(n, std::move(out));
  };
  const auto project_nonneg = [&](const SymMatrix& y) {
    std::vector<double> out(y.data().begin(), y.data().end());
    for (std::size_t k = 0; k < n * n; ++k) out[k] = free[k] ? std::max(out[k], 0.0) : 0.0;
    return SymMatrix(n, std::move(out));
  };

  const double target = tol.eps_feas * (1.0 + a.frobenius_norm());
  SymMatrix state = project_nonneg(b);
  for (int it = 1; it <= tol.max_iter; ++it) {
    const SymMatrix shadow = project_nonneg(state);
    SymMatrix psd = project_face(b - (2.0 * shadow - state));
    const SymMatrix rest = b - psd;
    const SymMatrix nn = project_nonneg(rest);
    if ((rest - nn).frobenius_norm() <= target) {
      return make_certificate(a, std::move(psd), nn.shifted(z), {});
    }
    state = state + rest - shadow;
  }
  return std::nullopt;
}

struct Recursion {
  const Tolerances& tol;
  std::vector<TraceStep> trace;

  // Returns (P, N) for `m`, whose rows are rows `ids` of the original input.
  std::pair<SymMatrix, SymMatrix> run(const SymMatrix& m, const std::vector<std::size_t>& ids) {
    const std::size_t n = m.n();
    if (n <= 4) {
      SpnOutcome out = spn_oracle(m, tol);
      if (std::holds_alternative<DnnWitness>(out)) {
        throw Error(ErrorKind::InvalidArgument,
                    "a reduced block is not SPN, so the input is not copositive");
      }
      trace.push_back({TraceStep::Kind::BaseCase, n});
      auto& c = std::get<SpnCertificate>(out);
      return {std::move(c.psd_part), std::move(c.nonneg_part)};
    }
    const RowSignSummary rows = row_sign_summary(m, tol);
    std::vector<std::size_t> rest;
    if (!rows.nonneg_rows.empty()) {
      const std::size_t i = rows.nonneg_rows.back();
      if (m(i, i) < -tol.eps_ord) {
        throw Error(ErrorKind::InvalidArgument, "negative diagonal entry, input is not copositive");
      }
      trace.push_back({TraceStep::Kind::StripRow, ids[i]});
      for (std::size_t r = 0; r < n; ++r)
        if (r != i) rest.push_back(r);
      auto [p_sub, n_sub] = run(delete_row_col(m, i), pick(ids, rest));
      SymMatrix p = embed(p_sub, rest, n);
      std::vector<double> row_part(n * n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        row_part[i * n + j] = m(i, j);
        row_part[j * n + i] = m(i, j);
      }
      SymMatrix nn = embed(n_sub, rest, n) + SymMatrix(n, std::move(row_part));
      return {std::move(p), std::move(nn)};
    }
    for (std::size_t i : rows.strictly_neg_rows) {
      if (m(i, i) <= tol.eps_ord) {
        throw Error(ErrorKind::InvalidArgument,
                    "row with negative entries has a nonpositive diagonal, input is not copositive");
      }
    }
    if (rows.strictly_neg_rows.empty()) {
      throw Error(ErrorKind::NotInSupportedClass,
                  "no row with uniform off-diagonal sign at size " + std::to_string(n));
    }
    const std::size_t i = rows.strictly_neg_rows.front();
    trace.push_back({TraceStep::Kind::SchurStep, ids[i]});
    for (std::size_t r = 0; r < n; ++r)
      if (r != i) rest.push_back(r);
    auto [p_sub, n_sub] = run(schur_complement(m, i, tol), pick(ids, rest));
    const double pivot = m(i, i);
    const auto v = m.row(i);
    std::vector<double> rank_one(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) rank_one[r * n + c] = v[r] * v[c] / pivot;
    rank_one[i * n + i] = pivot;
    SymMatrix p = SymMatrix(n, std::move(rank_one)) + embed(p_sub, rest, n);
    return {std::move(p), embed(n_sub, rest, n)};
  }

  static std::vector<std::size_t> pick(const std::vector<std::size_t>& ids,
                                       const std::vector<std::size_t>& rows) {
    std::vector<std::size_t> out;
    out.reserve(rows.size());
    for (std::size_t r : rows) out.push_back(ids[r]);
    return out;
  }
};

}  // namespace

SimplexMinimum simplex_minimum(const SymMatrix& a, const Tolerances& tol) {
  SimplexMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  best.faces_examined = for_each_stationary_point(a, tol, [&](const std::vector<double>& x, double v) {
    if (v < best.value) {
      best.value = v;
      best.minimizer = x;
    }
  });
  return best;
}

std::optional<SymMatrix> to_dnn(const SymMatrix& y, const Tolerances& tol) {
  SymMatrix x = clamp_nonnegative(y);
  const double lam = min_eigenvalue(x, tol);
  if (lam < 0.0) x = x.diagonal_shifted(-lam * (1.0 + 1e-12) + 1e-300);
  const double s = entry_sum(x);
  if (!(s > 0.0) || !std::isfinite(s)) return std::nullopt;
  return (1.0 / s) * x;
}

CopositivityReport copositive_oracle(const SymMatrix& a, const Tolerances& tol) {
  SimplexMinimum m = simplex_minimum(a, tol);
  CopositivityReport out;
  out.min_value = m.value;
  out.minimizer = std::move(m.minimizer);
  out.copositive = m.value >= -tol.eps_psd;
  out.faces_examined = m.faces_examined;
  return out;
}

SpnOutcome spn_oracle(const SymMatrix& a, const Tolerances& tol, SpnWarmStart* warm) {
  const std::size_t n = a.n();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  if (a.min_entry() >= 0.0) {
    return make_certificate(a, SymMatrix::zeros(n), a, {});
  }
  const EigenDecomposition first = sym_eigen(a, tol);
  if (first.values.front() >= 0.0) {
    return make_certificate(a, a, SymMatrix::zeros(n), {});
  }

  constexpr int kGapEvery = 50;
  constexpr int kColdEvery = 500;
  const double target = tol.eps_feas * (1.0 + a.frobenius_norm());

  SymMatrix state = clamp_nonnegative(a);
  std::vector<double> basis = first.vectors;
  if (warm && warm->state.size() == n * n) {
    state = SymMatrix(n, warm->state);
    if (warm->eigenvectors.size() == n * n) basis = warm->eigenvectors;
  }
  const auto save = [&](const SymMatrix& nn, const std::vector<double>& v, int it) {
    if (!warm) return;
    warm->state.assign(nn.data().begin(), nn.data().end());
    warm->eigenvectors = v;
    warm->iterations += static_cast<std::size_t>(it);
  };

  // `state` is the governing sequence; its clamp is the shadow nonnegative part.
  std::vector<double> clamped(n);
  for (int it = 1; it <= tol.max_iter; ++it) {
    const SymMatrix shadow = clamp_nonnegative(state);
    const SymMatrix m = a - (2.0 * shadow - state);
    const EigenDecomposition eig =
        (it % kColdEvery == 0) ? sym_eigen(m, tol) : sym_eigen(m, basis, tol);
    basis = eig.vectors;
    for (std::size_t k = 0; k < n; ++k) clamped[k] = std::max(eig.values[k], 0.0);
    SymMatrix psd = reconstruct(eig, clamped);
    const SymMatrix rest = a - psd;
    SymMatrix rest_pos = clamp_nonnegative(rest);
    if ((rest - rest_pos).frobenius_norm() <= target) {
      save(state, basis, it);
      return make_certificate(a, std::move(psd), std::move(rest_pos), {});
    }
    if (it % kGapEvery == 0) {
      if (auto w = try_witness(a, shadow - rest, tol)) {
        save(state, basis, it);
        return std::move(*w);
      }
    }
    state = state + rest - shadow;
  }
  save(state, basis, tol.max_iter);
  if (n <= kFaceDim) {
    const SimplexMinimum s = simplex_minimum(a, tol);
    if (s.value < -tol.eps_feas) {
      const SymMatrix x = SymMatrix::outer(s.minimizer);
      const double obj = inner(a, x);
      return DnnWitness{x, obj};
    }
    if (auto c = face_decomposition(a, tol)) return std::move(*c);
  }
  if (auto w = witness_search(a, tol)) return std::move(*w);
  throw Error(ErrorKind::Undecided,
              "SPN oracle found neither a decomposition nor a DNN witness within its budget");
}

std::optional<DnnWitness> witness_search(const SymMatrix& a, const Tolerances& tol,
                                         std::size_t budget) {
  const std::size_t n = a.n();
  const double norm = a.frobenius_norm();
  if (!(norm > 0.0)) return std::nullopt;
  const double step = 1.0 / (2.0 * norm);
  constexpr int kInner = 20;
  SymMatrix x = (1.0 / static_cast<double>(n * n)) * SymMatrix::ones(n);
  SymMatrix avg = SymMatrix::zeros(n);
  std::size_t calls = 0;
  std::size_t k = 0;
  while (calls + kInner <= budget) {
    x = project_dnn_simplex(x - step * a, kInner, tol, calls);
    ++k;
    avg = (1.0 - 1.0 / static_cast<double>(k)) * avg + (1.0 / static_cast<double>(k)) * x;
    if (k % 10 == 0) {
      if (auto w = try_witness(a, x, tol)) return w;
      if (auto w = try_witness(a, avg, tol)) return w;
    }
  }
  return std::nullopt;
}

SpnCertificate spn_decompose_recursive(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.n();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  bool supported = n <= 4 || is_Mn(a, tol) || is_Rn(a, tol);
  for (std::size_t k = 1; !supported && k < n; ++k) supported = is_block_sign(a, k, tol);
  if (!supported) {
    throw Error(ErrorKind::NotInSupportedClass,
                "input is not in M_n, R_n or a block-sign class and n > 4");
  }
  Recursion rec{tol, {}};
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  auto [p, nn] = rec.run(a, ids);
  return make_certificate(a, std::move(p), std::move(nn), std::move(rec.trace));
}

bool validate_certificate(const SymMatrix& a, const SpnCertificate& c, const Tolerances& tol) {
  if (c.psd_part.n() != a.n() || c.nonneg_part.n() != a.n()) return false;
  if (min_eigenvalue(c.psd_part, tol) < -tol.eps_psd) return false;
  if (c.nonneg_part.min_entry() < -tol.eps_feas) return false;
  const double residual = (a - c.psd_part - c.nonneg_part).frobenius_norm();
  const double bound = tol.eps_feas * (1.0 + a.frobenius_norm());
  return residual <= bound && std::abs(residual - c.residual) <= bound;
}

bool validate_witness(const SymMatrix& a, const DnnWitness& w, const Tolerances& tol) {
  if (w.x.n() != a.n()) return false;
  if (w.x.min_entry() < -tol.eps_feas) return false;
  if (min_eigenvalue(w.x, tol) < -tol.eps_psd) return false;
  if (std::abs(entry_sum(w.x) - 1.0) > tol.eps_feas * static_cast<double>(a.n())) return false;
  const double obj = inner(a, w.x);
  return obj < -tol.eps_feas && std::abs(obj - w.objective) <= tol.eps_feas;
}

SpnCertificate pull_back(const SymMatrix& a, const SpnCertificate& c, const GroupElement& g) {
  const GroupElement inv = g.inverse();
  SpnCertificate out;
  out.psd_part = apply_group(inv, c.psd_part);
  out.nonneg_part = apply_group(inv, c.nonneg_part);
  out.trace = c.trace;
  for (TraceStep& s : out.trace)
    if (s.kind != TraceStep::Kind::BaseCase) s.index = g.perm()[s.index];
  out.residual = (a - out.psd_part - out.nonneg_part).frobenius_norm();
  return out;
}

}  // namespace spnkit
