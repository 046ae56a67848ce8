#include "spnkit/stqp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "spnkit/error.hpp"
#include "spnkit/linalg.hpp"
#include "spnkit/orbit.hpp"

namespace spnkit {

StqpInstance StqpInstance::raw(SymMatrix q) {
  StqpInstance inst;
  inst.q = std::move(q);
  return inst;
}

const char* to_string(StqpInstance::Provenance p) {
  switch (p) {
    case StqpInstance::Provenance::Raw: return "Raw";
    case StqpInstance::Provenance::Separable: return "Separable";
    case StqpInstance::Provenance::Affine: return "Affine";
  }
  return "Unknown";
}

StqpInstance build_separable(const std::vector<double>& alpha, const std::vector<double>& beta) {
  const std::size_t n = alpha.size();
  if (n == 0 || beta.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "alpha and beta must be non-empty and of equal length");
  }
  std::vector<double> q(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      q[i * n + j] = i == j ? beta[i] + 2.0 * alpha[i] : alpha[i] + alpha[j];
  StqpInstance inst;
  inst.q = SymMatrix(n, std::move(q));
  inst.provenance = StqpInstance::Provenance::Separable;
  inst.alpha = alpha;
  inst.beta = beta;
  return inst;
}

StqpInstance build_affine(const SymMatrix& q_tilde, const std::vector<double>& alpha) {
  const std::size_t n = q_tilde.n();
  if (alpha.size() != n) throw Error(ErrorKind::InvalidArgument, "alpha length must equal n");
  std::vector<double> q(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i * n + j] = q_tilde(i, j) + alpha[i] + alpha[j];
  StqpInstance inst;
  inst.q = SymMatrix(n, std::move(q));
  inst.provenance = StqpInstance::Provenance::Affine;
  inst.alpha = alpha;
  inst.q_tilde = q_tilde;
  return inst;
}

SimplexMinimum z_star_oracle(const StqpInstance& inst, const Tolerances& tol) {
  return simplex_minimum(inst.q, tol);
}

namespace {

// Exact bounds from an unfinished probe at Q - mid S. The clamped iterate N
// and the PSD part of Q - mid S - N certify some lambda below mid; the
// negative spectral part of the same matrix gives a DNN matrix X, and no
// lambda above Q.X / S.X is feasible.
void salvage(const SymMatrix& q, const SymMatrix& shape, bool ones, double mid,
             const SpnWarmStart& warm, const Tolerances& tol, BisectionResult& out) {
  const std::size_t n = q.n();
  if (warm.state.size() != n * n) return;
  const SymMatrix a = q - mid * shape;
  const SymMatrix nn = clamp_nonnegative(SymMatrix(n, warm.state));
  const SymMatrix rest = a - nn;
  const SymMatrix p = project_psd(rest, tol);
  double cert = -std::numeric_limits<double>::infinity();
  SpnCertificate c;
  if (ones) {
    cert = mid + (a - p).min_entry();
    c.psd_part = p;
    c.nonneg_part = clamp_nonnegative(q - cert * shape - p);
  } else {
    cert = mid - std::max(0.0, -min_eigenvalue(rest, tol));
    c.psd_part = project_psd(q - cert * shape - nn, tol);
    c.nonneg_part = nn;
  }
  if (cert > out.lo && cert <= out.hi) {
    c.residual = (q - cert * shape - c.psd_part - c.nonneg_part).frobenius_norm();
    if (validate_certificate(q - cert * shape, c, tol)) {
      out.lo = cert;
      out.certificate = std::move(c);
    }
  }
  if (auto x = to_dnn(p - rest, tol)) {
    const double bound = inner(q, *x) / inner(shape, *x);
    if (std::isfinite(bound) && bound < out.hi) out.hi = std::max(out.lo, bound);
  }
}

// Bisection on lambda for Q - lambda S with S = E or S = I.
BisectionResult spn_bisection(const SymMatrix& q, bool ones, double lo, double hi,
                              const Tolerances& tol) {
  const std::size_t n = q.n();
  const SymMatrix shape = ones ? SymMatrix::ones(n) : SymMatrix::identity(n);
  BisectionResult out;
  out.lo = lo;
  out.hi = hi;
  SpnWarmStart warm;
  constexpr int kMaxStalled = 4;
  int stalled = 0;
  while (out.hi - out.lo > tol.eps_opt) {
    const double mid = 0.5 * (out.lo + out.hi);
    const SymMatrix probe = q - mid * shape;
    ++out.probes;
    SpnOutcome outcome;
    try {
      outcome = spn_oracle(probe, tol, &warm);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Undecided) throw;
      // Keep bisecting while salvaged bounds still shrink the bracket.
      const double width = out.hi - out.lo;
      salvage(q, shape, ones, mid, warm, tol, out);
      if (++stalled > kMaxStalled || out.hi - out.lo > 0.75 * width) {
        out.undecided = out.hi - out.lo > tol.eps_opt;
        break;
      }
      continue;
    }
    if (auto* c = std::get_if<SpnCertificate>(&outcome)) {
      // Q - (mid + t) S = P + (N - t S) stays SPN while N - t S >= 0.
      double slack = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (shape(i, j) != 0.0) slack = std::min(slack, c->nonneg_part(i, j));
      const double gain = std::max(0.0, slack);
      const double next = std::min(mid + gain, out.hi);
      SymMatrix nn = c->nonneg_part - (next - mid) * shape;
      SymMatrix shifted_q = q - next * shape;
      const double residual = (shifted_q - c->psd_part - nn).frobenius_norm();
      out.certificate = SpnCertificate{c->psd_part, std::move(nn), residual, {}};
      out.lo = next;
    } else {
      const auto& w = std::get<DnnWitness>(outcome);
      // (Q - mu S).X < 0 for every mu above Q.X / S.X.
      const double bound = inner(q, w.x) / inner(shape, w.x);
      out.hi = std::max(out.lo, std::min(mid, bound));
    }
  }
  out.value = 0.5 * (out.lo + out.hi);
  return out;
}

// Euclidean projection of the entries of z onto {y >= 0, sum y = 1}.
SymMatrix project_entry_simplex(const SymMatrix& z) {
  const std::size_t n = z.n();
  std::vector<double> u(z.data().begin(), z.data().end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, tau = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    css += u[k];
    const double t = (css - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) tau = t;
  }
  std::vector<double> out(n * n);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::max(z.data()[k] - tau, 0.0);
  return SymMatrix(n, std::move(out));
}

}  // namespace

BisectionResult z_spn_bisection(const SymMatrix& q, const Tolerances& tol) {
  tol.validate();
  if (q.empty()) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  const double lo = q.min_entry();
  const double hi = q.min_diagonal();
  BisectionResult out = spn_bisection(q, true, lo, hi, tol);
  if (!out.certificate) {
    // The left end of the bracket is certified by N = Q - lo E >= 0.
    SymMatrix nn = q.shifted(-out.lo);
    out.certificate = SpnCertificate{SymMatrix::zeros(q.n()), std::move(nn), 0.0, {}};
  }
  return out;
}

BisectionResult z_spn_bisection(const StqpInstance& inst, const Tolerances& tol) {
  return z_spn_bisection(inst.q, tol);
}

DnnPrimalResult z_dnn_primal(const SymMatrix& q, const Tolerances& tol) {
  tol.validate();
  const std::size_t n = q.n();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  const double scale = q.frobenius_norm();
  if (scale == 0.0) {
    return {0.0, (1.0 / static_cast<double>(n * n)) * SymMatrix::ones(n), 0};
  }
  const SymMatrix qs = (1.0 / scale) * q;
  constexpr double kStop = 1e-10;
  constexpr int kAdaptEvery = 50;
  double rho = 1.0;
  SymMatrix y = (1.0 / static_cast<double>(n * n)) * SymMatrix::ones(n);
  SymMatrix u = SymMatrix::zeros(n);
  std::vector<double> basis;
  std::vector<double> clamped(n);
  for (int it = 1; it <= tol.max_iter; ++it) {
    const SymMatrix target = y - u - (1.0 / rho) * qs;
    const EigenDecomposition eig =
        (it % 500 == 0 || basis.empty()) ? sym_eigen(target, tol) : sym_eigen(target, basis, tol);
    basis = eig.vectors;
    for (std::size_t k = 0; k < n; ++k) clamped[k] = std::max(eig.values[k], 0.0);
    const SymMatrix x = reconstruct(eig, clamped);
    const SymMatrix y_prev = y;
    y = project_entry_simplex(x + u);
    u = u + x - y;
    const double primal = (x - y).frobenius_norm();
    const double dual = rho * (y - y_prev).frobenius_norm();
    if (primal < kStop && dual < kStop) {
      return {inner(q, y), y, it};
    }
    if (it % kAdaptEvery == 0) {
      if (primal > 10.0 * dual) {
        rho *= 2.0;
        u = 0.5 * u;
      } else if (dual > 10.0 * primal) {
        rho *= 0.5;
        u = 2.0 * u;
      }
    }
  }
  throw NoConvergence("ADMM for the DNN relaxation reached the iteration cap", inner(q, y));
}

DnnPrimalResult z_dnn_primal(const StqpInstance& inst, const Tolerances& tol) {
  return z_dnn_primal(inst.q, tol);
}

StqpReport certify_tightness(const StqpInstance& inst, const Tolerances& tol) {
  const SymMatrix& q = inst.q;
  StqpReport report;
  try {
    SimplexMinimum m = z_star_oracle(inst, tol);
    report.z_star = m.value;
    report.minimizer = std::move(m.minimizer);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DimensionTooLarge) throw;
  }
  BisectionResult b = z_spn_bisection(q, tol);
  report.z_spn = b.value;
  report.z_spn_lo = b.lo;
  report.z_spn_hi = b.hi;
  report.spn_undecided = b.undecided;
  report.spn_certificate = std::move(b.certificate);
  try {
    report.z_dnn = z_dnn_primal(q, tol).value;
  } catch (const NoConvergence& e) {
    report.z_dnn = e.best();
  }
  if (report.z_star) {
    report.gap = *report.z_star - report.z_spn;
    report.tight = !report.spn_undecided && *report.gap <= tol.eps_opt;
  }

  if (is_Mn(q, tol)) {
    report.certificates.push_back(ClassLabel::plain(ClassTag::Mn));
    report.orbit_witness = GroupElement::identity(q.n());
  } else if (OrbitResult r = permute_into_Mn(q, tol); r.found) {
    report.certificates.push_back(ClassLabel::plain(ClassTag::Mn));
    report.orbit_witness = std::move(r.witness);
  }
  if (inst.provenance == StqpInstance::Provenance::Separable) {
    report.certificates.push_back(ClassLabel::plain(ClassTag::Separable));
  }
  if (is_Qmin(q, tol)) report.certificates.push_back(ClassLabel::plain(ClassTag::QMin));
  if (is_Qplus(q, tol)) report.certificates.push_back(ClassLabel::plain(ClassTag::QPlus));
  if (is_Qminus(q, tol)) report.certificates.push_back(ClassLabel::plain(ClassTag::QMinus));
  if (!report.spn_undecided) {
    const SymMatrix shifted = q.shifted(-report.z_spn);
    for (std::size_t k = 1; k < q.n(); ++k) {
      if (is_block_sign(shifted, k, tol)) {
        report.certificates.push_back(ClassLabel::with(ClassTag::BlockSign, k));
        break;
      }
    }
  }
  return report;
}

BisectionResult sphere_relaxation(const SymMatrix& q, const Tolerances& tol) {
  tol.validate();
  if (q.empty()) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  const double lo = min_eigenvalue(q, tol);
  const double hi = std::max(lo, q.min_diagonal());
  BisectionResult out = spn_bisection(q, false, lo, hi, tol);
  if (!out.certificate) {
    SymMatrix p = q.diagonal_shifted(-out.lo);
    const double residual = 0.0;
    out.certificate = SpnCertificate{std::move(p), SymMatrix::zeros(q.n()), residual, {}};
  }
  return out;
}

double sphere_minimum(const SymMatrix& q, const Tolerances& tol) {
  const std::size_t n = q.n();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
  if (n > kMaxEnumerationDim) {
    throw Error(ErrorKind::DimensionTooLarge, "sphere enumeration is limited to n <= 20");
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> support;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    support.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) support.push_back(i);
    const EigenDecomposition eig = sym_eigen(principal_submatrix(q, support), tol);
    const std::size_t s = support.size();
    bool pos = true, neg = true;
    for (std::size_t r = 0; r < s; ++r) {
      const double v = eig.vector_entry(r, 0);
      if (v < -1e-12) pos = false;
      if (v > 1e-12) neg = false;
    }
    if (pos || neg) best = std::min(best, eig.values[0]);
  }
  return best;
}

}  // namespace spnkit
