#include "spnkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spnkit/error.hpp"

namespace spnkit {
namespace {

constexpr int kMaxSweeps = 100;

double off_norm_sq(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return s;
}

// Cyclic Jacobi on the working copy `a` (row-major, symmetric), accumulating
// rotations into `v`. Stops once the off-diagonal mass is at rounding level.
void jacobi(std::vector<double>& a, std::vector<double>& v, std::size_t n) {
  double total = 0.0;
  for (double x : a) total += x * x;
  const double target = 1e-28 * total;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_norm_sq(a, n);
    if (off <= target || off == 0.0) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Entries that no longer change the diagonal are rounding noise.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(app) + g == std::abs(app) &&
            std::abs(aqq) + g == std::abs(aqq)) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  throw NoConvergence("Jacobi eigensolver exceeded " + std::to_string(kMaxSweeps) + " sweeps");
}

EigenDecomposition finish(std::vector<double>& a, std::vector<double>& v, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a[order[c] * n + order[c]];
    for (std::size_t r = 0; r < n; ++r) out.vectors[r * n + c] = v[r * n + order[c]];
  }
  return out;
}

}  // namespace

EigenDecomposition sym_eigen(const SymMatrix& a, const Tolerances&) {
  const std::size_t n = a.n();
  std::vector<double> work(a.data().begin(), a.data().end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  jacobi(work, v, n);
  return finish(work, v, n);
}

EigenDecomposition sym_eigen(const SymMatrix& a, std::span<const double> start,
                             const Tolerances& tol) {
  const std::size_t n = a.n();
  if (start.size() != n * n) return sym_eigen(a, tol);
  // work = V^T A V
  std::vector<double> av(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) av[i * n + j] += aik * start[k * n + j];
    }
  std::vector<double> work(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const double vki = start[k * n + i];
      for (std::size_t j = 0; j < n; ++j) work[i * n + j] += vki * av[k * n + j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (work[i * n + j] + work[j * n + i]);
      work[i * n + j] = m;
      work[j * n + i] = m;
    }
  std::vector<double> v(start.begin(), start.end());
  jacobi(work, v, n);
  return finish(work, v, n);
}

double min_eigenvalue(const SymMatrix& a, const Tolerances& tol) {
  if (a.n() == 0) return 0.0;
  return sym_eigen(a, tol).values.front();
}

SymMatrix reconstruct(const EigenDecomposition& eig, std::span<const double> values) {
  const std::size_t n = eig.n();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    const double lam = values[c];
    if (lam == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = lam * eig.vectors[i * n + c];
      if (vi == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += vi * eig.vectors[j * n + c];
    }
  }
  return SymMatrix(n, std::move(out));
}

SymMatrix project_psd(const SymMatrix& a, const Tolerances& tol) {
  const EigenDecomposition eig = sym_eigen(a, tol);
  std::vector<double> clamped(eig.values);
  for (double& x : clamped) x = std::max(x, 0.0);
  return reconstruct(eig, clamped);
}

SymMatrix clamp_nonnegative(const SymMatrix& a) {
  std::vector<double> out(a.data().begin(), a.data().end());
  for (double& x : out) x = std::max(x, 0.0);
  return SymMatrix(a.n(), std::move(out));
}

SymMatrix delete_row_col(const SymMatrix& a, std::size_t i) {
  const std::size_t n = a.n();
  if (n < 2 || i >= n) {
    throw Error(ErrorKind::InvalidArgument, "delete_row_col: index out of range or n < 2");
  }
  std::vector<std::size_t> keep;
  keep.reserve(n - 1);
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) keep.push_back(k);
  return principal_submatrix(a, keep);
}

SymMatrix principal_submatrix(const SymMatrix& a, std::span<const std::size_t> indices) {
  const std::size_t m = indices.size();
  std::vector<double> out(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    if (indices[r] >= a.n()) throw Error(ErrorKind::InvalidArgument, "index out of range");
    for (std::size_t c = 0; c < m; ++c) out[r * m + c] = a(indices[r], indices[c]);
  }
  return SymMatrix(m, std::move(out));
}

SymMatrix schur_complement(const SymMatrix& a, std::size_t i, const Tolerances& tol) {
  const std::size_t n = a.n();
  if (n < 2 || i >= n) {
    throw Error(ErrorKind::InvalidArgument, "schur_complement: index out of range or n < 2");
  }
  const double pivot = a(i, i);
  if (std::abs(pivot) <= tol.eps_ord) {
    throw Error(ErrorKind::ZeroPivot, "schur_complement: pivot a_ii is zero");
  }
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) keep.push_back(k);
  const std::size_t m = n - 1;
  std::vector<double> out(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      out[r * m + c] = a(keep[r], keep[c]) - a(i, keep[r]) * a(i, keep[c]) / pivot;
  return SymMatrix(m, std::move(out));
}

SymMatrix apply_group(const GroupElement& g, const SymMatrix& a) {
  const std::size_t n = a.n();
  if (g.n() != n) throw Error(ErrorKind::InvalidArgument, "apply_group: dimension mismatch");
  const auto& p = g.perm();
  const auto& d = g.diag();
  std::vector<double> out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) out[r * n + s] = d[r] * d[s] * a(p[r], p[s]);
  return SymMatrix(n, std::move(out));
}

SymMatrix embed(const SymMatrix& block, std::span<const std::size_t> indices, std::size_t n) {
  if (indices.size() != block.n()) throw Error(ErrorKind::InvalidArgument, "embed: size mismatch");
  std::vector<double> out(n * n, 0.0);
  for (std::size_t r = 0; r < block.n(); ++r)
    for (std::size_t c = 0; c < block.n(); ++c) out[indices[r] * n + indices[c]] = block(r, c);
  return SymMatrix(n, std::move(out));
}

double determinant(const SymMatrix& a) {
  const std::size_t n = a.n();
  std::vector<double> m(a.data().begin(), a.data().end());
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (m[piv * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      det = -det;
    }
    const double p = m[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / p;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

SymMatrix inverse(const SymMatrix& a) {
  const std::size_t n = a.n();
  std::vector<double> m(a.data().begin(), a.data().end());
  std::vector<double> inv(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  const double scale = std::max(a.max_abs(), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (std::abs(m[piv * n + col]) <= 1e-14 * scale) {
      throw Error(ErrorKind::ZeroPivot, "inverse: matrix is singular");
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m[piv * n + c], m[col * n + c]);
        std::swap(inv[piv * n + c], inv[col * n + c]);
      }
    }
    const double p = m[col * n + col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col * n + c] /= p;
      inv[col * n + c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m[r * n + c] -= f * m[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return SymMatrix(n, std::move(inv));
}

std::vector<double> solve_symmetric(const SymMatrix& k, std::span<const double> b,
                                    const Tolerances& tol) {
  const std::size_t n = k.n();
  if (b.size() != n) throw Error(ErrorKind::InvalidArgument, "solve_symmetric: size mismatch");
  const double scale = std::max(k.max_abs(), 1e-300);

  std::vector<double> m(k.data().begin(), k.data().end());
  std::vector<double> x(b.begin(), b.end());
  bool singular = false;
  for (std::size_t col = 0; col < n && !singular; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (std::abs(m[piv * n + col]) <= 1e-11 * scale) {
      singular = true;
      break;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[piv * n + c], m[col * n + c]);
      std::swap(x[piv], x[col]);
    }
    const double p = m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / p;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      x[r] -= f * x[col];
    }
  }
  if (!singular) {
    for (std::size_t r = n; r-- > 0;) {
      double s = x[r];
      for (std::size_t c = r + 1; c < n; ++c) s -= m[r * n + c] * x[c];
      x[r] = s / m[r * n + r];
    }
    return x;
  }

  // Minimum-norm least squares through the eigen pseudo-inverse.
  const EigenDecomposition eig = sym_eigen(k, tol);
  double lam_max = 0.0;
  for (double l : eig.values) lam_max = std::max(lam_max, std::abs(l));
  const double cutoff = 1e-11 * std::max(lam_max, 1e-300);
  std::vector<double> out(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    const double lam = eig.values[c];
    if (std::abs(lam) <= cutoff) continue;
    double proj = 0.0;
    for (std::size_t r = 0; r < n; ++r) proj += eig.vector_entry(r, c) * b[r];
    proj /= lam;
    for (std::size_t r = 0; r < n; ++r) out[r] += proj * eig.vector_entry(r, c);
  }
  return out;
}

std::vector<double> ones_complement_basis(std::size_t n) {
  // H = I - 2 u u^T / (u^T u), u = e/sqrt(n) - e_1. Columns 2..n of H.
  std::vector<double> u(n, 1.0 / std::sqrt(static_cast<double>(n)));
  u[0] -= 1.0;
  const double uu = std::inner_product(u.begin(), u.end(), u.begin(), 0.0);
  const std::size_t m = n - 1;
  std::vector<double> basis(n * m, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t col = c + 1;
      double h = (r == col ? 1.0 : 0.0);
      if (uu > 0) h -= 2.0 * u[r] * u[col] / uu;
      basis[r * m + c] = h;
    }
  return basis;
}

}  // namespace spnkit
