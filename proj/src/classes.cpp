#include "spnkit/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spnkit/error.hpp"
#include "spnkit/linalg.hpp"

namespace spnkit {

const char* to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Mn: return "Mn";
    case ClassTag::Rn: return "Rn";
    case ClassTag::BlockSign: return "BlockSign";
    case ClassTag::AlmostBlock: return "AlmostBlock";
    case ClassTag::QMin: return "QMin";
    case ClassTag::QPlus: return "QPlus";
    case ClassTag::QMinus: return "QMinus";
    case ClassTag::ZMatrix: return "ZMatrix";
    case ClassTag::Nonnegative: return "Nonnegative";
    case ClassTag::Separable: return "Separable";
  }
  return "Unknown";
}

std::string ClassLabel::to_string() const {
  std::string s = spnkit::to_string(tag);
  if (detail) s += "(" + std::to_string(*detail) + ")";
  return s;
}

namespace {

// Off-diagonal entries of row i over columns [from, to) nondecreasing, with
// the diagonal skipped.
bool row_nondecreasing(const SymMatrix& a, std::size_t i, std::size_t from, std::size_t to,
                       double eps) {
  double running = -std::numeric_limits<double>::infinity();
  for (std::size_t j = from; j < to; ++j) {
    if (j == i) continue;
    if (a(i, j) + eps < running) return false;
    running = std::max(running, a(i, j));
  }
  return true;
}

bool offdiag_at_most(const SymMatrix& a, std::size_t begin, std::size_t end, double bound) {
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = begin; j < end; ++j)
      if (i != j && a(i, j) > bound) return false;
  return true;
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(i);
  return out;
}

double min_projected_eigenvalue(const SymMatrix& a, const Tolerances& tol, double sign) {
  const std::size_t n = a.n();
  if (n <= 1) return 0.0;
  const std::size_t m = n - 1;
  const std::vector<double> v = ones_complement_basis(n);
  std::vector<double> av(n * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = sign * a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t c = 0; c < m; ++c) av[i * m + c] += aik * v[k * m + c];
    }
  std::vector<double> proj(m * m, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r; c < m; ++c) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += v[i * m + r] * av[i * m + c];
      proj[r * m + c] = s;
      proj[c * m + r] = s;
    }
  return min_eigenvalue(SymMatrix(m, std::move(proj)), tol);
}

}  // namespace

bool is_Mn(const SymMatrix& a, const Tolerances& tol) {
  for (std::size_t i = 0; i < a.n(); ++i)
    if (!row_nondecreasing(a, i, 0, a.n(), tol.eps_ord)) return false;
  return true;
}

std::size_t idx(const SymMatrix& a, const Tolerances& tol) {
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (i != j && a(i, j) > tol.eps_ord) return i;
  return a.n();
}

bool is_Rn(const SymMatrix& a, const Tolerances& tol) {
  const std::size_t n = a.n();
  const double eps = tol.eps_ord;
  // Condition I. Checking the right neighbour in every row also covers the
  // lower neighbour, by symmetry.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a(i, j) <= eps) continue;
      std::size_t next = j + 1;
      if (next == i) ++next;
      if (next < n && a(i, j) > a(i, next) + eps) return false;
    }
  }
  // Condition II.
  const std::size_t k = idx(a, tol);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = std::max(k, i + 1); j + 1 < n; ++j) {
      if (a(i, j) > a(i, j + 1) + eps) return false;
    }
  }
  return true;
}

bool is_block_sign(const SymMatrix& a, std::size_t k, const Tolerances& tol) {
  const std::size_t n = a.n();
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::InvalidArgument, "block split must satisfy 1 <= k < n");
  }
  const double eps = tol.eps_ord;
  if (!offdiag_at_most(a, 0, k, eps)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = k; j < n; ++j) {
      if (a(i, j) > eps) return false;
      if (j + 1 < n && a(i, j) > a(i, j + 1) + eps) return false;
    }
  }
  const std::vector<std::size_t> tail = range(k, n);
  return is_Mn(principal_submatrix(a, tail), tol);
}

bool is_almost_block(const SymMatrix& a, std::size_t c, const Tolerances& tol) {
  const std::size_t n = a.n();
  if (c < 1 || c + 1 >= n) {
    throw Error(ErrorKind::InvalidArgument, "overlap index must satisfy 0 < c < n-1");
  }
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = c + 1; j < n; ++j)
      if (std::abs(a(i, j)) > tol.eps_ord) return false;
  return is_Mn(principal_submatrix(a, range(0, c + 1)), tol) &&
         is_Mn(principal_submatrix(a, range(c, n)), tol);
}

bool is_Qmin(const SymMatrix& a, const Tolerances& tol) {
  if (a.empty()) return true;
  return a.min_diagonal() <= a.min_entry() + tol.eps_ord;
}

bool is_Qplus(const SymMatrix& a, const Tolerances& tol) {
  return min_projected_eigenvalue(a, tol, 1.0) >= -tol.eps_psd;
}

bool is_Qminus(const SymMatrix& a, const Tolerances& tol) {
  return min_projected_eigenvalue(a, tol, -1.0) >= -tol.eps_psd;
}

bool is_zmatrix(const SymMatrix& a, const Tolerances& tol) {
  return offdiag_at_most(a, 0, a.n(), tol.eps_ord);
}

bool is_nonnegative(const SymMatrix& a, const Tolerances& tol) {
  return a.empty() || a.min_entry() >= -tol.eps_ord;
}

RowSignSummary row_sign_summary(const SymMatrix& a, const Tolerances& tol) {
  RowSignSummary out;
  const double eps = tol.eps_ord;
  for (std::size_t i = 0; i < a.n(); ++i) {
    bool nonneg = true, nonpos = true, strict = false;
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (j == i) continue;
      const double v = a(i, j);
      if (v < -eps) nonneg = false;
      if (v > eps) nonpos = false;
      if (v < -eps) strict = true;
    }
    if (nonneg) out.nonneg_rows.push_back(i);
    if (nonpos) {
      out.nonpos_rows.push_back(i);
      if (strict) out.strictly_neg_rows.push_back(i);
    }
  }
  return out;
}

SymMatrix block_diag(const std::vector<SymMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.n();
  std::vector<double> out(n * n, 0.0);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) out[(offset + i) * n + offset + j] = b(i, j);
    offset += b.n();
  }
  return SymMatrix(n, std::move(out));
}

bool block_diag_class(const std::vector<SymMatrix>& blocks,
                      const std::vector<MatrixPredicate>& predicates) {
  if (predicates.empty()) throw Error(ErrorKind::InvalidArgument, "no predicate given");
  if (predicates.size() != 1 && predicates.size() != blocks.size()) {
    throw Error(ErrorKind::InvalidArgument, "need one predicate or one per block");
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& pred = predicates.size() == 1 ? predicates[0] : predicates[b];
    if (!pred(blocks[b])) return false;
  }
  return true;
}

std::vector<ClassLabel> classify(const SymMatrix& a, const Tolerances& tol) {
  std::vector<ClassLabel> out;
  const std::size_t n = a.n();
  if (is_Mn(a, tol)) out.push_back(ClassLabel::plain(ClassTag::Mn));
  if (is_Rn(a, tol)) out.push_back(ClassLabel::with(ClassTag::Rn, idx(a, tol)));
  for (std::size_t k = 1; k < n; ++k)
    if (is_block_sign(a, k, tol)) out.push_back(ClassLabel::with(ClassTag::BlockSign, k));
  for (std::size_t c = 1; c + 1 < n; ++c)
    if (is_almost_block(a, c, tol)) out.push_back(ClassLabel::with(ClassTag::AlmostBlock, c));
  if (is_Qmin(a, tol)) out.push_back(ClassLabel::plain(ClassTag::QMin));
  if (is_Qplus(a, tol)) out.push_back(ClassLabel::plain(ClassTag::QPlus));
  if (is_Qminus(a, tol)) out.push_back(ClassLabel::plain(ClassTag::QMinus));
  if (is_zmatrix(a, tol)) out.push_back(ClassLabel::plain(ClassTag::ZMatrix));
  if (is_nonnegative(a, tol)) out.push_back(ClassLabel::plain(ClassTag::Nonnegative));
  return out;
}

}  // namespace spnkit
