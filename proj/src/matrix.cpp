#include "spnkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "spnkit/error.hpp"

namespace spnkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ZeroPivot: return "ZeroPivot";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::NotInSupportedClass: return "NotInSupportedClass";
    case ErrorKind::LpNumericalFailure: return "LpNumericalFailure";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

void Tolerances::validate() const {
  if (!(eps_ord > 0) || !(eps_psd > 0) || !(eps_feas > 0) || !(eps_opt > 0) ||
      max_iter < 1) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be strictly positive");
  }
}

SymMatrix::SymMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(n * n) + " entries, got " +
                    std::to_string(a_.size()));
  }
  double scale = 1.0;
  for (double v : a_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
    scale = std::max(scale, std::abs(v));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double& upper = a_[i * n + j];
      double& lower = a_[j * n + i];
      if (std::abs(upper - lower) > 1e-6 * scale) {
        throw Error(ErrorKind::InvalidArgument,
                    "matrix is not symmetric at (" + std::to_string(i) + ", " +
                        std::to_string(j) + ")");
      }
      const double mid = 0.5 * (upper + lower);
      upper = mid;
      lower = mid;
    }
  }
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymMatrix(rows.size(), [&] {
        std::vector<double> out;
        out.reserve(rows.size() * rows.size());
        for (const auto& r : rows) {
          if (r.size() != rows.size()) {
            throw Error(ErrorKind::InvalidArgument, "matrix rows must be square");
          }
          out.insert(out.end(), r.begin(), r.end());
        }
        return out;
      }()) {}

SymMatrix SymMatrix::zeros(std::size_t n) { return SymMatrix(n, std::vector<double>(n * n, 0.0)); }

SymMatrix SymMatrix::identity(std::size_t n) {
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1.0;
  return SymMatrix(n, std::move(a));
}

SymMatrix SymMatrix::ones(std::size_t n) { return SymMatrix(n, std::vector<double>(n * n, 1.0)); }

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  const std::size_t n = d.size();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = d[i];
  return SymMatrix(n, std::move(a));
}

SymMatrix SymMatrix::outer(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = v[i] * v[j];
  return SymMatrix(n, std::move(a));
}

double SymMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::min_entry() const noexcept {
  return a_.empty() ? 0.0 : *std::min_element(a_.begin(), a_.end());
}

double SymMatrix::min_diagonal() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i) m = std::min(m, (*this)(i, i));
  return m;
}

double SymMatrix::min_off_diagonal() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) m = std::min(m, (*this)(i, j));
  return m;
}

double SymMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

SymMatrix SymMatrix::shifted(double lambda) const {
  std::vector<double> a = a_;
  for (double& v : a) v += lambda;
  return SymMatrix(n_, std::move(a));
}

SymMatrix SymMatrix::diagonal_shifted(double lambda) const {
  std::vector<double> a = a_;
  for (std::size_t i = 0; i < n_; ++i) a[i * n_ + i] += lambda;
  return SymMatrix(n_, std::move(a));
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in +");
  std::vector<double> out(a.a_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.a_[k] + b.a_[k];
  return SymMatrix(a.n_, std::move(out));
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in -");
  std::vector<double> out(a.a_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.a_[k] - b.a_[k];
  return SymMatrix(a.n_, std::move(out));
}

SymMatrix operator*(double s, const SymMatrix& a) {
  std::vector<double> out = a.a_;
  for (double& v : out) v *= s;
  return SymMatrix(a.n_, std::move(out));
}

double inner(const SymMatrix& a, const SymMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch in inner");
  const auto x = a.data();
  const auto y = b.data();
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double max_abs_diff(const SymMatrix& a, const SymMatrix& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

GroupElement::GroupElement(std::vector<std::size_t> perm, std::vector<double> diag)
    : perm_(std::move(perm)), diag_(std::move(diag)) {
  const std::size_t n = perm_.size();
  if (diag_.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "permutation and diagonal sizes differ");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm_) {
    if (p >= n || seen[p]) throw Error(ErrorKind::InvalidArgument, "perm is not a bijection");
    seen[p] = true;
  }
  for (double d : diag_) {
    if (!(d > 0) || !std::isfinite(d)) {
      throw Error(ErrorKind::InvalidArgument, "diagonal entries must be positive and finite");
    }
  }
}

GroupElement GroupElement::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return GroupElement(std::move(p), std::vector<double>(n, 1.0));
}

GroupElement GroupElement::permutation(std::vector<std::size_t> perm) {
  const std::size_t n = perm.size();
  return GroupElement(std::move(perm), std::vector<double>(n, 1.0));
}

GroupElement GroupElement::scaling(std::vector<double> diag) {
  std::vector<std::size_t> p(diag.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  return GroupElement(std::move(p), std::move(diag));
}

// As matrices G = P D. G H = (P_g P_h)(P_h^T D_g P_h D_h).
GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  if (g.n() != h.n()) throw Error(ErrorKind::InvalidArgument, "group element sizes differ");
  const std::size_t n = g.n();
  std::vector<std::size_t> perm(n);
  std::vector<double> diag(n);
  for (std::size_t r = 0; r < n; ++r) {
    perm[r] = g.perm_[h.perm_[r]];
    diag[r] = g.diag_[h.perm_[r]] * h.diag_[r];
  }
  return GroupElement(std::move(perm), std::move(diag));
}

GroupElement GroupElement::inverse() const {
  const std::size_t size = perm_.size();
  std::vector<std::size_t> inv(size);
  for (std::size_t r = 0; r < size; ++r) inv[perm_[r]] = r;
  std::vector<double> diag(size);
  for (std::size_t r = 0; r < size; ++r) diag[r] = 1.0 / diag_[inv[r]];
  return GroupElement(std::move(inv), std::move(diag));
}

}  // namespace spnkit
