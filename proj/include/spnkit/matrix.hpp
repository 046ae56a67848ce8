#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spnkit {

/// Numerical slack shared by every module. Sign and ordering tests use
/// `eps_ord`, eigenvalue tests `eps_psd`, residual tests `eps_feas`, and
/// bisections stop at width `eps_opt`.
struct Tolerances {
  double eps_ord = 1e-9;
  double eps_psd = 1e-9;
  double eps_feas = 1e-9;
  double eps_opt = 1e-6;
  int max_iter = 100000;

  /// Throws InvalidArgument unless every field is strictly positive.
  void validate() const;
};

/// Dense real symmetric matrix, stored row-major in full.
///
/// Construction symmetrizes by (A + A^T)/2 and rejects inputs whose
/// asymmetry exceeds 1e-6 relative to the largest entry, or that contain
/// non-finite values. Instances are immutable.
class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(std::size_t n, std::vector<double> entries);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static SymMatrix zeros(std::size_t n);
  static SymMatrix identity(std::size_t n);
  static SymMatrix ones(std::size_t n);
  static SymMatrix diagonal(std::span<const double> d);
  static SymMatrix outer(std::span<const double> v);

  std::size_t n() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * n_ + j];
  }
  std::span<const double> data() const noexcept { return a_; }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(a_).subspan(i * n_, n_);
  }

  double frobenius_norm() const noexcept;
  double min_entry() const noexcept;
  double min_diagonal() const noexcept;
  /// Smallest off-diagonal entry; +inf when n == 1.
  double min_off_diagonal() const noexcept;
  double max_abs() const noexcept;

  /// Returns A + lambda * E.
  SymMatrix shifted(double lambda) const;
  /// Returns A + lambda * I.
  SymMatrix diagonal_shifted(double lambda) const;

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator*(double s, const SymMatrix& a);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Frobenius inner product A . B = trace(AB).
double inner(const SymMatrix& a, const SymMatrix& b);

/// Largest absolute entrywise difference.
double max_abs_diff(const SymMatrix& a, const SymMatrix& b);

/// Element P*D of the group generated by permutations and positive diagonal
/// scalings, acting on symmetric matrices by congruence:
/// (g.A)_{r,s} = diag[r] * diag[s] * A_{perm[r], perm[s]}.
class GroupElement {
 public:
  GroupElement(std::vector<std::size_t> perm, std::vector<double> diag);

  static GroupElement identity(std::size_t n);
  static GroupElement permutation(std::vector<std::size_t> perm);
  static GroupElement scaling(std::vector<double> diag);

  std::size_t n() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const std::vector<double>& diag() const noexcept { return diag_; }

  /// The product g*h, so that apply_group(g*h, A) == apply_group(h, apply_group(g, A)).
  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  GroupElement inverse() const;

 private:
  std::vector<std::size_t> perm_;
  std::vector<double> diag_;
};

}  // namespace spnkit
