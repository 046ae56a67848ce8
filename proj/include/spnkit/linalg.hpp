#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spnkit/matrix.hpp"

namespace spnkit {

/// A = V diag(values) V^T. `values` ascend; `vectors` is row-major n x n with
/// the eigenvectors stored as columns.
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<double> vectors;

  std::size_t n() const noexcept { return values.size(); }
  double vector_entry(std::size_t row, std::size_t col) const noexcept {
    return vectors[row * values.size() + col];
  }
};

/// Cyclic Jacobi rotations. Throws NoConvergence when the sweep budget runs out.
EigenDecomposition sym_eigen(const SymMatrix& a, const Tolerances& tol = {});

/// Same as sym_eigen, but rotates `a` into the basis `start` (row-major n x n,
/// orthonormal columns) first. When `start` is close to an eigenbasis of `a`
/// only one or two sweeps are needed.
EigenDecomposition sym_eigen(const SymMatrix& a, std::span<const double> start,
                             const Tolerances& tol = {});

double min_eigenvalue(const SymMatrix& a, const Tolerances& tol = {});

/// Reassembles V diag(f(values)) V^T.
SymMatrix reconstruct(const EigenDecomposition& eig, std::span<const double> values);

/// Frobenius-nearest positive semidefinite matrix.
SymMatrix project_psd(const SymMatrix& a, const Tolerances& tol = {});

/// Entrywise max(a, 0).
SymMatrix clamp_nonnegative(const SymMatrix& a);

/// A with row and column i removed.
SymMatrix delete_row_col(const SymMatrix& a, std::size_t i);

/// Principal submatrix on `indices`, in the order given.
SymMatrix principal_submatrix(const SymMatrix& a, std::span<const std::size_t> indices);

/// A(i) - v v^T / a_ii with v row i of A without entry i. Surviving indices
/// keep their relative order. Throws ZeroPivot when |a_ii| <= eps_ord.
SymMatrix schur_complement(const SymMatrix& a, std::size_t i, const Tolerances& tol = {});

SymMatrix apply_group(const GroupElement& g, const SymMatrix& a);

/// Places `block` at rows/columns `indices` of an n x n zero matrix.
SymMatrix embed(const SymMatrix& block, std::span<const std::size_t> indices, std::size_t n);

/// LU with partial pivoting.
double determinant(const SymMatrix& a);

/// Gauss-Jordan inverse. Throws ZeroPivot on a singular input.
SymMatrix inverse(const SymMatrix& a);

/// Least-squares solution of minimum norm for a symmetric system K x = b.
/// Uses partial-pivoting elimination and falls back to the eigen
/// pseudo-inverse when K is numerically singular.
std::vector<double> solve_symmetric(const SymMatrix& k, std::span<const double> b,
                                    const Tolerances& tol = {});

/// Orthonormal basis of the complement of the all-ones vector, from the
/// Householder reflector that maps e/sqrt(n) to the first unit vector.
/// Returned row-major n x (n-1).
std::vector<double> ones_complement_basis(std::size_t n);

}  // namespace spnkit
