#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spnkit/matrix.hpp"

namespace spnkit {

enum class ClassTag {
  Mn,
  Rn,
  BlockSign,
  AlmostBlock,
  QMin,
  QPlus,
  QMinus,
  ZMatrix,
  Nonnegative,
  Separable,
};

const char* to_string(ClassTag tag);

/// A class membership claim. `detail` is the positive index for Rn, the size
/// of the leading block for BlockSign, and the overlap index for AlmostBlock;
/// it is empty for every other tag.
struct ClassLabel {
  ClassTag tag;
  std::optional<std::size_t> detail;

  static ClassLabel plain(ClassTag tag) { return {tag, std::nullopt}; }
  static ClassLabel with(ClassTag tag, std::size_t detail) { return {tag, detail}; }

  std::string to_string() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

struct RowSignSummary {
  std::vector<std::size_t> nonneg_rows;
  std::vector<std::size_t> nonpos_rows;
  std::vector<std::size_t> strictly_neg_rows;
};

/// Off-diagonal entries nondecreasing along every row (and so every column).
bool is_Mn(const SymMatrix& a, const Tolerances& tol = {});

/// 0-based index of the first row holding an off-diagonal entry > eps_ord,
/// or n when there is none.
std::size_t idx(const SymMatrix& a, const Tolerances& tol = {});

/// Relaxed ordering. (I) a positive off-diagonal entry is no larger than the
/// next off-diagonal entry to its right and below it. (II) with k = idx(A),
/// row i is nondecreasing over columns max(k, i+1) .. n-1.
bool is_Rn(const SymMatrix& a, const Tolerances& tol = {});

/// Leading k x k block with nonpositive off-diagonals, a nonpositive coupling
/// block with nondecreasing rows, and a trailing block in M_{n-k}.
/// Requires 1 <= k < n.
bool is_block_sign(const SymMatrix& a, std::size_t k, const Tolerances& tol = {});

/// Two M-class principal blocks 0..c and c..n-1 sharing row c, with zeros
/// outside them. Requires 0 < c < n-1.
bool is_almost_block(const SymMatrix& a, std::size_t c, const Tolerances& tol = {});

bool is_Qmin(const SymMatrix& a, const Tolerances& tol = {});
/// d^T A d >= 0 on the hyperplane e^T d = 0.
bool is_Qplus(const SymMatrix& a, const Tolerances& tol = {});
/// d^T A d <= 0 on the hyperplane e^T d = 0.
bool is_Qminus(const SymMatrix& a, const Tolerances& tol = {});
bool is_zmatrix(const SymMatrix& a, const Tolerances& tol = {});
bool is_nonnegative(const SymMatrix& a, const Tolerances& tol = {});

RowSignSummary row_sign_summary(const SymMatrix& a, const Tolerances& tol = {});

using MatrixPredicate = std::function<bool(const SymMatrix&)>;

SymMatrix block_diag(const std::vector<SymMatrix>& blocks);

/// True iff blocks[i] passes predicates[i] for every i. A single predicate is
/// applied to every block.
bool block_diag_class(const std::vector<SymMatrix>& blocks,
                      const std::vector<MatrixPredicate>& predicates);

/// Every label the matrix carries; BlockSign and AlmostBlock are reported for
/// each split that passes.
std::vector<ClassLabel> classify(const SymMatrix& a, const Tolerances& tol = {});

}  // namespace spnkit
