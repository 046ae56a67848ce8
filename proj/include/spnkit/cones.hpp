#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spnkit/matrix.hpp"

namespace spnkit {

/// Largest n accepted by the support-enumeration engine.
inline constexpr std::size_t kMaxEnumerationDim = 20;

struct SimplexMinimum {
  double value = 0.0;
  std::vector<double> minimizer;
  std::size_t faces_examined = 0;
};

/// Exact minimum of x^T A x over the standard simplex, by solving the
/// stationarity system on every support. Throws DimensionTooLarge for n > 20.
SimplexMinimum simplex_minimum(const SymMatrix& a, const Tolerances& tol = {});

struct CopositivityReport {
  double min_value = 0.0;
  std::vector<double> minimizer;
  bool copositive = false;
  std::size_t faces_examined = 0;
};

CopositivityReport copositive_oracle(const SymMatrix& a, const Tolerances& tol = {});

struct TraceStep {
  enum class Kind { StripRow, SchurStep, BaseCase };
  Kind kind;
  /// Row in the caller's numbering for StripRow and SchurStep, the block size
  /// for BaseCase.
  std::size_t index;

  std::string to_string() const;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SpnCertificate {
  SymMatrix psd_part;
  SymMatrix nonneg_part;
  double residual = 0.0;
  std::vector<TraceStep> trace;
};

/// X doubly nonnegative with E.X = 1 and A.X = objective < 0.
struct DnnWitness {
  SymMatrix x;
  double objective = 0.0;
};

using SpnOutcome = std::variant<SpnCertificate, DnnWitness>;

/// State carried between nearby probes, e.g. by a bisection on A - lambda E.
struct SpnWarmStart {
  /// Douglas-Rachford governing sequence, row-major.
  std::vector<double> state;
  std::vector<double> eigenvectors;
  std::size_t iterations = 0;
};

/// Largest n for which spn_oracle falls back to support enumeration.
inline constexpr std::size_t kFaceDim = 10;

/// Douglas-Rachford splitting between {N >= 0} and {N : A - N is PSD}, with a
/// gap test for infeasibility every few dozen steps. When the budget runs out
/// and n <= kFaceDim, the simplex minimum z of A is computed exactly: z < 0
/// gives a rank-one witness, otherwise the splitting is rerun for A - zE on
/// the face cut out by its zeros. Then witness_search is tried, and Undecided
/// is thrown when that also fails.
SpnOutcome spn_oracle(const SymMatrix& a, const Tolerances& tol = {},
                      SpnWarmStart* warm = nullptr);

/// Clamps Y to its nonnegative part, lifts the spectrum by a multiple of I and
/// scales to E.X = 1, giving an exactly doubly nonnegative matrix. nullopt when
/// nothing positive is left.
std::optional<SymMatrix> to_dnn(const SymMatrix& y, const Tolerances& tol = {});

/// Projected gradient on A.X over {X PSD, X >= 0, E.X = 1} with iterate
/// averaging. Returns a witness if the averaged objective drops below
/// -eps_feas within `budget` projections.
std::optional<DnnWitness> witness_search(const SymMatrix& a, const Tolerances& tol,
                                         std::size_t budget = 50000);

/// Decomposition following the row-stripping and Schur-complement induction.
/// Requires `a` to be copositive and in M_n, R_n or a block-sign class, or
/// n <= 4. Throws NotInSupportedClass otherwise, and InvalidArgument when the
/// recursion exposes that `a` is not copositive.
SpnCertificate spn_decompose_recursive(const SymMatrix& a, const Tolerances& tol = {});

bool validate_certificate(const SymMatrix& a, const SpnCertificate& c,
                          const Tolerances& tol = {});
bool validate_witness(const SymMatrix& a, const DnnWitness& w, const Tolerances& tol = {});

/// Maps a certificate for g.A back to one for A.
SpnCertificate pull_back(const SymMatrix& a, const SpnCertificate& c, const GroupElement& g);

}  // namespace spnkit
