#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spnkit/classes.hpp"
#include "spnkit/cones.hpp"
#include "spnkit/matrix.hpp"

namespace spnkit {

/// min x^T Q x over the standard simplex, with a record of how Q was built.
struct StqpInstance {
  enum class Provenance { Raw, Separable, Affine };

  SymMatrix q;
  Provenance provenance = Provenance::Raw;
  /// Separable: linear and quadratic coefficients. Affine: alpha only.
  std::vector<double> alpha;
  std::vector<double> beta;
  /// Affine: the quadratic part before the linear term was absorbed.
  SymMatrix q_tilde;

  static StqpInstance raw(SymMatrix q);
};

const char* to_string(StqpInstance::Provenance p);

/// Q with q_ij = alpha_i + alpha_j off the diagonal and q_ii = beta_i + 2 alpha_i,
/// representing sum 2 alpha_i x_i + sum beta_i x_i^2 on the simplex.
StqpInstance build_separable(const std::vector<double>& alpha, const std::vector<double>& beta);

/// Q = Q~ + alpha e^T + e alpha^T, which agrees with x^T Q~ x + 2 alpha^T x on
/// the simplex.
StqpInstance build_affine(const SymMatrix& q_tilde, const std::vector<double>& alpha);

/// Exact value by support enumeration. Throws DimensionTooLarge for n > 20.
SimplexMinimum z_star_oracle(const StqpInstance& inst, const Tolerances& tol = {});

/// Outcome of a bisection on lambda with an SPN probe. `lo` is certified
/// (an SPN decomposition exists there) and `hi` is certified from above (by a
/// DNN witness or a sign argument). When a probe is undecided the bisection
/// stops early and `undecided` is set.
struct BisectionResult {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool undecided = false;
  std::size_t probes = 0;
  std::optional<SpnCertificate> certificate;
};

/// max{lambda : Q - lambda E is SPN}, bracketed by the smallest entry and the
/// smallest diagonal entry.
BisectionResult z_spn_bisection(const SymMatrix& q, const Tolerances& tol = {});
BisectionResult z_spn_bisection(const StqpInstance& inst, const Tolerances& tol = {});

struct DnnPrimalResult {
  double value = 0.0;
  SymMatrix x;
  int iterations = 0;
};

/// min{Q.X : E.X = 1, X PSD, X >= 0} by ADMM on the split X = Y, with X kept
/// PSD and Y kept on the simplex of entries. Throws NoConvergence carrying the
/// last objective when max_iter is reached.
DnnPrimalResult z_dnn_primal(const SymMatrix& q, const Tolerances& tol = {});
DnnPrimalResult z_dnn_primal(const StqpInstance& inst, const Tolerances& tol = {});

struct StqpReport {
  std::optional<double> z_star;
  std::vector<double> minimizer;
  double z_spn = 0.0;
  double z_spn_lo = 0.0;
  double z_spn_hi = 0.0;
  bool spn_undecided = false;
  std::optional<double> z_dnn;
  std::optional<double> gap;
  bool tight = false;
  std::vector<ClassLabel> certificates;
  /// Permutation taking Q into M_n, when one exists.
  std::optional<GroupElement> orbit_witness;
  std::optional<SpnCertificate> spn_certificate;

  /// False when a tightness certificate is attached but the numeric gap
  /// exceeds eps_opt.
  bool consistent() const { return certificates.empty() || tight; }
};

StqpReport certify_tightness(const StqpInstance& inst, const Tolerances& tol = {});

/// max{lambda : Q - lambda I is SPN}, bracketed by [lambda_min(Q), min q_ii].
BisectionResult sphere_relaxation(const SymMatrix& q, const Tolerances& tol = {});

/// Exhaustive minimum of x^T Q x over the nonnegative unit sphere, by
/// enumerating supports and taking the smallest eigenvalue of each principal
/// block that has a nonnegative eigenvector. Throws DimensionTooLarge for n > 20.
double sphere_minimum(const SymMatrix& q, const Tolerances& tol = {});

}  // namespace spnkit
