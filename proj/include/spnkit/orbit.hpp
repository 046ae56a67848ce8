#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spnkit/lp.hpp"
#include "spnkit/matrix.hpp"

namespace spnkit {

enum class OrbitMethod { RescaleOnly, PermuteOnly, Joint };

const char* to_string(OrbitMethod method);

/// When `found`, apply_group(*witness, A) passes is_Mn.
struct OrbitResult {
  bool found = false;
  std::optional<GroupElement> witness;
  OrbitMethod method = OrbitMethod::RescaleOnly;
};

/// Largest n for the exhaustive joint search.
inline constexpr std::size_t kMaxJointDim = 8;

/// Feasibility LP over d >= 1 with d_k a_ik - d_j a_ij >= 0 for every row i
/// and consecutive off-diagonal columns j < k of that row. Minimises sum(d).
LpProblem rescale_lp(const SymMatrix& a);

/// The same feasibility question over y = log d >= 0. Pairs of like sign
/// become difference constraints y_k - y_j >= log(a_ij / a_ik); pairs of
/// mixed sign are settled by their signs, and nullopt means one of them is
/// violated outright. Variable n is a bound t >= y_i and the objective
/// minimises it, which keeps max d / min d small. The constraint matrix has
/// entries in {-1, 0, 1}, which keeps the simplex tableau exact up to the
/// rounding of the logarithms.
std::optional<LpProblem> rescale_lp_log(const SymMatrix& a, const Tolerances& tol = {});

OrbitResult rescale_into_Mn(const SymMatrix& a, const Tolerances& tol = {});

/// Arc j -> k when some row i outside {j, k} has a_ij < a_ik - eps_ord. Any
/// topological order of that digraph is a valid permutation.
OrbitResult permute_into_Mn(const SymMatrix& a, const Tolerances& tol = {});

/// Tries every permutation whose rows have monotone sign patterns, and runs
/// the rescaling LP on each survivor. Throws DimensionTooLarge for n > 8.
OrbitResult joint_orbit_search(const SymMatrix& a, const Tolerances& tol = {});

/// Extreme rays of SPN_n known to lie in the cone generated by the orbit of
/// M_n intersected with the copositive cone.
struct KnGenerator {
  enum class Kind { UnitPair, RankOneSignedVector, RankOnePlusMinus };
  Kind kind = Kind::UnitPair;
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  /// Entries of v for RankOneSignedVector; magnitudes (positive, negative)
  /// for RankOnePlusMinus, defaulting to (1, 1) when empty.
  std::vector<double> values;
};

/// Throws InvalidParams when the parameters violate the generator's hypotheses.
SymMatrix kn_generator(const KnGenerator& spec);

}  // namespace spnkit
