#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spnkit/matrix.hpp"

namespace spnkit {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Description of the first failing case, empty when none failed.
  std::string first_failure;
  double seconds = 0.0;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Randomised property suites over the library, each drawing `cases`
/// instances from an engine seeded with `seed`:
///   shift_invariance_Mn, schur_closure, copositivity_equivariance,
///   weak_duality_chain, threshold_filter, m_matrix_inverse.
std::vector<SuiteResult> run_selftest(std::uint64_t seed = 0, std::size_t cases = 1000,
                                      const Tolerances& tol = {});

}  // namespace spnkit
