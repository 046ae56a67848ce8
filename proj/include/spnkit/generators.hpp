#pragma once

#include <cstddef>
#include <random>

#include "spnkit/matrix.hpp"

namespace spnkit {

// Random instance families for property checks. All draws go through the
// supplied engine so a seed fixes the whole sequence.

using Rng = std::mt19937_64;

/// Entries uniform in [lo, hi].
SymMatrix random_symmetric(Rng& rng, std::size_t n, double lo = -5.0, double hi = 5.0);

/// A random symmetric matrix pushed into M_n by running maxima along rows and
/// symmetrisation until stable. Diagonal entries are left free.
SymMatrix random_Mn(Rng& rng, std::size_t n);

/// A member of R_n whose first k rows carry no positive off-diagonal entry.
/// The first row is strictly negative off the diagonal with a positive pivot.
SymMatrix random_Rn(Rng& rng, std::size_t n, std::size_t k);

/// P + N with P a random Gram matrix of rank up to n and N entrywise
/// nonnegative; always SPN, hence copositive.
SymMatrix random_spn(Rng& rng, std::size_t n);

/// Diagonally dominant with nonpositive off-diagonal entries.
SymMatrix random_m_matrix(Rng& rng, std::size_t n);

/// Uniform permutation with diagonal entries drawn log-uniformly from [1/4, 4].
GroupElement random_group(Rng& rng, std::size_t n);

}  // namespace spnkit
