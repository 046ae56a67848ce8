#include "spnkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spnkit {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Raises entries until each row is nondecreasing off the diagonal and the
// matrix is symmetric. Only maxima are taken, so the loop terminates.
void order_rows(std::vector<double>& m, std::size_t n) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      double run = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double& v = m[i * n + j];
        if (v < run) {
          v = run;
          changed = true;
        }
        run = v;
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = std::max(m[i * n + j], m[j * n + i]);
        if (m[i * n + j] != v || m[j * n + i] != v) changed = true;
        m[i * n + j] = m[j * n + i] = v;
      }
  }
}

}  // namespace

SymMatrix random_symmetric(Rng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i * n + j] = m[j * n + i] = uniform(rng, lo, hi);
  return SymMatrix(n, std::move(m));
}

SymMatrix random_Mn(Rng& rng, std::size_t n) {
  const SymMatrix base = random_symmetric(rng, n);
  std::vector<double> m(base.data().begin(), base.data().end());
  order_rows(m, n);
  return SymMatrix(n, std::move(m));
}

SymMatrix random_Rn(Rng& rng, std::size_t n, std::size_t k) {
  k = std::clamp<std::size_t>(k, 1, n);
  std::vector<double> m(n * n, 0.0);
  // Upper triangle: rows before k nonpositive, later rows free; each row is
  // sorted from column max(k, i + 1) on.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      m[i * n + j] = i < k ? uniform(rng, -5.0, i == 0 ? -0.1 : 0.0) : uniform(rng, -5.0, 5.0);
    const std::size_t from = std::max(k, i + 1);
    if (from < n) std::sort(m.begin() + static_cast<std::ptrdiff_t>(i * n + from),
                            m.begin() + static_cast<std::ptrdiff_t>(i * n + n));
  }
  // A positive entry may not exceed its right or lower neighbour.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double v = m[i * n + j];
        if (v <= 0.0) continue;
        if (j + 1 < n && m[i * n + j + 1] < v) {
          m[i * n + j + 1] = v;
          changed = true;
        }
        const std::size_t down = i + 1 == j ? i + 2 : i + 1;
        if (down < n && down != j && m[std::min(down, j) * n + std::max(down, j)] < v) {
          m[std::min(down, j) * n + std::max(down, j)] = v;
          changed = true;
        }
      }
  }
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = i == 0 ? uniform(rng, 0.1, 5.0) : uniform(rng, -5.0, 5.0);
    for (std::size_t j = i + 1; j < n; ++j) m[j * n + i] = m[i * n + j];
  }
  return SymMatrix(n, std::move(m));
}

SymMatrix random_spn(Rng& rng, std::size_t n) {
  const std::size_t rank = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::vector<double> p(n * n, 0.0);
  for (std::size_t r = 0; r < rank; ++r) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(rng, -2.0, 2.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p[i * n + j] += v[i] * v[j];
  }
  std::vector<double> nn(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = std::bernoulli_distribution(0.5)(rng) ? uniform(rng, 0.0, 2.0) : 0.0;
      nn[i * n + j] = nn[j * n + i] = v;
    }
  return SymMatrix(n, std::move(p)) + SymMatrix(n, std::move(nn));
}

SymMatrix random_m_matrix(Rng& rng, std::size_t n) {
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i * n + j] = m[j * n + i] = -uniform(rng, 0.0, 3.0);
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) off -= m[i * n + j];
    m[i * n + i] = off + uniform(rng, 0.01, 2.0);
  }
  return SymMatrix(n, std::move(m));
}

GroupElement random_group(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<double> diag(n);
  for (double& d : diag) d = std::exp(uniform(rng, std::log(0.25), std::log(4.0)));
  return GroupElement::permutation(std::move(perm)) * GroupElement::scaling(std::move(diag));
}

}  // namespace spnkit
