#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spnkit/error.hpp"
#include "spnkit/generators.hpp"
#include "spnkit/linalg.hpp"
#include "support.hpp"

using namespace spnkit;

namespace {

// Largest entry of |A V - V diag(values)| and |V^T V - I|.
double eigen_defect(const SymMatrix& a, const EigenDecomposition& e) {
  const std::size_t n = a.n();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      double av = 0.0, vv = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        av += a(i, j) * e.vector_entry(j, k);
        vv += e.vector_entry(j, i) * e.vector_entry(j, k);
      }
      worst = std::max(worst, std::abs(av - e.values[k] * e.vector_entry(i, k)));
      worst = std::max(worst, std::abs(vv - (i == k ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace

TEST(Eigen, TrivialSpectra) {
  for (double v : sym_eigen(SymMatrix::identity(4)).values) EXPECT_NEAR(v, 1.0, 1e-14);
  const auto e = sym_eigen(SymMatrix{{0, 1}, {1, 0}});
  EXPECT_NEAR(e.values[0], -1.0, 1e-14);
  EXPECT_NEAR(e.values[1], 1.0, 1e-14);
}

TEST(Eigen, HornSpectrumFromCirculantFormula) {
  // Circulant with first row (1,-1,1,1,-1): 1 - 2cos(2 pi k/5) + 2cos(4 pi k/5).
  const auto e = sym_eigen(test::horn());
  std::vector<double> expected;
  for (int k = 0; k < 5; ++k) {
    const double t = 2.0 * std::numbers::pi * k / 5.0;
    expected.push_back(1.0 - 2.0 * std::cos(t) + 2.0 * std::cos(2.0 * t));
  }
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(e.values[k], expected[k], 1e-12);
  EXPECT_NEAR(e.values[0], 1.0 - std::sqrt(5.0), 1e-12);
  EXPECT_LT(min_eigenvalue(test::horn()), -1e-9);
}

TEST(Eigen, TridiagonalSpectrum) {
  // Second-difference matrix: 2 - 2cos(k pi/(n+1)).
  const std::size_t n = 9;
  std::vector<double> m(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = 2.0;
    if (i + 1 < n) m[i * n + i + 1] = m[(i + 1) * n + i] = -1.0;
  }
  const auto e = sym_eigen(SymMatrix(n, m));
  for (std::size_t k = 1; k <= n; ++k)
    EXPECT_NEAR(e.values[k - 1], 2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1)), 1e-12);
}

TEST(Eigen, RandomDecompositionsAreExact) {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    const SymMatrix a = random_symmetric(rng, 1 + t % 12);
    const auto e = sym_eigen(a);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));
    EXPECT_LT(eigen_defect(a, e), 1e-11);
    // Warm start from a nearby basis gives the same spectrum.
    const auto w = sym_eigen(a.shifted(1e-3), e.vectors);
    const auto c = sym_eigen(a.shifted(1e-3));
    for (std::size_t k = 0; k < a.n(); ++k) EXPECT_NEAR(w.values[k], c.values[k], 1e-11);
  }
}

TEST(ProjectPsd, TrivialCases) {
  const SymMatrix p{{2, 1}, {1, 2}};
  EXPECT_LT(max_abs_diff(project_psd(p), p), 1e-12);
  EXPECT_LT(max_abs_diff(project_psd(SymMatrix{{0, 1}, {1, 0}}), SymMatrix{{0.5, 0.5}, {0.5, 0.5}}),
            1e-12);
  EXPECT_LT(project_psd(-1.0 * SymMatrix::identity(3)).max_abs(), 1e-15);
}

TEST(ProjectPsd, MoreauDecomposition) {
  // A = P+(A) - P+(-A) with the two parts orthogonal.
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const SymMatrix a = random_symmetric(rng, 2 + t % 8);
    const SymMatrix plus = project_psd(a);
    const SymMatrix minus = project_psd(-1.0 * a);
    EXPECT_LT(max_abs_diff(plus - minus, a), 1e-11);
    EXPECT_NEAR(inner(plus, minus), 0.0, 1e-9);
    EXPECT_GE(min_eigenvalue(plus), -1e-12);
  }
}

TEST(Schur, SignPatternMatrixGivesHorn) {
  const SymMatrix s = schur_complement(test::load("sign_pattern_a"), 0);
  EXPECT_LT(max_abs_diff(s, test::horn()), 1e-12);
}

TEST(Schur, SmallCases) {
  EXPECT_EQ(schur_complement(SymMatrix::identity(2), 0), SymMatrix{{1}});
  EXPECT_DOUBLE_EQ(schur_complement(SymMatrix{{2, 1}, {1, 2}}, 0)(0, 0), 1.5);
  try {
    schur_complement(SymMatrix{{0, 1}, {1, 2}}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPivot);
  }
}

TEST(Schur, DeterminantFactorises) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 6;
    const SymMatrix a = random_symmetric(rng, n).diagonal_shifted(8.0);
    const std::size_t i = static_cast<std::size_t>(t) % n;
    EXPECT_NEAR(determinant(a), a(i, i) * determinant(schur_complement(a, i)),
                1e-9 * (1.0 + std::abs(determinant(a))));
  }
}

TEST(Submatrices, DeleteAndPick) {
  EXPECT_EQ(delete_row_col(SymMatrix::identity(3), 1), SymMatrix::identity(2));
  EXPECT_EQ(delete_row_col(SymMatrix{{1, 2}, {2, 3}}, 0), SymMatrix{{3}});
  const SymMatrix q = test::load("extraneous_q");
  const std::vector<std::size_t> lead{0, 1, 2, 3};
  EXPECT_EQ(delete_row_col(q, 4), principal_submatrix(q, lead));
  const std::vector<std::size_t> ids{2, 0};
  EXPECT_EQ(embed(principal_submatrix(q, ids), ids, 5)(2, 0), q(2, 0));
}

TEST(Inverse, MatchesIdentity) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const SymMatrix a = random_symmetric(rng, 1 + t % 7).diagonal_shifted(12.0);
    const SymMatrix inv = inverse(a);
    const std::size_t n = a.n();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += a(i, k) * inv(k, j);
        EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-11);
      }
  }
  EXPECT_THROW(inverse(SymMatrix::ones(3)), Error);
}

TEST(SolveSymmetric, MinimumNormOnSingularSystem) {
  const std::vector<double> b{2.0, 2.0};
  const auto x = solve_symmetric(SymMatrix::ones(2), b);
  EXPECT_NEAR(x[0], 1.0, 1e-12);
  EXPECT_NEAR(x[1], 1.0, 1e-12);
}

TEST(OnesComplement, OrthonormalAndOrthogonalToOnes) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto b = ones_complement_basis(n);
    for (std::size_t c = 0; c + 1 < n; ++c) {
      double sum = 0.0;
      for (std::size_t r = 0; r < n; ++r) sum += b[r * (n - 1) + c];
      EXPECT_NEAR(sum, 0.0, 1e-13);
      for (std::size_t d = 0; d + 1 < n; ++d) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += b[r * (n - 1) + c] * b[r * (n - 1) + d];
        EXPECT_NEAR(dot, c == d ? 1.0 : 0.0, 1e-13);
      }
    }
  }
}
