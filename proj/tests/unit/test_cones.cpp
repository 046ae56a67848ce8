#include <gtest/gtest.h>

#include <cmath>
#include <variant>

#include "spnkit/classes.hpp"
#include "spnkit/cones.hpp"
#include "spnkit/error.hpp"
#include "spnkit/generators.hpp"
#include "spnkit/linalg.hpp"
#include "spnkit/orbit.hpp"
#include "support.hpp"

using namespace spnkit;

namespace {

// min x^T Q x over the grid {x >= 0, sum x = 1, x_i in (1/steps) Z}.
double simplex_grid_min(const SymMatrix& q, int steps) {
  const std::size_t n = q.n();
  std::vector<int> c(n, 0);
  double best = INFINITY;
  const auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      c[i] = left;
      double v = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) v += q(r, s) * c[r] * c[s];
      best = std::min(best, v / (static_cast<double>(steps) * steps));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      c[i] = k;
      self(self, i + 1, left - k);
    }
  };
  visit(visit, 0, steps);
  return best;
}

// Min value of the DNN relaxation of the Horn matrix, frozen from an
// independent interior-point conic solve.
constexpr double kHornDnn = -0.10557281044896409;

}  // namespace

TEST(SimplexMinimum, Examples) {
  const auto id = simplex_minimum(SymMatrix::identity(3));
  EXPECT_NEAR(id.value, 1.0 / 3.0, 1e-14);
  for (double x : id.minimizer) EXPECT_NEAR(x, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(simplex_minimum(test::horn()).value, 0.0, 1e-14);
  EXPECT_NEAR(simplex_minimum(test::load("extraneous_q")).value, 1.0, 1e-14);
}

TEST(SimplexMinimum, BoundedByGridOracle) {
  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const SymMatrix q = random_symmetric(rng, 2 + t % 3);
    const auto m = simplex_minimum(q);
    const double grid = simplex_grid_min(q, 60);
    // The grid is a subset of the simplex; its spacing bounds the gap.
    EXPECT_LE(m.value, grid + 1e-12);
    EXPECT_GE(m.value, grid - 0.5);
    double sum = 0.0, v = 0.0;
    for (double x : m.minimizer) sum += x;
    for (std::size_t i = 0; i < q.n(); ++i)
      for (std::size_t j = 0; j < q.n(); ++j) v += q(i, j) * m.minimizer[i] * m.minimizer[j];
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(v, m.value, 1e-10);
  }
  EXPECT_THROW(simplex_minimum(SymMatrix::identity(21)), Error);
}

TEST(CopositiveOracle, Examples) {
  const auto h = copositive_oracle(test::horn());
  EXPECT_TRUE(h.copositive);
  EXPECT_NEAR(h.min_value, 0.0, 1e-8);
  EXPECT_FALSE(copositive_oracle(SymMatrix{{0, -1}, {-1, 0}}).copositive);
  EXPECT_TRUE(copositive_oracle(SymMatrix::identity(3)).copositive);
}

TEST(CopositiveOracle, GroupEquivariance) {
  Rng rng(10);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + t % 5;
    SymMatrix a = random_symmetric(rng, n);
    a = a.shifted(-simplex_minimum(a).value + ((t % 3) - 1) * 0.05);
    const GroupElement g = random_group(rng, n);
    EXPECT_EQ(copositive_oracle(a).copositive, copositive_oracle(apply_group(g, a)).copositive);
  }
}

TEST(SpnOracle, TrivialCertificates) {
  const SymMatrix nn = test::load("nonnegative4");
  const auto out = spn_oracle(nn);
  ASSERT_TRUE(std::holds_alternative<SpnCertificate>(out));
  const auto& c = std::get<SpnCertificate>(out);
  EXPECT_EQ(c.psd_part.max_abs(), 0.0);
  EXPECT_EQ(c.nonneg_part, nn);

  const SymMatrix psd{{2, -1}, {-1, 2}};
  const SpnOutcome po = spn_oracle(psd);
  const auto& p = std::get<SpnCertificate>(po);
  EXPECT_EQ(p.nonneg_part.max_abs(), 0.0);
  EXPECT_TRUE(validate_certificate(psd, p));
}

TEST(SpnOracle, HornHasWitness) {
  const SymMatrix h = test::horn();
  const auto out = spn_oracle(h);
  ASSERT_TRUE(std::holds_alternative<DnnWitness>(out));
  const auto& w = std::get<DnnWitness>(out);
  EXPECT_LT(w.objective, -1e-6);
  EXPECT_TRUE(validate_witness(h, w));
  // Any DNN witness is bounded below by the relaxation optimum.
  EXPECT_GE(w.objective, kHornDnn - 1e-7);
}

TEST(SpnOracle, RandomSpnMatricesCertified) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const SymMatrix a = random_spn(rng, 2 + t % 7);
    const auto out = spn_oracle(a);
    ASSERT_TRUE(std::holds_alternative<SpnCertificate>(out)) << t;
    EXPECT_TRUE(validate_certificate(a, std::get<SpnCertificate>(out)));
  }
}

TEST(SpnOracle, BoundaryFourByFour) {
  // Nearly singular copositive matrix on the boundary of the cone.
  const SymMatrix a = parse_matrix(
      "4\n"
      "1.4483027656318781 0.35660847872985724 -0.00060069355534486668 0.31499391552780276\n"
      "0.35660847872985724 0.5367175249607542 0.61260585362288356 1.7559466487105142\n"
      "-0.00060069355534486668 0.61260585362288356 2.4914179275192794e-07 "
      "0.0086012634908205765\n"
      "0.31499391552780276 1.7559466487105142 0.0086012634908205765 1.5746623528028476\n");
  ASSERT_TRUE(copositive_oracle(a).copositive);
  const auto out = spn_oracle(a);
  ASSERT_TRUE(std::holds_alternative<SpnCertificate>(out));
  EXPECT_TRUE(validate_certificate(a, std::get<SpnCertificate>(out)));
}

TEST(SpnOracle, NotCopositiveGivesWitness) {
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    SymMatrix a = random_symmetric(rng, 2 + t % 6);
    a = a.shifted(-simplex_minimum(a).value - 0.01);
    const auto out = spn_oracle(a);
    ASSERT_TRUE(std::holds_alternative<DnnWitness>(out));
    EXPECT_TRUE(validate_witness(a, std::get<DnnWitness>(out)));
  }
}

TEST(Recursive, ExtraneousImageMinusE) {
  const SymMatrix q = test::load("extraneous_q");
  const SymMatrix image = apply_group(GroupElement::permutation({3, 4, 2, 0, 1}), q).shifted(-1.0);
  ASSERT_TRUE(is_Mn(image));
  const SpnCertificate c = spn_decompose_recursive(image);
  EXPECT_LE(c.residual, 1e-8);
  EXPECT_TRUE(validate_certificate(image, c));
}

TEST(Recursive, NonnegativeMnStripsRows) {
  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    SymMatrix a = random_Mn(rng, 5 + t % 4);
    a = a.shifted(-a.min_entry());
    const SpnCertificate c = spn_decompose_recursive(a);
    EXPECT_EQ(c.psd_part.max_abs(), 0.0);
    EXPECT_TRUE(validate_certificate(a, c));
    EXPECT_EQ(c.trace.front().kind, TraceStep::Kind::StripRow);
  }
}

TEST(Recursive, CopositiveZMatrixIsPsd) {
  Rng rng(15);
  for (int t = 0; t < 50; ++t) {
    const SymMatrix a = random_m_matrix(rng, 5 + t % 4);
    const SpnCertificate c = spn_decompose_recursive(a);
    EXPECT_LT(c.nonneg_part.max_abs(), 1e-9);
    EXPECT_TRUE(validate_certificate(a, c));
  }
}

TEST(Recursive, CopositiveMnMatricesCertified) {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    SymMatrix a = random_Mn(rng, 5 + t % 4);
    a = a.shifted(-simplex_minimum(a).value + 1e-3);
    const SpnCertificate c = spn_decompose_recursive(a);
    EXPECT_TRUE(validate_certificate(a, c)) << t;
  }
}

TEST(Recursive, RejectsUnsupportedAndNonCopositive) {
  try {
    spn_decompose_recursive(test::load("five_cycle").shifted(-0.1).diagonal_shifted(2.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInSupportedClass);
  }
  Rng rng(17);
  SymMatrix a = random_Mn(rng, 6);
  a = a.shifted(-simplex_minimum(a).value - 0.5);
  EXPECT_THROW(spn_decompose_recursive(a), Error);
}

TEST(Validate, RejectsTamperedCertificates) {
  const SymMatrix nn = test::load("nonnegative4");
  SpnCertificate c = spn_decompose_recursive(nn);
  ASSERT_TRUE(validate_certificate(nn, c));
  SymMatrix h = test::horn();
  EXPECT_FALSE(validate_certificate(h, SpnCertificate{h, SymMatrix::zeros(5), 0.0, {}}));
  std::vector<double> bad(nn.data().begin(), nn.data().end());
  bad[1] = bad[4] = -1.0;
  SpnCertificate t{nn - SymMatrix(4, bad), SymMatrix(4, bad), 0.0, {}};
  EXPECT_FALSE(validate_certificate(nn, t));
}

TEST(PullBack, RecoversOriginalCertificate) {
  Rng rng(18);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 5 + t % 3;
    SymMatrix m = random_Mn(rng, n);
    m = m.shifted(-simplex_minimum(m).value + 1e-3);
    const GroupElement g = random_group(rng, n);
    const SymMatrix a = apply_group(g.inverse(), m);
    const SpnCertificate c = pull_back(a, spn_decompose_recursive(m), g);
    EXPECT_TRUE(validate_certificate(a, c));
  }
}

TEST(ToDnn, ProducesDoublyNonnegative) {
  Rng rng(19);
  for (int t = 0; t < 30; ++t) {
    const auto x = to_dnn(random_symmetric(rng, 2 + t % 6).diagonal_shifted(6.0));
    ASSERT_TRUE(x.has_value());
    EXPECT_GE(x->min_entry(), 0.0);
    EXPECT_GE(min_eigenvalue(*x), -1e-12);
    double s = 0.0;
    for (double v : x->data()) s += v;
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
  EXPECT_FALSE(to_dnn(-1.0 * SymMatrix::ones(3)).has_value());
}
