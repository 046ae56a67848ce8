#include <gtest/gtest.h>

#include "spnkit/selftest.hpp"

using namespace spnkit;

TEST(Selftest, AllSuitesPassAcrossSeeds) {
  for (std::uint64_t seed : {1u, 2u, 7u}) {
    for (const SuiteResult& s : run_selftest(seed, 150)) {
      EXPECT_TRUE(s.passed()) << s.name << " seed " << seed << ": " << s.first_failure;
      EXPECT_EQ(s.cases, 150u);
    }
  }
}

TEST(Selftest, DeterministicPerSeed) {
  const auto a = run_selftest(5, 30);
  const auto b = run_selftest(5, 30);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].failures, b[i].failures);
  }
}
