#include <gtest/gtest.h>

#include <filesystem>

#include "spnkit/error.hpp"
#include "spnkit/generators.hpp"
#include "support.hpp"

using namespace spnkit;

TEST(TextIo, ParsesCommentsAndFreeLayout) {
  const SymMatrix a = parse_matrix("# comment\n2 # size\n1 2\n  2\n3\n");
  EXPECT_EQ(a, (SymMatrix{{1, 2}, {2, 3}}));
}

TEST(TextIo, MalformedFixtureReportsPosition) {
  try {
    test::load("malformed");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.line(), 6);
  }
}

TEST(TextIo, RejectsGarbage) {
  EXPECT_THROW(parse_matrix(""), ParseError);
  EXPECT_THROW(parse_matrix("2\n1 x\n2 3\n"), ParseError);
  EXPECT_THROW(parse_matrix("-1\n"), ParseError);
  EXPECT_THROW(parse_matrix("1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_matrix("2\n1 5\n0 1\n"), Error);
}

TEST(TextIo, FormatRoundTripsExactly) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const SymMatrix a = random_symmetric(rng, 1 + t % 7, -1e3, 1e3);
    EXPECT_EQ(parse_matrix(format_matrix(a)), a);
  }
  const std::vector<double> v{0.1, -2.5e-300, 7.0};
  EXPECT_EQ(parse_vector(format_vector(v)), v);
}

TEST(TextIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "spnkit_text_io_roundtrip.txt";
  const SymMatrix h = test::horn();
  write_matrix(path, h);
  EXPECT_EQ(read_matrix(path), h);
  std::filesystem::remove(path);
  EXPECT_THROW(read_matrix(path), Error);
}

TEST(TextIo, VectorFixtures) {
  EXPECT_EQ(read_vector(test::fixture("separable_alpha.txt")), (std::vector<double>{0, 0, 0, 0}));
  EXPECT_EQ(read_vector(test::fixture("separable_beta.txt")), (std::vector<double>{1, 1, 1, 1}));
}
