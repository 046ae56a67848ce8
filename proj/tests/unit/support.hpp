#pragma once

#include <filesystem>
#include <string>

#include "spnkit/matrix.hpp"
#include "spnkit/text_io.hpp"

namespace spnkit::test {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(SPNKIT_FIXTURE_DIR) / name;
}

inline SymMatrix load(const std::string& name) { return read_matrix(fixture(name + ".txt")); }

inline SymMatrix horn() { return load("horn"); }

}  // namespace spnkit::test
