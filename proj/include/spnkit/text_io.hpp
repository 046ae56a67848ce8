#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spnkit/matrix.hpp"

namespace spnkit {

// Matrix text format: the dimension n, then n*n whitespace-separated reals in
// row-major order. '#' starts a comment running to the end of the line.
// Vector files use the same layout with n values.

SymMatrix parse_matrix(std::string_view text);
SymMatrix read_matrix(const std::filesystem::path& path);

/// n on the first line, then one row per line, 17 significant digits.
std::string format_matrix(const SymMatrix& a);
void write_matrix(const std::filesystem::path& path, const SymMatrix& a);

std::vector<double> parse_vector(std::string_view text);
std::vector<double> read_vector(const std::filesystem::path& path);
std::string format_vector(const std::vector<double>& v);

/// Shortest round-trip form is not used; values always carry 17 significant digits.
std::string format_real(double x);

}  // namespace spnkit
