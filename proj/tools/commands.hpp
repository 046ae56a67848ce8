#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spnkit/matrix.hpp"
#include "spnkit/serialize.hpp"

namespace spnkit::cli {

// Exit codes shared by every command.
inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUndecided = 2;
inline constexpr int kUsage = 3;

enum class Format { Json, Text };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  Tolerances tol;
  Format format = Format::Json;
  std::uint64_t seed = 0;
  /// signgraph: emit DOT instead of the report.
  bool dot = false;
  /// stqp: inputs are an alpha file and a beta file.
  bool separable = false;
  /// selftest: cases per suite.
  std::size_t cases = 1000;
};

struct CommandResult {
  int exit_code = kAffirmative;
  Json report;
  /// Set when the command produces non-JSON output (DOT).
  std::string raw;
};

CommandResult cmd_classify(const RunConfig& cfg);
CommandResult cmd_decompose(const RunConfig& cfg);
CommandResult cmd_stqp(const RunConfig& cfg);
CommandResult cmd_orbit(const RunConfig& cfg);
CommandResult cmd_signgraph(const RunConfig& cfg);
CommandResult cmd_selftest(const RunConfig& cfg);

/// Flattens a report into an aligned two-column table.
std::string render_text(const Json& report);

/// Parses arguments, runs the command and writes its output. Library errors
/// are reported on `err` and mapped to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spnkit::cli
