#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hmorita::cli {

enum class Command { Scale, Reduce, Lift, Roundtrip, Verify, Fuzz };

enum ExitCode : int { kOk = 0, kParse = 2, kMath = 3, kInvariant = 4 };

struct CliConfig {
  Command command = Command::Fuzz;
  std::string input_path;
  /// Empty means standard output.
  std::string output_path;
  /// Where the equivalence report of scale/reduce/lift goes; empty means stderr.
  std::string report_path;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  bool strict = false;
  /// Target matrix size for `lift` of a D-side file without S.
  std::optional<std::size_t> lift_n;
};

/// Runs one command. Primary output goes to `out` unless output_path is set;
/// diagnostics go to `err`. Returns an ExitCode.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run(). Returns the exit status.
int main_with_args(int argc, char** argv);

}  // namespace hmorita::cli
