#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace qcest::cli {

/// Fully resolved invocation. Angles are stored in radians; --degrees only
/// converts command-line input. The seed defaults to 0 so identical configs
/// reproduce byte-identical output.
struct RunConfig {
  std::string command;
  std::vector<std::pair<int, int>> pairs;
  bool has_theta = false;
  double theta = 0.0;
  bool has_theta0 = false;
  double theta0 = 0.0;
  std::string scenario;  ///< single | two-circle | opposite-parallel | opposite-antiparallel
  int steps = 181;
  int theta0_steps = 0;  ///< 0 means: same as steps
  std::int64_t samples = 100000;
  int trials = 200;
  int restarts = 20;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;  ///< empty means stdout
  bool degrees = false;
};

/// Exit codes shared by the command runners and main().
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Executes cfg.command, writing the primary report to `out`. Diagnostics go
/// to `err`. Returns one of the exit codes above.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv, resolves the output destination and dispatches. Returns the
/// process exit code.
int main_entry(int argc, char** argv);

/// Locale-independent float formatting used for all emitted values:
/// 12 significant digits, '.' decimal separator.
std::string format_number(double value);

}  // namespace qcest::cli
