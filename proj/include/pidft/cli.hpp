#pragma once

// Command-line front end. parse_command_line turns argv into a RunConfig
// (throwing UsageError on bad input); run executes it and returns the exit
// status: 0 all checks pass, 1 a check failed, 2 usage error, 3 numerical
// non-convergence. Failures also print a one-line JSON summary to stderr.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pidft {

enum class Command { Dft, Invert, Chartable, Verify, Converge, Bounds };

enum class Method { Auto, Naive, Fast };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Verify;
  /// Ascending, duplicates removed, each in [1, 512]. Empty means the
  /// command's default.
  std::vector<std::int64_t> n_list;
  std::string function = "gaussian";
  std::vector<double> eps_list{0.5, 0.1, 0.02};
  /// Empty writes to stdout.
  std::string out_path;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string suite = "all";
  std::string group;
  Method method = Method::Auto;
  /// Precision cap for the extended-precision convergence metrics.
  long max_bits = 1L << 17;
  /// argv joined by spaces, recorded in the CSV header comment.
  std::string command_line;
};

/// Parses "8", "1..16", "4,8,16" and mixtures such as "1..4,8".
std::vector<std::int64_t> parse_n_spec(const std::string& text);

/// Throws UsageError. Returns std::nullopt when help was requested (the help
/// text has then been written to `out`).
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out);

/// Writes the CSV and returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run with the exit-status contract.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pidft
