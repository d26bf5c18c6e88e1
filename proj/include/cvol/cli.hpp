#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cvol/report.hpp"

namespace cvol::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,   // tables: some cell differs from the reference
  kUsage = 2,      // bad flags or unreadable diagram
  kEmpty = 3,      // no essential solution found
  kNumerical = 4,  // numerical failure
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::optional<int> n;
  int n_starts = 500;
  std::uint64_t seed = 0;
  double radius = 10.0;
  Tolerances tol;
  bool json = false;
  bool timestamp = true;
  std::optional<std::string> at;  // "re,im;re,im;..." for check
};

struct CommandResult {
  int exit_code = kOk;
  Json json;
  std::string text;
};

CommandResult cmd_solve(const RunConfig& config);
CommandResult cmd_twist(const RunConfig& config);
CommandResult cmd_check(const RunConfig& config);
CommandResult cmd_tables(const RunConfig& config);

/// Parses "re,im;re,im;..." into a vector of length n.
ComplexVector parse_point(const std::string& text, int n);

/// Entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cvol::cli
