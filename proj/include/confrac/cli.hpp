#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace confrac::cli {

enum class Command { jacobian, partial, tangent, chain_check, verify };
enum class OutputMode { json, table };

/// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsageError = 2;

struct JobSpec {
  Command command = Command::jacobian;
  std::string expr;
  std::vector<std::string> vars;
  std::vector<double> point;
  double alpha = 1.0;
  std::optional<std::string> inner;                    // chain-check: inner f
  std::optional<std::vector<std::string>> outer_vars;  // chain-check: g's variables
  std::optional<std::string> index;                    // partial: 1-based index or name
  std::optional<double> h0;
  std::optional<int> levels;
  std::optional<double> tol;
  double zero_tol = 1e-8;  // verify: absolute tolerance for entries that are exactly 0
};

std::string_view name_of(Command c) noexcept;

/// Executes a job and writes the report to `out`. Diagnostics go to `err`.
/// Returns kSuccess, kFail (a check did not pass) or kUsageError.
int run(const JobSpec& spec, OutputMode mode, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses `args` (args[0] is the program
/// name) and dispatches to run().
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Strict decimal literal: [+-]?digits(.digits)?([eE][+-]?digits)?
/// Throws ArgumentError otherwise.
double parse_decimal(std::string_view text);

}  // namespace confrac::cli
