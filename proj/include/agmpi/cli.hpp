#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace agmpi::cli {

enum class Command { kCompute, kTable, kVerify, kOracle };
enum class Algorithm { kBrentSalamin, kBorweinQuadratic, kBorweinQuartic };
enum class OutputFormat { kText, kJson };

struct CliConfig {
  Command command = Command::kCompute;
  std::int64_t digits = 100;
  Algorithm algorithm = Algorithm::kBrentSalamin;
  std::int64_t guard = 50;
  std::optional<std::int64_t> iterations;
  OutputFormat format = OutputFormat::kText;
};

/// Bad flags or values; main_entry maps it to exit code 2 plus usage text.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string usage_text();

/// Parses "command --flag value ..." (program name excluded). Unknown
/// flags are rejected.
CliConfig parse_args(const std::vector<std::string>& args);

/// Executes the command. Results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when a verification command fails.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Full program behaviour: parse, run, map errors to exit codes
/// (0 success, 1 verification failure, 2 usage error).
int main_entry(int argc, char** argv);

}  // namespace agmpi::cli
