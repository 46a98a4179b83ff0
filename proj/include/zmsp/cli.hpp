#pragma once

#include <zmsp/serialize.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zmsp::cli {

enum class Command { kEval, kExpand, kCount, kVerify, kConjecture };
enum class Method { kAuto, kDp, kNaive, kClosed };

struct CliConfig {
  Command command = Command::kEval;
  std::optional<int> n;
  std::optional<int> k;
  int l = 1;
  std::optional<std::string> lambda;
  Method method = Method::kAuto;
  OutputFormat format = OutputFormat::kJson;
  std::string suite = "all";
  unsigned jobs = 1;
  std::size_t budget = 0;  // 0: default (ZMSP_BUDGET or 10^7)
  bool omit_elapsed = false;
};

enum ExitCode : int {
  kOk = 0,
  kMathFailure = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Parses argv into a config. On --help or a parse error, writes to out/err
/// and returns the exit code to use instead of a config.
struct ParseResult {
  std::optional<CliConfig> config;
  int exit_code = kOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a validated config; results go to `out`, diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zmsp::cli
