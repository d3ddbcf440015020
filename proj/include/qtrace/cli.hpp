#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtrace/theorems.hpp"

namespace qtrace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { frobenius, main_check, count, positivity, sn_trace, rho_oracle, qbinom, suite };
enum class OutputMode { text, json };

struct RunConfig {
  Command command = Command::suite;
  std::optional<std::string> word;
  std::optional<int> n;
  std::optional<int> m;
  OutputMode output = OutputMode::text;
  std::optional<std::string> suite_path;
};

/// Parses a full argv (program name first). Throws UsageError on unknown
/// flags, missing or out-of-range parameters, bad words, or an invalid
/// (n, m) pair, all before any computation.
RunConfig parse_args(const std::vector<std::string>& argv);

/// Runs the configured check(s) and writes the report(s) to out.
/// Returns 0 when every check passes, 1 when any fails, 2 on errors.
int run(const RunConfig& config, std::ostream& out);

/// One JSON object per line: {"check": ..., "word": ..., "n": ..., "m": ...}.
/// Every line is validated before anything runs; a bad line aborts with
/// exit code 2 and its line number. Reports keep suite order.
int run_suite(const std::string& path, OutputMode output, std::ostream& out);

std::string usage_text();

int cli_main(int argc, char** argv);

}  // namespace qtrace
