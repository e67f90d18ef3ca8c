#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enriques/invariants.hpp"

namespace enriques::cli {

enum class OutputFormat { jsonl, csv };

enum ExitCode : int { ok = 0, usage = 2, infeasible_bound = 3, invariant_failure = 4 };

struct RunConfig {
  std::string command;
  // Input payloads.
  std::optional<std::string> point;      // comma-separated rationals
  std::optional<std::string> vector;     // vector literal (JSON)
  std::optional<std::string> klass;      // blowup class literal (JSON)
  std::optional<std::string> candidate;  // period candidate literal (JSON)
  // Bounds and knobs.
  std::optional<long> cmax;
  NefModel nef_model = NefModel::forward_cone;
  long k = 0;
  std::vector<long> ks{0, 1};
  std::uint64_t seed = 1;
  long denom = 120;
  std::size_t n = 10000;
  std::pair<int, int> projection{9, 10};
  bool brute = false;
  bool normalize = true;
  OutputFormat format = OutputFormat::jsonl;
  std::optional<std::string> out;
};

/// Thrown for command-line problems; maps to exit code 2.
struct UsageError {
  std::string message;
};

/// Thrown by parse_args for --help; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

RunConfig parse_args(int argc, const char* const* argv);

/// Executes a configuration, writing records to `out`. Library errors
/// propagate as enriques::Error.
int run(const RunConfig& config, std::ostream& out);

/// Full entry point: parsing, dispatch, --out redirection and structured
/// error records (one JSON object on `err`). Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace enriques::cli
