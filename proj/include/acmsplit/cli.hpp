#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acmsplit/resolutions.hpp"

namespace acmsplit::cli {

enum class Command { Report, Kmr, Hilbert, SolveC2, CheckCase };
enum class OutputFormat { Markdown, Json };

struct RunConfig {
  Command command = Command::Report;
  int degree = 0;
  std::optional<std::string> catalog_path;
  std::optional<std::string> resolution_path;
  std::optional<std::string> out_path;
  OutputFormat output_format = OutputFormat::Markdown;
  std::optional<ParameterGrid> grid;
  std::optional<std::int64_t> twist;
  std::optional<int> c1;
  std::optional<std::int64_t> c2;
  std::optional<std::int64_t> expect_bound;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconclusive = 1;  // or an expected-value mismatch
inline constexpr int kExitInputError = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string document;     // for standard output; empty when written to --out
  std::string diagnostics;  // for standard error
};

/// Parses "LO..HI". Returns nullopt on malformed input.
std::optional<ParameterGrid> parse_grid(const std::string& text);

/// Runs one invocation. `args` excludes the program name. Never throws.
RunResult run(const std::vector<std::string>& args);

}  // namespace acmsplit::cli
