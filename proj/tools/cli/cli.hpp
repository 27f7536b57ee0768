#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lininv::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPreconditionError = 3,
  kInternalError = 4,
};

struct CommandResult {
  /// {"command", "inputs", "outputs", "exit_code"} plus "error" on failure.
  Json document;
  int exit_code = kOk;
  /// Human-readable diagnostics for standard error.
  std::string diagnostics;
};

/// `args` excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace lininv::cli
