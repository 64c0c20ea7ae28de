/*
Copyright (c) 2026 The pev authors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pev/engine.hpp"

namespace pev::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kInputError = 2,
  kInconsistent = 3,
};

struct JobConfig {
  std::string command;
  std::optional<std::string> instance;
  /// Path to a JSON file, or inline JSON.
  std::string algebra;
  std::vector<std::string> inputs;
  EngineLimits limits;
  /// Largest LP (in variables) the distribution decision will build.
  std::size_t lp_cap = 400;
  std::string format = "text";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int level = 2;
  bool inject_fault = false;
  std::optional<std::string> witness;
};

/// Parses argv into a job and runs it. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed job.
int execute(const JobConfig& job, std::ostream& out, std::ostream& err);

}  // namespace pev::cli
