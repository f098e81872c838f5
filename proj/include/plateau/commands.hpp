// Copyright 2026 The plateau authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace plateau {

/// Exit-code contract shared by every subcommand:
///   0 success, 1 config error, 2 closure truncation, 3 outside-theory,
///   4 non-convergence.
enum ExitCode {
  kOk = 0,
  kConfigError = 1,
  kTruncation = 2,
  kOutsideTheory = 3,
  kNoConvergence = 4,
};

struct CommandResult {
  int exit_code = kOk;
  nlohmann::json report;
  std::string csv;  // empty when the command emits no table
};

CommandResult run_dla(const nlohmann::json& config);
CommandResult run_purity(const nlohmann::json& config);
CommandResult run_variance(const nlohmann::json& config);
CommandResult run_montecarlo(const nlohmann::json& config);
CommandResult run_depth(const nlohmann::json& config);
CommandResult run_reproduce_si(const nlohmann::json& config);

/// Runs a named subcommand, catching domain errors into the exit-code
/// contract.  The report always carries the resolved config and, on error,
/// a status + message pair.
CommandResult run_command(const std::string& command, const nlohmann::json& config);

/// Atomic file write (temp + rename).
void write_file_atomic(const std::string& path, const std::string& contents);

/// The chain problem family used by reproduce-si: XX couplings plus Z
/// fields, the four standard (observable, state) setups.
nlohmann::json si_setup_config(int setup, uint32_t n, uint64_t seed);

}  // namespace plateau
