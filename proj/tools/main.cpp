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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plateau/commands.hpp"
#include "plateau/version.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  int64_t n = -1;
  int64_t samples = -1;
  int64_t seed = -1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file");
  cmd->add_option("--out", opts.out_path,
                  "output path; reports go to <out>.json, tables to <out>.csv "
                  "(stdout when omitted)");
  cmd->add_option("--n", opts.n, "override config n");
  cmd->add_option("--samples", opts.samples, "override sample count");
  cmd->add_option("--seed", opts.seed, "override RNG seed");
}

int execute(const std::string& name, const CommonOptions& opts) {
  nlohmann::json config = nlohmann::json::object();
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      std::cerr << "cannot open config file " << opts.config_path << "\n";
      return plateau::kConfigError;
    }
    try {
      in >> config;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "config parse error: " << e.what() << "\n";
      return plateau::kConfigError;
    }
  }
  if (opts.n >= 0) config["n"] = opts.n;
  if (opts.samples >= 0) {
    config["sampling"]["samples"] = opts.samples;
  }
  if (opts.seed >= 0) {
    config["sampling"]["seed"] = opts.seed;
  }

  const plateau::CommandResult result = plateau::run_command(name, config);
  if (opts.out_path.empty()) {
    std::cout << result.report.dump(2) << "\n";
    if (!result.csv.empty()) std::cout << result.csv;
  } else {
    plateau::write_file_atomic(opts.out_path + ".json", result.report.dump(2) + "\n");
    if (!result.csv.empty()) {
      plateau::write_file_atomic(opts.out_path + ".csv", result.csv);
    }
  }
  if (result.exit_code != plateau::kOk && result.report.contains("message")) {
    std::cerr << result.report["status"].get<std::string>() << ": "
              << result.report["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-algebraic loss-concentration diagnostics for deep "
               "parameterized quantum circuits"};
  app.set_version_flag("--version", plateau::kVersionString);
  app.require_subcommand(1);

  const std::vector<std::string> names = {"dla",        "purity", "variance",
                                          "montecarlo", "depth",  "reproduce-si"};
  const std::vector<std::string> descriptions = {
      "compute the dynamical Lie algebra and its reductive decomposition",
      "project the state and observable onto the algebra components",
      "exact landscape mean/variance from the algebra decomposition",
      "Monte Carlo landscape variance with exact cross-check",
      "approximate-design contraction rate and depth targets",
      "run the four chain-family setups over a size range"};

  std::vector<CommonOptions> all_opts(names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    CLI::App* sub = app.add_subcommand(names[k], descriptions[k]);
    add_common(sub, all_opts[k]);
  }

  CLI11_PARSE(app, argc, argv);
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (app.got_subcommand(names[k])) return execute(names[k], all_opts[k]);
  }
  return plateau::kConfigError;
}
