// Copyright 2026 The Volterra Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// volterra-lab: command-line front end for the experiments.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "volterra/config.hpp"
#include "volterra/error.hpp"
#include "volterra/experiments.hpp"

int main(int argc, char** argv) {
  using namespace volterra;
  CLI::App app{"Voting trees, Volterra operators and the Stein-Ulam spiral"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string backend;
  std::size_t precision_start = 0;
  std::size_t precision_cap = 0;
  std::string out_dir;

  const char* names[] = {"orbit", "plot", "verify-props", "rpt", "sixpoints", "theorem-demo"};
  const char* help[] = {"orbit CSV and SVG", "barycentric SVG of an orbit", "property sweeps",
                        "root distribution vs Monte Carlo", "six-point certificate",
                        "tripartite tournament demonstration"};
  for (int i = 0; i < 6; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--config", config_path, "key = value config file");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--backend", backend, "exact or interval")->check(CLI::IsMember({"exact", "interval"}));
    sub->add_option("--precision-start", precision_start, "starting interval precision in bits");
    sub->add_option("--precision-cap", precision_cap, "interval precision cap in bits");
    sub->add_option("--out", out_dir, "output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::string name = app.get_subcommands().front()->get_name();
  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    CLI::App* sub = app.get_subcommands().front();
    // Flags override the file.
    if (sub->count("--seed")) config.values["seed"] = std::to_string(seed);
    if (sub->count("--backend")) config.values["backend"] = backend;
    if (sub->count("--precision-start")) config.values["precision_start"] = std::to_string(precision_start);
    if (sub->count("--precision-cap")) config.values["precision_cap"] = std::to_string(precision_cap);
    if (sub->count("--out")) config.values["out"] = out_dir;
    apply_reserved(config);
  } catch (const Error& e) {
    std::cerr << "volterra-lab: " << e.what() << "\n";
    return kExitUsage;
  }

  CommandResult result = run_command(name, config);
  try {
    write_outputs(result, name, config.out_dir);
  } catch (const Error& e) {
    std::cerr << "volterra-lab: " << e.what() << "\n";
    return kExitUsage;
  }
  if (result.report.contains("error")) {
    std::cerr << "volterra-lab: " << result.report["error"].get<std::string>() << "\n";
  }
  std::cout << name << ": exit " << result.exit_code << "\n";
  return result.exit_code;
}
