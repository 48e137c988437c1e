// Copyright 2026 The qwire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qwire/cli/commands.hpp"

using namespace qwire::cli;

int main(int argc, char** argv) {
  CLI::App app{"Thermal-noise simulator for fermionic quantum-wire state transfer"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value settings file (command line overrides it)");

  // Flag name -> settings key. Values are parsed by the config layer so that
  // file and command line accept the same syntax.
  const std::vector<std::pair<std::string, std::string>> flags{
      {"--out", "output file (default: stdout)"},
      {"--scheme", "a | c | both"},
      {"--n", "number of sites N >= 2"},
      {"--j", "coupling unit J (default pi)"},
      {"--tau", "transfer time (default 1/2)"},
      {"--omega", "on-site energy: number, '<x>pi' or inf"},
      {"--beta", "inverse temperature (finite omega)"},
      {"--beta-prime", "rescaled inverse temperature omega*beta (omega = inf)"},
      {"--rates", "uniform | quadratic | list:w1,...,wN"},
      {"--gamma", "rate scale Gamma"},
      {"--grid", "BETA_LO:BETA_HI:COUNT,GT_LO:GT_HI:COUNT"},
      {"--beta-axis", "LO:HI:COUNT"},
      {"--gamma-tau-axis", "LO:HI:COUNT"},
      {"--times", "LO:HI:COUNT"},
      {"--fit-window", "LO:HI:COUNT[:log] in Gamma*t"},
      {"--target", "threshold fidelity (default 2/3)"},
      {"--engine", "rk4 | exact | auto"},
      {"--frame", "interaction | lab"},
      {"--jobs", "worker threads"},
      {"--seed", "seed for randomized checks and sampling"},
      {"--perturb-hamiltonian", "test hook: relative coupling perturbation"},
  };
  std::map<std::string, std::optional<std::string>> values;
  for (const auto& [flag, help] : flags) app.add_option(flag, values[flag], help);

  const std::map<std::string, std::string> summaries{
      {"spectrum", "one-particle energies and mode amplitudes"},
      {"fidelity", "channel and average fidelity for one parameter point"},
      {"sweep", "F_a, F_c and their difference over a (beta, Gamma tau) grid"},
      {"threshold", "Gamma tau at which F drops to the target, per beta"},
      {"fit", "collision exponents from short-time fidelity"},
      {"verify", "built-in invariant checks"},
  };
  std::string command;
  for (const auto& name : command_names()) {
    app.add_subcommand(name, summaries.at(name))->fallthrough()->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig cfg;
  try {
    std::vector<Settings> layers;
    if (!config_path.empty()) layers.push_back(read_settings_file(config_path));
    Settings cli;
    for (const auto& [flag, help] : flags) {
      if (values[flag]) cli.emplace_back(flag.substr(2), *values[flag]);
    }
    layers.push_back(cli);
    cfg = resolve(RunConfig{}, layers);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run_command(command, cfg, std::cout, std::cerr);
}
