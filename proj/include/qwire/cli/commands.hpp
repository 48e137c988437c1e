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


#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qwire/cli/run_config.hpp"

namespace qwire::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNumerical = 2 };

/// `data` receives tables and reports (or the --out file when set); `log`
/// receives diagnostics.
struct Streams {
  std::ostream& data;
  std::ostream& log;
};

int cmd_spectrum(const RunConfig& cfg, Streams io);
int cmd_fidelity(const RunConfig& cfg, Streams io);
int cmd_sweep(const RunConfig& cfg, Streams io);
int cmd_threshold(const RunConfig& cfg, Streams io);
int cmd_fit(const RunConfig& cfg, Streams io);
int cmd_verify(const RunConfig& cfg, Streams io);

const std::vector<std::string>& command_names();

/// Dispatches by name, opens cfg.out when set and maps exceptions to exit codes.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace qwire::cli
