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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwire/analysis.hpp"

namespace qwire::cli {

/// Bad user input: unknown key, malformed value, conflicting options.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SchemeSelection { a, c, both };

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
  bool logarithmic = false;

  std::vector<double> values() const;
  std::string to_string() const;
};

struct RunConfig {
  int n_sites = 6;
  double coupling = 3.14159265358979323846;
  double transfer_time = 0.5;
  Omega omega = Omega::infinite();
  /// beta for finite omega, beta' for infinite omega. Exactly one may be set;
  /// neither means infinite temperature.
  std::optional<double> beta;
  std::optional<double> beta_prime;
  RateSpec rates;
  double gamma = 0.0;
  SchemeSelection scheme = SchemeSelection::both;
  Axis beta_axis{0.0, 4.0, 20};
  Axis gamma_tau_axis{0.0, 2.0, 20};
  Axis times{0.0, 3.0, 31};
  Axis fit_window{0.1, 1.0, 12, true};
  double target_fidelity = 2.0 / 3.0;
  /// Unset: rk4 for single runs and verify, exact for grids and fits.
  std::optional<Engine> engine;
  Frame frame = Frame::interaction;
  std::string out;
  int jobs = 1;
  std::uint64_t seed = 1;
  /// verify test hook: relative perturbation of the chain couplings.
  double perturb_hamiltonian = 0.0;

  ChainSpec chain() const;
  /// The active temperature parameter (beta or beta'); 0 when unset.
  double temperature() const;
  bool wants(Scheme s) const;
  TransferOptions transfer_options(Engine fallback) const;

  /// Checks cross-field invariants; throws UsageError.
  void validate() const;

  /// Canonical key=value lines of every setting that affects results.
  std::vector<std::string> echo() const;
};

/// Ordered key=value settings; later layers override earlier ones.
using Settings = std::vector<std::pair<std::string, std::string>>;

Settings read_settings_file(const std::string& path);

/// Applies settings in order on top of `base`. beta and beta_prime share one
/// slot across layers; setting both within one layer is an error.
RunConfig resolve(const RunConfig& base, const std::vector<Settings>& layers);

double parse_real(const std::string& text);
Omega parse_omega(const std::string& text);
Axis parse_axis(const std::string& text);

}  // namespace qwire::cli
