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


#include "qwire/cli/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "qwire/cli/csv.hpp"

namespace qwire::cli {
namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string normalize_key(std::string key) {
  key = lower(trim(key));
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size()) throw UsageError("invalid integer for " + what + ": '" + text + "'");
  return v;
}

std::string rates_to_string(const RateSpec& r) {
  switch (r.preset) {
    case RatePreset::uniform:
      return "uniform";
    case RatePreset::quadratic:
      return "quadratic";
    case RatePreset::explicit_list: {
      std::vector<std::string> w;
      for (double x : r.weights) w.push_back(format_real(x));
      return "list:" + join(w);
    }
  }
  return "uniform";
}

RateSpec parse_rates(const std::string& text) {
  const std::string t = lower(trim(text));
  RateSpec r;
  if (t == "uniform") return r;
  if (t == "quadratic") {
    r.preset = RatePreset::quadratic;
    return r;
  }
  if (t.rfind("list:", 0) == 0) {
    r.preset = RatePreset::explicit_list;
    for (const auto& f : split(t.substr(5), ',')) r.weights.push_back(parse_real(f));
    return r;
  }
  throw UsageError("rates must be uniform, quadratic or list:w1,w2,...: '" + text + "'");
}

SchemeSelection parse_scheme(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "a") return SchemeSelection::a;
  if (t == "c") return SchemeSelection::c;
  if (t == "both") return SchemeSelection::both;
  throw UsageError("scheme must be a, c or both: '" + text + "'");
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "n") {
    cfg.n_sites = parse_int(value, key);
  } else if (key == "j") {
    cfg.coupling = parse_real(value);
  } else if (key == "tau") {
    cfg.transfer_time = parse_real(value);
  } else if (key == "omega") {
    cfg.omega = parse_omega(value);
  } else if (key == "beta") {
    cfg.beta = parse_real(value);
    cfg.beta_prime.reset();
  } else if (key == "beta_prime") {
    cfg.beta_prime = parse_real(value);
    cfg.beta.reset();
  } else if (key == "rates") {
    cfg.rates = parse_rates(value);
  } else if (key == "gamma") {
    cfg.gamma = parse_real(value);
  } else if (key == "scheme") {
    cfg.scheme = parse_scheme(value);
  } else if (key == "grid") {
    const auto parts = split(value, ',');
    if (parts.size() != 2) throw UsageError("grid must be BETA_LO:BETA_HI:COUNT,GT_LO:GT_HI:COUNT");
    cfg.beta_axis = parse_axis(parts[0]);
    cfg.gamma_tau_axis = parse_axis(parts[1]);
  } else if (key == "beta_axis") {
    cfg.beta_axis = parse_axis(value);
  } else if (key == "gamma_tau_axis") {
    cfg.gamma_tau_axis = parse_axis(value);
  } else if (key == "times") {
    cfg.times = parse_axis(value);
  } else if (key == "fit_window") {
    cfg.fit_window = parse_axis(value);
  } else if (key == "target") {
    cfg.target_fidelity = parse_real(value);
  } else if (key == "engine") {
    const std::string v = lower(trim(value));
    if (v == "rk4") {
      cfg.engine = Engine::rk4;
    } else if (v == "exact") {
      cfg.engine = Engine::exact;
    } else if (v == "auto") {
      cfg.engine.reset();
    } else {
      throw UsageError("engine must be rk4, exact or auto");
    }
  } else if (key == "frame") {
    const std::string v = lower(trim(value));
    if (v == "interaction") {
      cfg.frame = Frame::interaction;
    } else if (v == "lab") {
      cfg.frame = Frame::lab;
    } else {
      throw UsageError("frame must be interaction or lab");
    }
  } else if (key == "out") {
    cfg.out = trim(value);
  } else if (key == "jobs") {
    cfg.jobs = parse_int(value, key);
  } else if (key == "seed") {
    const std::string t = trim(value);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) throw UsageError("invalid seed: '" + value + "'");
    cfg.seed = v;
  } else if (key == "perturb_hamiltonian") {
    cfg.perturb_hamiltonian = parse_real(value);
  } else {
    throw UsageError("unknown setting '" + key + "'");
  }
}

}  // namespace

double parse_real(const std::string& text) {
  std::string t = lower(trim(text));
  double sign = 1.0;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    if (t[0] == '-') sign = -1.0;
    t = t.substr(1);
  }
  if (t == "inf" || t == "infinity") return sign * std::numeric_limits<double>::infinity();
  double scale = 1.0;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    scale = std::numbers::pi;
    t = t.substr(0, t.size() - 2);
    if (!t.empty() && t.back() == '*') t.pop_back();
    if (t.empty()) return sign * scale;
  }
  double v = 0.0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || p != t.data() + t.size() || !std::isfinite(v)) {
    throw UsageError("invalid number: '" + text + "'");
  }
  return sign * v * scale;
}

Omega parse_omega(const std::string& text) {
  const double v = parse_real(text);
  if (std::isinf(v)) {
    if (v < 0) throw UsageError("omega = -inf is not a valid regime");
    return Omega::infinite();
  }
  if (v < 0.0) throw UsageError("omega must be non-negative: '" + text + "'");
  return Omega::finite(v);
}

Axis parse_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 && parts.size() != 4) throw UsageError("axis must be LO:HI:COUNT[:log]: '" + text + "'");
  Axis a{parse_real(parts[0]), parse_real(parts[1]), parse_int(parts[2], "axis count")};
  if (parts.size() == 4) {
    if (lower(parts[3]) != "log") throw UsageError("axis spacing must be 'log': '" + text + "'");
    a.logarithmic = true;
  }
  if (a.count < 1) throw UsageError("axis count must be positive: '" + text + "'");
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || a.hi < a.lo || (a.count > 1 && a.hi == a.lo)) {
    throw UsageError("axis needs finite LO < HI: '" + text + "'");
  }
  if (a.logarithmic && !(a.lo > 0.0)) throw UsageError("log axis needs LO > 0: '" + text + "'");
  return a;
}

std::vector<double> Axis::values() const {
  if (count == 1) return {lo};
  if (!logarithmic) return linear_axis(lo, hi, count);
  std::vector<double> v;
  const double r = std::log(hi / lo);
  for (int i = 0; i < count; ++i) v.push_back(lo * std::exp(r * i / (count - 1)));
  v.back() = hi;
  return v;
}

std::string Axis::to_string() const {
  return format_real(lo) + ":" + format_real(hi) + ":" + std::to_string(count) + (logarithmic ? ":log" : "");
}

ChainSpec RunConfig::chain() const {
  return ChainSpec{.n_sites = n_sites, .coupling = coupling, .omega = omega, .transfer_time = transfer_time};
}

double RunConfig::temperature() const {
  if (beta) return *beta;
  if (beta_prime) return *beta_prime;
  return 0.0;
}

bool RunConfig::wants(Scheme s) const {
  if (scheme == SchemeSelection::both) return true;
  return (s == Scheme::a) == (scheme == SchemeSelection::a);
}

TransferOptions RunConfig::transfer_options(Engine fallback) const {
  TransferOptions o;
  o.engine = engine.value_or(fallback);
  o.frame = frame;
  return o;
}

void RunConfig::validate() const {
  try {
    chain().validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (beta && beta_prime) throw UsageError("set exactly one of beta and beta_prime");
  if (omega.is_infinite() && beta) throw UsageError("infinite omega takes beta_prime, not beta");
  if (!omega.is_infinite() && beta_prime) throw UsageError("finite omega takes beta, not beta_prime");
  if (!(temperature() >= 0.0)) throw UsageError("inverse temperature must be non-negative");
  if (rates.preset == RatePreset::explicit_list && static_cast<int>(rates.weights.size()) != n_sites) {
    throw UsageError("explicit rate list needs exactly N = " + std::to_string(n_sites) + " entries");
  }
  for (double w : rates.weights) {
    if (!(w >= 0.0)) throw UsageError("rates must be non-negative");
  }
  if (rates.preset == RatePreset::quadratic && omega.is_infinite()) {
    throw UsageError("quadratic rates need a finite omega");
  }
  if (!(gamma >= 0.0) || std::isinf(gamma)) throw UsageError("gamma must be finite and non-negative");
  if (jobs < 1) throw UsageError("jobs must be at least 1");
  if (frame == Frame::lab && omega.is_infinite()) throw UsageError("lab frame needs a finite omega");
  if (!(target_fidelity > 0.5 && target_fidelity < 1.0)) throw UsageError("target fidelity must lie in (1/2, 1)");
  if (!std::isfinite(perturb_hamiltonian)) throw UsageError("perturb_hamiltonian must be finite");
}

std::vector<std::string> RunConfig::echo() const {
  std::vector<std::string> lines{
      "n=" + std::to_string(n_sites),
      "j=" + format_real(coupling),
      "tau=" + format_real(transfer_time),
      "omega=" + (omega.is_infinite() ? std::string("inf") : format_real(omega.value())),
      omega.is_infinite() ? "beta_prime=" + format_real(temperature()) : "beta=" + format_real(temperature()),
      "rates=" + rates_to_string(rates),
      "gamma=" + format_real(gamma),
      std::string("scheme=") +
          (scheme == SchemeSelection::a ? "a" : scheme == SchemeSelection::c ? "c" : "both"),
      "beta_axis=" + beta_axis.to_string(),
      "gamma_tau_axis=" + gamma_tau_axis.to_string(),
      "times=" + times.to_string(),
      "fit_window=" + fit_window.to_string(),
      "target=" + format_real(target_fidelity),
      std::string("engine=") + (!engine ? "auto" : *engine == Engine::rk4 ? "rk4" : "exact"),
      std::string("frame=") + (frame == Frame::lab ? "lab" : "interaction"),
      "seed=" + std::to_string(seed),
  };
  if (perturb_hamiltonian != 0.0) lines.push_back("perturb_hamiltonian=" + format_real(perturb_hamiltonian));
  return lines;
}

Settings read_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    s.emplace_back(normalize_key(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return s;
}

RunConfig resolve(const RunConfig& base, const std::vector<Settings>& layers) {
  RunConfig cfg = base;
  for (const auto& layer : layers) {
    bool beta_seen = false, beta_prime_seen = false;
    for (const auto& [raw_key, value] : layer) {
      const std::string key = normalize_key(raw_key);
      beta_seen |= key == "beta";
      beta_prime_seen |= key == "beta_prime";
      if (beta_seen && beta_prime_seen) throw UsageError("set exactly one of beta and beta_prime");
      apply(cfg, key, value);
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace qwire::cli
