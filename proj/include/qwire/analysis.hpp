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

#include <functional>
#include <vector>

#include "qwire/transfer.hpp"

namespace qwire {

/// How the rates of one sweep regime are produced from a Gamma*tau value.
struct RateSpec {
  RatePreset preset = RatePreset::uniform;
  std::vector<double> weights;  // explicit_list only

  /// gamma_k at rate scale `scale` (= Gamma).
  RealVector gammas(double scale, const ChainSpec& spec, const ModeBasis& basis) const;
};

struct SweepGrid {
  std::vector<double> beta_axis;       // beta, or beta' when omega is infinite
  std::vector<double> gamma_tau_axis;  // Gamma * tau
  std::vector<Scheme> schemes{Scheme::a, Scheme::c};
  RateSpec rates;

  /// Axes strictly increasing and non-empty.
  void validate() const;
};

/// Evenly spaced axis from lo to hi inclusive.
std::vector<double> linear_axis(double lo, double hi, int count);

struct SweepPoint {
  double beta = 0.0;
  double gamma_tau = 0.0;
  double f_a = 0.0;
  double f_c = 0.0;
  double diff = 0.0;  // f_c - f_a
  /// Scheme (c) with a maximally mixed logical input: probability of exactly one
  /// quasi-fermion and of an anti-parallel read-out pair.
  double p1 = 0.0;
  double p_ap = 0.0;
  std::vector<std::string> warnings;
};

/// Runs fn(i) for i in [0, count) on `jobs` worker threads. Results are stored by
/// index, so the outcome does not depend on the number of workers.
/// Mode-occupation distribution of the encoded logical identity / 2.
RealVector logical_mixture_populations(const ModeBasis& basis, Scheme scheme);

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Both schemes plus p1 / p_ap at one (beta, Gamma*tau) point.
SweepPoint evaluate_point(const ChainSpec& spec, const ModeBasis& basis, const RateSpec& rates, double beta,
                          double gamma_tau, const TransferOptions& options = {});

/// First-order fidelity 1 + tau/12 sum_P Tr[D(P) L(E(P))] at the transfer time.
double perturbative_fidelity(Scheme scheme, const ChainSpec& spec, const ModeBasis& basis,
                             const RateModel& rates);

/// Closed-form infinite-temperature first-order fidelities built from the
/// per-mode weights b_k1^2, b_k2^2. Valid only when every pump factor is 1.
double high_temperature_closed_form(Scheme scheme, const ModeBasis& basis, const RealVector& gammas, double tau);

struct ThresholdPoint {
  double beta = 0.0;
  double gamma_tau = 0.0;  // NaN when the target is never crossed in range
  bool bracketed = true;
  bool monotone = true;
};

struct ThresholdOptions {
  double target = 2.0 / 3.0;
  double relative_tolerance = 1e-3;
  double initial_upper = 2.0;
  double max_upper = 256.0;
  int jobs = 1;
};

/// Gamma*tau at which the average fidelity of `scheme` drops to the target, per beta.
std::vector<ThresholdPoint> threshold_curve(Scheme scheme, const ChainSpec& spec, const ModeBasis& basis,
                                            const RateSpec& rates, const std::vector<double>& beta_axis,
                                            const ThresholdOptions& thresholds = {},
                                            const TransferOptions& options = {});

/// F_c - F_a over the grid, beta-major order.
std::vector<SweepPoint> dominance_region(const SweepGrid& grid, const ChainSpec& spec, const ModeBasis& basis,
                                         int jobs = 1, const TransferOptions& options = {});

struct FitSample {
  double gamma_t = 0.0;
  double fidelity = 0.0;
  double p_ap = 0.0;
  double p1 = 0.0;
  bool used = false;
};

struct FitResult {
  double a1 = 0.0;
  double a2 = 0.0;
  /// Root-mean-square residuals of the two log-linear fits.
  double residual_a1 = 0.0;
  double residual_a2 = 0.0;
  std::vector<FitSample> samples;
};

/// Fits F_c = 1/2 (1 + p_ap exp(-a1 e^{-beta'} (Gamma t)^2)) and
/// p_ap = p1 exp(-a2 e^{-beta'} (Gamma t)^2) by least squares through the origin.
/// Infinite-omega regime, uniform rates. Samples with p_ap <= 1e-3 are skipped.
FitResult fit_collision_exponents(const ChainSpec& spec, double gamma, double beta_prime,
                                  const std::vector<double>& gamma_t_samples, const TransferOptions& options = {});

struct BoundRow {
  double t = 0.0;
  double fidelity = 0.0;
  double p1 = 0.0;
  double bound = 0.0;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  double max_violation = 0.0;  // max(F - (1 + p1)/2), <= 0 when the bound holds
  bool holds(double tolerance = 1e-6) const { return max_violation <= tolerance; }
};

/// Checks F_c(t) <= (1 + p1(t))/2 along `times` with the free evolution off.
BoundReport p1_upper_bound_check(const ChainSpec& spec, const ModeBasis& basis, const RateModel& rates,
                                 const std::vector<double>& times, const TransferOptions& options = {});

struct PureDecayRow {
  double t = 0.0;
  double f_a = 0.0;
  double f_c = 0.0;
  /// Zero-temperature closed forms, evaluated term by term as written.
  double printed_f_a = 0.0;
  double printed_f_c = 0.0;
  /// Distance of the evolved (c) identity input from the vacuum, max entry.
  double vacuum_distance = 0.0;
};

struct PureDecayReport {
  std::vector<PureDecayRow> rows;
  bool monotone_a = true;
  bool monotone_c = true;
  /// Printed first-order forms 1 - sum(gamma)/4 and 1 - sum(gamma b_k1^2)/2 at tau
  /// against the numerical first-order values.
  double printed_first_order_a = 0.0;
  double printed_first_order_c = 0.0;
  double numeric_first_order_a = 0.0;
  double numeric_first_order_c = 0.0;
};

/// Zero temperature with omega above the band: evaluates both schemes over
/// `times` and the printed low-temperature formulas side by side.
PureDecayReport pure_decay_report(const ChainSpec& spec, const ModeBasis& basis, const RealVector& gammas,
                                  const std::vector<double>& times, const TransferOptions& options = {});

struct GroundStateReport {
  double ground_energy = 0.0;
  bool vacuum_is_ground = true;
  /// Lowest omega at which the vacuum is (weakly) the ground state: -E_1.
  double crossing_omega = 0.0;
};

GroundStateReport ground_state_report(const ChainSpec& spec, const ModeBasis& basis);

}  // namespace qwire
