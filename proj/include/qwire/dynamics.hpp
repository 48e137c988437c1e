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

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwire/chain_model.hpp"
#include "qwire/fock_space.hpp"

namespace qwire {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RatePreset { uniform, quadratic, explicit_list };

/// Per-mode decay rates gamma_k and pump factors p_k; the pump rate of mode k is
/// gamma_k * p_k. In the finite-omega regime p_k = exp(-beta (omega + E_k)); in
/// the infinite-omega regime `beta` holds beta' = omega*beta and p_k = exp(-beta').
struct RateModel {
  RealVector gammas;
  RealVector pump_factors;
  double beta = kInfinity;
  bool infinite_omega = false;

  int size() const { return static_cast<int>(gammas.size()); }
  RealVector pump_rates() const { return gammas.cwiseProduct(pump_factors); }

  /// Detailed-balance rates for the regime selected by spec.omega. `beta` is
  /// beta' when omega is infinite. Throws std::invalid_argument on negative
  /// rates or on an infinitely pumped mode (beta = inf with omega + E_k < 0).
  static RateModel detailed_balance(const ChainSpec& spec, const ModeBasis& basis,
                                    const RealVector& gammas, double beta);
};

/// gamma_k for a preset. `uniform`: gamma_k = scale. `quadratic`:
/// gamma_k = scale (E_k + omega)^2, finite omega only. `explicit_list`:
/// gamma_k = scale * w_k for the given weights (length N).
RealVector preset_gammas(RatePreset preset, double scale, const ChainSpec& spec, const ModeBasis& basis,
                         const std::vector<double>& explicit_values = {});

/// Modes with omega + E_k < 0, for which absorption and emission swap roles.
std::vector<int> inverted_modes(const ChainSpec& spec, const ModeBasis& basis);

/// Right-hand side of the master equation, dX/dt = L(X).
class Generator {
 public:
  virtual ~Generator() = default;
  virtual ComplexMatrix apply(const ComplexMatrix& x) const = 0;
  /// Upper bound on the magnitude of the eigenvalues of L; sets the initial step.
  virtual double stiffness_bound() const = 0;
  virtual std::int64_t dim() const = 0;
};

/// Liouvillian built from explicit jump operators. Works in any representation.
/// -i[H,X] + sum_k g_k/2 (2 c X c^+ - c^+c X - X c^+c) + g_k p_k/2 (2 c^+ X c - c c^+ X - X c c^+)
class SparseLiouvillian final : public Generator {
 public:
  /// `hamiltonian` may be null: the commutator term is then switched off.
  SparseLiouvillian(const RateModel& rates, std::span<const SpinOperator> modes,
                    const SpinOperator* hamiltonian);

  ComplexMatrix apply(const ComplexMatrix& x) const override;
  double stiffness_bound() const override { return bound_; }
  std::int64_t dim() const override { return dim_; }

 private:
  struct Channel {
    double decay;
    double pump;
    SparseMatrix c, cdag, occupied, empty;
  };
  std::vector<Channel> channels_;
  std::optional<SparseMatrix> h_;
  std::int64_t dim_;
  double bound_ = 0.0;
};

/// The same Liouvillian evaluated entrywise in the mode representation, where
/// each c_k is a signed bit flip and the Hamiltonian is diagonal. O(N 4^N).
class ModeLiouvillian final : public Generator {
 public:
  /// `mode_energies` are E_k + omega; pass std::nullopt to switch H off.
  ModeLiouvillian(const RateModel& rates, std::optional<RealVector> mode_energies);

  ComplexMatrix apply(const ComplexMatrix& x) const override;
  double stiffness_bound() const override { return bound_; }
  std::int64_t dim() const override { return std::int64_t{1} << n_; }

  /// Exact propagation exp(L t) X. The per-mode dissipators commute (the
  /// string signs of mode k are unchanged by jumps of any other mode), so the
  /// flow factorizes into independent two-level relaxations.
  ComplexMatrix propagate_exact(const ComplexMatrix& x, double t) const;

 private:
  int n_;
  RateModel rates_;
  std::optional<RealVector> energy_diag_;
  double bound_ = 0.0;
};

/// L(X) with explicit operators (spec-level entry point).
ComplexMatrix liouvillian_apply(const ComplexMatrix& x, const RateModel& rates,
                                std::span<const SpinOperator> modes, bool include_hamiltonian,
                                const SpinOperator& hamiltonian);

struct StepControl {
  /// Accept when two successive step halvings differ by at most this (max entry).
  double tolerance = 1e-10;
  /// Initial step: dt * stiffness_bound <= this.
  double initial_step_scale = 0.5;
  std::int64_t max_steps = 1'000'000;
  double trace_tolerance = 1e-8;
  double hermiticity_tolerance = 1e-9;
  double positivity_tolerance = 1e-8;
  /// Positivity needs an eigen-decomposition; skip it for large dimensions.
  bool check_positivity = true;
};

struct EvolveResult {
  ComplexMatrix state;
  std::int64_t steps = 0;
  double error_estimate = 0.0;
  /// Filled only for Hermitian inputs.
  double trace_drift = 0.0;
  double hermiticity_residual = 0.0;
  double min_eigenvalue = 0.0;
  std::vector<std::string> warnings;
};

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-step classical RK4 from 0 to t_final, halving the step until the
/// result stops changing within control.tolerance. Throws IntegrationError when
/// the step count would exceed control.max_steps.
EvolveResult evolve(const ComplexMatrix& x0, double t_final, const Generator& generator,
                    const StepControl& control = {});

/// Convenience overload matching liouvillian_apply's arguments.
EvolveResult evolve(const ComplexMatrix& x0, double t_final, const RateModel& rates,
                    std::span<const SpinOperator> modes, const SpinOperator* hamiltonian,
                    const StepControl& control = {});

/// exp(-beta H) / Z for a Hermitian H.
ComplexMatrix gibbs_state(const SpinOperator& hamiltonian, double beta);

struct PopulationResult {
  /// Probability of each mode-occupation bit string.
  RealVector distribution;
  RealVector mode_occupations;
  /// Probability of exactly one quasi-fermion.
  double p1 = 0.0;
};

/// Classical birth-death evolution of mode-occupation populations (down-rate
/// gamma_k, up-rate gamma_k p_k). Solved exactly per mode.
PopulationResult classical_populations_evolve(const RealVector& initial_distribution, double t,
                                              const RateModel& rates);

/// Same, starting from a product state with the given per-mode occupations.
PopulationResult classical_populations_evolve_occupations(const RealVector& occupations, double t,
                                                          const RateModel& rates);

/// Tr[P rho], P projecting onto anti-parallel occupations of sites (u, v).
double antiparallel_probability(const ComplexMatrix& rho, const FermionAlgebra& algebra, int u, int v);

/// Tr[P rho] for the pair of (possibly transported) annihilators d1, d2.
double antiparallel_probability(const ComplexMatrix& rho, const SpinOperator& d1, const SpinOperator& d2);

/// Tr[A B] for dense A, B.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
cplx trace_product(const SpinOperator& a, const ComplexMatrix& b);

}  // namespace qwire
