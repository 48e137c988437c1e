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

#include "qwire/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace qwire {
namespace {

double jw_parity_sign(std::uint64_t n, std::uint64_t m, std::uint64_t lower) {
  return (std::popcount((n & lower)) + std::popcount((m & lower))) % 2 == 0 ? 1.0 : -1.0;
}

void check_rates(const RateModel& rates) {
  if (rates.gammas.size() != rates.pump_factors.size()) {
    throw std::invalid_argument("rate model has mismatched gamma and pump vectors");
  }
  for (Eigen::Index k = 0; k < rates.gammas.size(); ++k) {
    if (!(rates.gammas(k) >= 0.0) || !std::isfinite(rates.gammas(k))) {
      throw std::invalid_argument("decay rates must be finite and non-negative");
    }
    if (!(rates.pump_factors(k) >= 0.0) || !std::isfinite(rates.pump_factors(k))) {
      throw std::invalid_argument("pump factors must be finite and non-negative");
    }
  }
}

}  // namespace

RateModel RateModel::detailed_balance(const ChainSpec& spec, const ModeBasis& basis,
                                      const RealVector& gammas, double beta) {
  const int n = basis.size();
  if (gammas.size() != n) throw std::invalid_argument("need one decay rate per mode");
  if (std::isnan(beta) || beta < 0.0) throw std::invalid_argument("inverse temperature must be >= 0");
  RateModel r;
  r.gammas = gammas;
  r.pump_factors.resize(n);
  r.beta = beta;
  r.infinite_omega = spec.omega.is_infinite();
  for (int k = 0; k < n; ++k) {
    if (r.infinite_omega) {
      r.pump_factors(k) = std::isinf(beta) ? 0.0 : std::exp(-beta);
      continue;
    }
    const double excitation = spec.omega.value() + basis.energies(k);
    if (std::isinf(beta)) {
      if (std::abs(excitation) < 1e-12) {
        r.pump_factors(k) = 1.0;
      } else if (excitation > 0.0) {
        r.pump_factors(k) = 0.0;
      } else if (gammas(k) == 0.0) {
        r.pump_factors(k) = 0.0;
      } else {
        throw std::invalid_argument("zero temperature with omega + E_k < 0 pumps mode " +
                                    std::to_string(k + 1) + " infinitely fast");
      }
    } else {
      r.pump_factors(k) = std::exp(-beta * excitation);
    }
  }
  check_rates(r);
  return r;
}

RealVector preset_gammas(RatePreset preset, double scale, const ChainSpec& spec, const ModeBasis& basis,
                         const std::vector<double>& explicit_values) {
  const int n = basis.size();
  RealVector g(n);
  switch (preset) {
    case RatePreset::uniform:
      if (!(scale >= 0.0)) throw std::invalid_argument("rate scale must be non-negative");
      g.setConstant(scale);
      break;
    case RatePreset::quadratic: {
      if (spec.omega.is_infinite()) {
        throw std::invalid_argument("quadratic rates diverge in the infinite-omega limit");
      }
      if (!(scale >= 0.0)) throw std::invalid_argument("rate scale must be non-negative");
      for (int k = 0; k < n; ++k) {
        const double e = basis.energies(k) + spec.omega.value();
        // Exact zero for a zero-energy mode, so it stays dark.
        g(k) = std::abs(e) < 1e-12 ? 0.0 : scale * e * e;
      }
      break;
    }
    case RatePreset::explicit_list:
      if (!(scale >= 0.0)) throw std::invalid_argument("rate scale must be non-negative");
      if (static_cast<int>(explicit_values.size()) != n) {
        throw std::invalid_argument("explicit rate list must have one entry per mode (" +
                                    std::to_string(n) + ")");
      }
      for (int k = 0; k < n; ++k) {
        if (!(explicit_values[static_cast<std::size_t>(k)] >= 0.0)) {
          throw std::invalid_argument("explicit rates must be non-negative");
        }
        g(k) = scale * explicit_values[static_cast<std::size_t>(k)];
      }
      break;
  }
  return g;
}

std::vector<int> inverted_modes(const ChainSpec& spec, const ModeBasis& basis) {
  std::vector<int> out;
  if (spec.omega.is_infinite()) return out;
  for (int k = 0; k < basis.size(); ++k) {
    if (spec.omega.value() + basis.energies(k) < -1e-12) out.push_back(k + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

SparseLiouvillian::SparseLiouvillian(const RateModel& rates, std::span<const SpinOperator> modes,
                                     const SpinOperator* hamiltonian) {
  check_rates(rates);
  if (static_cast<int>(modes.size()) != rates.size()) {
    throw std::invalid_argument("rate model and mode operator list differ in length");
  }
  if (modes.empty()) throw std::invalid_argument("need at least one mode operator");
  dim_ = modes.front().matrix.rows();
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const SparseMatrix& c = modes[k].matrix;
    if (c.rows() != dim_ || c.cols() != dim_) throw std::invalid_argument("mode operator dimension mismatch");
    const double g = rates.gammas(static_cast<Eigen::Index>(k));
    const double gp = g * rates.pump_factors(static_cast<Eigen::Index>(k));
    if (g == 0.0 && gp == 0.0) continue;
    SparseMatrix cdag = c.adjoint();
    SparseMatrix occ = cdag * c;
    SparseMatrix emp = c * cdag;
    channels_.push_back({g, gp, c, cdag, occ, emp});
    bound_ += g + gp;
  }
  if (hamiltonian != nullptr) {
    if (hamiltonian->matrix.rows() != dim_) throw std::invalid_argument("Hamiltonian dimension mismatch");
    h_ = hamiltonian->matrix;
    // |eps_n - eps_m| <= 2 ||H||, bounded by twice the max absolute row sum.
    double row_max = 0.0;
    RealVector rows = RealVector::Zero(dim_);
    for (int k = 0; k < h_->outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(*h_, k); it; ++it) rows(it.row()) += std::abs(it.value());
    }
    if (dim_ > 0) row_max = rows.maxCoeff();
    bound_ += 2.0 * row_max;
  }
}

ComplexMatrix SparseLiouvillian::apply(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw std::invalid_argument("operator dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  if (h_) {
    out.noalias() += cplx(0.0, -1.0) * (*h_ * x);
    out.noalias() += cplx(0.0, 1.0) * (x * *h_);
  }
  for (const Channel& ch : channels_) {
    if (ch.decay != 0.0) {
      const ComplexMatrix cx = ch.c * x;
      out.noalias() += ch.decay * (cx * ch.cdag);
      out.noalias() -= 0.5 * ch.decay * (ch.occupied * x);
      out.noalias() -= 0.5 * ch.decay * (x * ch.occupied);
    }
    if (ch.pump != 0.0) {
      const ComplexMatrix cdx = ch.cdag * x;
      out.noalias() += ch.pump * (cdx * ch.c);
      out.noalias() -= 0.5 * ch.pump * (ch.empty * x);
      out.noalias() -= 0.5 * ch.pump * (x * ch.empty);
    }
  }
  return out;
}

ModeLiouvillian::ModeLiouvillian(const RateModel& rates, std::optional<RealVector> mode_energies)
    : n_(rates.size()), rates_(rates) {
  check_rates(rates);
  if (n_ < 1 || n_ > 14) throw std::invalid_argument("mode Liouvillian supports 1..14 modes");
  bound_ = (rates.gammas + rates.pump_rates()).sum();
  if (mode_energies) {
    if (mode_energies->size() != n_) throw std::invalid_argument("mode energy vector has wrong length");
    RealVector diag(std::int64_t{1} << n_);
    for (std::int64_t s = 0; s < diag.size(); ++s) {
      double e = 0.0;
      for (int k = 0; k < n_; ++k) {
        if ((s >> k) & 1) e += (*mode_energies)(k);
      }
      diag(s) = e;
    }
    bound_ += diag.maxCoeff() - diag.minCoeff();
    energy_diag_ = std::move(diag);
  }
}

ComplexMatrix ModeLiouvillian::apply(const ComplexMatrix& x) const {
  const std::int64_t dim = this->dim();
  if (x.rows() != dim || x.cols() != dim) throw std::invalid_argument("operator dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  if (energy_diag_) {
    const RealVector& e = *energy_diag_;
    for (std::int64_t m = 0; m < dim; ++m) {
      for (std::int64_t n = 0; n < dim; ++n) out(n, m) = cplx(0.0, -(e(n) - e(m))) * x(n, m);
    }
  }
  for (int k = 0; k < n_; ++k) {
    const double g = rates_.gammas(k);
    const double gp = g * rates_.pump_factors(k);
    if (g == 0.0 && gp == 0.0) continue;
    const std::uint64_t bit = std::uint64_t{1} << k;
    const std::uint64_t lower = bit - 1;
    const double coherence_rate = 0.5 * (g + gp);
    for (std::uint64_t m0 = 0; m0 < static_cast<std::uint64_t>(dim); ++m0) {
      if (m0 & bit) continue;
      const std::uint64_t m1 = m0 | bit;
      for (std::uint64_t n0 = 0; n0 < static_cast<std::uint64_t>(dim); ++n0) {
        if (n0 & bit) continue;
        const std::uint64_t n1 = n0 | bit;
        const double sign = jw_parity_sign(n0, m0, lower);
        const cplx x00 = x(n0, m0), x11 = x(n1, m1);
        out(n0, m0) += -gp * x00 + g * sign * x11;
        out(n1, m1) += -g * x11 + gp * sign * x00;
        out(n0, m1) -= coherence_rate * x(n0, m1);
        out(n1, m0) -= coherence_rate * x(n1, m0);
      }
    }
  }
  return out;
}

ComplexMatrix ModeLiouvillian::propagate_exact(const ComplexMatrix& x, double t) const {
  const std::int64_t dim = this->dim();
  if (x.rows() != dim || x.cols() != dim) throw std::invalid_argument("operator dimension mismatch");
  if (t < 0.0) throw std::invalid_argument("propagation time must be non-negative");
  ComplexMatrix out = x;
  for (int k = 0; k < n_; ++k) {
    const double g = rates_.gammas(k);
    const double p = rates_.pump_factors(k);
    if (g == 0.0) continue;
    const double relax = std::exp(-g * (1.0 + p) * t);
    const double coherence = std::exp(-0.5 * g * (1.0 + p) * t);
    const double empty_fraction = 1.0 / (1.0 + p);
    const std::uint64_t bit = std::uint64_t{1} << k;
    const std::uint64_t lower = bit - 1;
    for (std::uint64_t m0 = 0; m0 < static_cast<std::uint64_t>(dim); ++m0) {
      if (m0 & bit) continue;
      const std::uint64_t m1 = m0 | bit;
      for (std::uint64_t n0 = 0; n0 < static_cast<std::uint64_t>(dim); ++n0) {
        if (n0 & bit) continue;
        const std::uint64_t n1 = n0 | bit;
        const double sign = jw_parity_sign(n0, m0, lower);
        const cplx x00 = out(n0, m0);
        const cplx y = sign * out(n1, m1);
        const cplx total = x00 + y;
        const cplx new00 = total * empty_fraction + (x00 - total * empty_fraction) * relax;
        out(n0, m0) = new00;
        out(n1, m1) = sign * (total - new00);
        out(n0, m1) *= coherence;
        out(n1, m0) *= coherence;
      }
    }
  }
  if (energy_diag_) {
    const RealVector& e = *energy_diag_;
    for (std::int64_t m = 0; m < dim; ++m) {
      for (std::int64_t n = 0; n < dim; ++n) out(n, m) *= std::exp(cplx(0.0, -(e(n) - e(m)) * t));
    }
  }
  return out;
}

ComplexMatrix liouvillian_apply(const ComplexMatrix& x, const RateModel& rates,
                                std::span<const SpinOperator> modes, bool include_hamiltonian,
                                const SpinOperator& hamiltonian) {
  const SparseLiouvillian l(rates, modes, include_hamiltonian ? &hamiltonian : nullptr);
  return l.apply(x);
}

// ---------------------------------------------------------------------------

namespace {

ComplexMatrix rk4(const ComplexMatrix& x0, double t_final, std::int64_t steps, const Generator& gen) {
  const double dt = t_final / static_cast<double>(steps);
  ComplexMatrix x = x0;
  for (std::int64_t s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = gen.apply(x);
    const ComplexMatrix k2 = gen.apply(x + (0.5 * dt) * k1);
    const ComplexMatrix k3 = gen.apply(x + (0.5 * dt) * k2);
    const ComplexMatrix k4 = gen.apply(x + dt * k3);
    x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

}  // namespace

EvolveResult evolve(const ComplexMatrix& x0, double t_final, const Generator& generator,
                    const StepControl& control) {
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw std::invalid_argument("t_final must be >= 0");
  if (x0.rows() != generator.dim() || x0.cols() != generator.dim()) {
    throw std::invalid_argument("initial operator dimension does not match the generator");
  }
  EvolveResult result;
  if (t_final == 0.0) {
    result.state = x0;
  } else {
    const double scale = std::max(control.initial_step_scale, 1e-6);
    std::int64_t steps =
        std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(t_final * generator.stiffness_bound() / scale)));
    if (steps > control.max_steps) {
      throw IntegrationError("step size underflow: stiffness requires " + std::to_string(steps) + " steps");
    }
    ComplexMatrix coarse = rk4(x0, t_final, steps, generator);
    while (true) {
      if (2 * steps > control.max_steps) {
        throw IntegrationError("step size underflow: no convergence within " +
                               std::to_string(control.max_steps) + " steps");
      }
      ComplexMatrix fine = rk4(x0, t_final, 2 * steps, generator);
      const double diff = (fine - coarse).cwiseAbs().maxCoeff();
      steps *= 2;
      if (diff <= control.tolerance || !std::isfinite(diff)) {
        if (!std::isfinite(diff)) throw IntegrationError("integration diverged");
        result.state = std::move(fine);
        result.error_estimate = diff / 15.0;
        break;
      }
      coarse = std::move(fine);
    }
    result.steps = steps;
  }

  const ComplexMatrix& x = result.state;
  const bool hermitian_input = (x0 - x0.adjoint()).cwiseAbs().maxCoeff() < 1e-12;
  if (hermitian_input) {
    result.trace_drift = std::abs(x.trace() - x0.trace());
    result.hermiticity_residual = (x - x.adjoint()).cwiseAbs().maxCoeff();
    if (result.trace_drift > control.trace_tolerance) {
      result.warnings.push_back("trace drift " + std::to_string(result.trace_drift));
    }
    if (result.hermiticity_residual > control.hermiticity_tolerance) {
      result.warnings.push_back("hermiticity residual " + std::to_string(result.hermiticity_residual));
    }
    const bool density_like = std::abs(x0.trace() - cplx(1.0)) < 1e-10;
    if (density_like && control.check_positivity && x.rows() <= 256) {
      const ComplexMatrix herm = 0.5 * (x + x.adjoint());
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm, Eigen::EigenvaluesOnly);
      result.min_eigenvalue = eig.eigenvalues().minCoeff();
      if (result.min_eigenvalue < -control.positivity_tolerance) {
        result.warnings.push_back("positivity violated: min eigenvalue " + std::to_string(result.min_eigenvalue));
      }
    }
  }
  return result;
}

EvolveResult evolve(const ComplexMatrix& x0, double t_final, const RateModel& rates,
                    std::span<const SpinOperator> modes, const SpinOperator* hamiltonian,
                    const StepControl& control) {
  const SparseLiouvillian l(rates, modes, hamiltonian);
  return evolve(x0, t_final, l, control);
}

ComplexMatrix gibbs_state(const SpinOperator& hamiltonian, double beta) {
  const ComplexMatrix h = hamiltonian.dense();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success) throw ConvergenceError("Hamiltonian diagonalization failed");
  const RealVector& e = eig.eigenvalues();
  const double shift = e.minCoeff();
  RealVector w = (-beta * (e.array() - shift)).exp();
  w /= w.sum();
  return eig.eigenvectors() * w.cast<cplx>().asDiagonal() * eig.eigenvectors().adjoint();
}

// ---------------------------------------------------------------------------

PopulationResult classical_populations_evolve(const RealVector& initial_distribution, double t,
                                              const RateModel& rates) {
  check_rates(rates);
  const int n = rates.size();
  const std::int64_t dim = std::int64_t{1} << n;
  if (initial_distribution.size() != dim) throw std::invalid_argument("population vector has wrong length");
  if ((initial_distribution.array() < 0.0).any()) throw std::invalid_argument("populations must be non-negative");
  if (std::abs(initial_distribution.sum() - 1.0) > 1e-9) throw std::invalid_argument("populations must sum to 1");
  if (t < 0.0) throw std::invalid_argument("time must be non-negative");

  RealVector q = initial_distribution;
  for (int k = 0; k < n; ++k) {
    const double g = rates.gammas(k);
    const double p = rates.pump_factors(k);
    if (g == 0.0) continue;
    const double relax = std::exp(-g * (1.0 + p) * t);
    const double full_eq = p / (1.0 + p);
    const double stay_full = full_eq + (1.0 - full_eq) * relax;
    const double fill = full_eq * (1.0 - relax);
    const std::int64_t bit = std::int64_t{1} << k;
    for (std::int64_t s0 = 0; s0 < dim; ++s0) {
      if (s0 & bit) continue;
      const double empty = q(s0), full = q(s0 | bit);
      q(s0 | bit) = full * stay_full + empty * fill;
      q(s0) = full * (1.0 - stay_full) + empty * (1.0 - fill);
    }
  }

  PopulationResult r;
  r.distribution = q;
  r.mode_occupations = RealVector::Zero(n);
  for (std::int64_t s = 0; s < dim; ++s) {
    for (int k = 0; k < n; ++k) {
      if ((s >> k) & 1) r.mode_occupations(k) += q(s);
    }
    if (std::popcount(static_cast<std::uint64_t>(s)) == 1) r.p1 += q(s);
  }
  return r;
}

PopulationResult classical_populations_evolve_occupations(const RealVector& occupations, double t,
                                                          const RateModel& rates) {
  const int n = rates.size();
  if (occupations.size() != n) throw std::invalid_argument("need one occupation per mode");
  if ((occupations.array() < 0.0).any() || (occupations.array() > 1.0).any()) {
    throw std::invalid_argument("occupations must lie in [0, 1]");
  }
  const std::int64_t dim = std::int64_t{1} << n;
  RealVector q(dim);
  for (std::int64_t s = 0; s < dim; ++s) {
    double w = 1.0;
    for (int k = 0; k < n; ++k) w *= ((s >> k) & 1) ? occupations(k) : 1.0 - occupations(k);
    q(s) = w;
  }
  return classical_populations_evolve(q, t, rates);
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw std::invalid_argument("trace product dimension mismatch");
  return a.cwiseProduct(b.transpose()).sum();
}

cplx trace_product(const SpinOperator& a, const ComplexMatrix& b) {
  if (a.matrix.cols() != b.rows() || a.matrix.rows() != b.cols()) {
    throw std::invalid_argument("trace product dimension mismatch");
  }
  cplx sum = 0.0;
  for (int k = 0; k < a.matrix.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(a.matrix, k); it; ++it) sum += it.value() * b(it.col(), it.row());
  }
  return sum;
}

double antiparallel_probability(const ComplexMatrix& rho, const SpinOperator& d1, const SpinOperator& d2) {
  const SpinOperator n1 = d1.adjoint() * d1;
  const SpinOperator n2 = d2.adjoint() * d2;
  const SpinOperator p = n1 + n2 - cplx(2.0) * (n1 * n2);
  return trace_product(p, rho).real();
}

double antiparallel_probability(const ComplexMatrix& rho, const FermionAlgebra& algebra, int u, int v) {
  if (u == v) throw std::invalid_argument("anti-parallel probability needs two distinct sites");
  return antiparallel_probability(rho, algebra.site(u), algebra.site(v));
}

}  // namespace qwire
