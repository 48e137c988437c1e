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

#include "qwire/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace qwire {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_increasing(const std::vector<double>& axis, const char* name) {
  if (axis.empty()) throw std::invalid_argument(std::string(name) + " axis is empty");
  for (std::size_t i = 1; i < axis.size(); ++i) {
    if (!(axis[i] > axis[i - 1])) throw std::invalid_argument(std::string(name) + " axis must be strictly increasing");
  }
}

}  // namespace

RealVector logical_mixture_populations(const ModeBasis& basis, Scheme scheme) {
  const FermionAlgebra modes(basis, Representation::mode);
  const ComplexMatrix rho = 0.5 * encode_operator(modes, scheme, Pauli::I);
  RealVector q = rho.diagonal().real();
  // Round-off can leave tiny negatives on empty configurations.
  return q.cwiseMax(0.0) / q.cwiseMax(0.0).sum();
}

RealVector RateSpec::gammas(double scale, const ChainSpec& spec, const ModeBasis& basis) const {
  return preset_gammas(preset, scale, spec, basis, weights);
}

void SweepGrid::validate() const {
  require_increasing(beta_axis, "beta");
  require_increasing(gamma_tau_axis, "gamma_tau");
  if (schemes.empty()) throw std::invalid_argument("sweep needs at least one scheme");
  for (double b : beta_axis) {
    if (std::isnan(b) || b < 0.0) throw std::invalid_argument("beta values must be >= 0");
  }
  for (double g : gamma_tau_axis) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw std::invalid_argument("gamma_tau values must be finite and >= 0");
  }
}

std::vector<double> linear_axis(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("axis needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> axis(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) axis[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return axis;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

SweepPoint evaluate_point(const ChainSpec& spec, const ModeBasis& basis, const RateSpec& rates, double beta,
                          double gamma_tau, const TransferOptions& options) {
  const double scale = gamma_tau / spec.transfer_time;
  const RateModel model = RateModel::detailed_balance(spec, basis, rates.gammas(scale, spec, basis), beta);
  const TransferSetup setup(spec, basis, model, options);

  SweepPoint pt;
  pt.beta = beta;
  pt.gamma_tau = gamma_tau;
  const ChannelResult a = extract_channel(setup, Scheme::a);
  pt.f_a = average_fidelity(a.map);
  pt.warnings = a.warnings;
  if (spec.n_sites >= 3) {
    const ChannelResult c = extract_channel(setup, Scheme::c);
    pt.f_c = average_fidelity(c.map);
    pt.warnings.insert(pt.warnings.end(), c.warnings.begin(), c.warnings.end());
    const DecodeHead& head = setup.head(Scheme::c);
    pt.p_ap = antiparallel_probability(0.5 * c.evolved_identity, head.primary(), head.secondary());
    pt.p1 = classical_populations_evolve(logical_mixture_populations(basis, Scheme::c), spec.transfer_time, model).p1;
  } else {
    pt.f_c = kNaN;
    pt.p_ap = kNaN;
    pt.p1 = kNaN;
  }
  pt.diff = pt.f_c - pt.f_a;
  return pt;
}

double perturbative_fidelity(Scheme scheme, const ChainSpec& spec, const ModeBasis& basis,
                             const RateModel& rates) {
  const FermionAlgebra algebra(basis, Representation::mode);
  const DecodeHead head(algebra, spec, scheme, Frame::interaction, true);
  const ModeLiouvillian l(rates, std::nullopt);
  double sum = 0.0;
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    const ComplexMatrix e = encode_operator(algebra, scheme, p);
    sum += head.overlap(e, p) + spec.transfer_time * head.overlap(l.apply(e), p);
  }
  return 0.5 + sum / 6.0;
}

double high_temperature_closed_form(Scheme scheme, const ModeBasis& basis, const RealVector& gammas, double tau) {
  if (gammas.size() != basis.size()) throw std::invalid_argument("need one rate per mode");
  const RealVector w1 = basis.modes.col(0).array().square();
  if (scheme == Scheme::a) {
    // F_z = -sum 2 g_k b_k1^2, F_xy = sum g_k (b_k1^2 - 2); F = 1 + tau/12 (2 F_z + 4 F_xy).
    const double fz = -2.0 * gammas.dot(w1);
    const double fxy = gammas.dot((w1.array() - 2.0).matrix());
    return 1.0 + tau / 12.0 * (2.0 * fz + 4.0 * fxy);
  }
  if (basis.size() < 3) throw std::invalid_argument("scheme (c) needs at least 3 sites");
  const RealVector w2 = basis.modes.col(1).array().square();
  // F_x = F_y = F_z = -sum g_k (b_k1^2 + b_k2^2); F = 1 + tau/12 (2 F_x + 2 F_y + 2 F_z).
  const double f = -gammas.dot(w1 + w2);
  return 1.0 + tau / 12.0 * 6.0 * f;
}

std::vector<ThresholdPoint> threshold_curve(Scheme scheme, const ChainSpec& spec, const ModeBasis& basis,
                                            const RateSpec& rates, const std::vector<double>& beta_axis,
                                            const ThresholdOptions& thresholds, const TransferOptions& options) {
  require_increasing(beta_axis, "beta");
  std::vector<ThresholdPoint> out(beta_axis.size());
  parallel_for(beta_axis.size(), thresholds.jobs, [&](std::size_t i) {
    const double beta = beta_axis[i];
    std::vector<std::pair<double, double>> evaluated{{0.0, 1.0}};
    auto fidelity = [&](double gamma_tau) {
      const RateModel model =
          RateModel::detailed_balance(spec, basis, rates.gammas(gamma_tau / spec.transfer_time, spec, basis), beta);
      const TransferSetup setup(spec, basis, model, options);
      const double f = average_fidelity(extract_channel(setup, scheme).map);
      evaluated.emplace_back(gamma_tau, f);
      return f;
    };

    ThresholdPoint pt;
    pt.beta = beta;
    double lo = 0.0;
    double hi = thresholds.initial_upper;
    while (fidelity(hi) > thresholds.target) {
      lo = hi;
      hi *= 2.0;
      if (hi > thresholds.max_upper) {
        pt.bracketed = false;
        break;
      }
    }
    if (pt.bracketed) {
      while (hi - lo > thresholds.relative_tolerance * hi) {
        const double mid = 0.5 * (lo + hi);
        (fidelity(mid) > thresholds.target ? lo : hi) = mid;
      }
      pt.gamma_tau = 0.5 * (lo + hi);
    } else {
      pt.gamma_tau = kNaN;
    }
    std::sort(evaluated.begin(), evaluated.end());
    for (std::size_t k = 1; k < evaluated.size(); ++k) {
      if (evaluated[k].second > evaluated[k - 1].second + 1e-9) pt.monotone = false;
    }
    out[i] = pt;
  });
  return out;
}

std::vector<SweepPoint> dominance_region(const SweepGrid& grid, const ChainSpec& spec, const ModeBasis& basis,
                                         int jobs, const TransferOptions& options) {
  grid.validate();
  const std::size_t nb = grid.beta_axis.size();
  const std::size_t ng = grid.gamma_tau_axis.size();
  std::vector<SweepPoint> out(nb * ng);
  parallel_for(nb * ng, jobs, [&](std::size_t idx) {
    out[idx] = evaluate_point(spec, basis, grid.rates, grid.beta_axis[idx / ng], grid.gamma_tau_axis[idx % ng], options);
  });
  return out;
}

FitResult fit_collision_exponents(const ChainSpec& spec, double gamma, double beta_prime,
                                  const std::vector<double>& gamma_t_samples, const TransferOptions& options) {
  if (!spec.omega.is_infinite()) throw std::invalid_argument("collision fit is defined in the infinite-omega regime");
  if (spec.n_sites < 3) throw std::invalid_argument("collision fit needs scheme (c), N >= 3");
  if (!(gamma > 0.0)) throw std::invalid_argument("collision fit needs a positive uniform rate");
  if (gamma_t_samples.size() < 3) throw std::invalid_argument("collision fit needs at least 3 samples");
  const auto [mn, mx] = std::minmax_element(gamma_t_samples.begin(), gamma_t_samples.end());
  if (!(*mn > 0.0) || *mx < 10.0 * *mn) {
    throw std::invalid_argument("collision fit samples must be positive and span at least one decade of Gamma*t");
  }

  const ModeBasis basis = chain_modes(spec);
  const RateModel model =
      RateModel::detailed_balance(spec, basis, RealVector::Constant(spec.n_sites, gamma), beta_prime);
  const TransferSetup setup(spec, basis, model, options);
  const DecodeHead& head = setup.head(Scheme::c);
  const RealVector q0 = logical_mixture_populations(basis, Scheme::c);
  const double weight = std::exp(-beta_prime);

  FitResult fit;
  double sxx = 0.0, sxy1 = 0.0, sxy2 = 0.0;
  std::vector<std::array<double, 3>> points;
  for (double s : gamma_t_samples) {
    const double t = s / gamma;
    const ChannelResult ch = extract_channel(setup, Scheme::c, t);
    FitSample sample;
    sample.gamma_t = s;
    sample.fidelity = average_fidelity(ch.map);
    sample.p_ap = antiparallel_probability(0.5 * ch.evolved_identity, head.primary(), head.secondary());
    sample.p1 = classical_populations_evolve(q0, t, model).p1;
    const double visibility = 2.0 * sample.fidelity - 1.0;
    sample.used = sample.p_ap > 1e-3 && visibility > 0.0 && sample.p1 > 0.0;
    if (sample.used) {
      const double x = weight * s * s;
      const double y1 = std::log(visibility / sample.p_ap);
      const double y2 = std::log(sample.p_ap / sample.p1);
      sxx += x * x;
      sxy1 += x * y1;
      sxy2 += x * y2;
      points.push_back({x, y1, y2});
    }
    fit.samples.push_back(sample);
  }
  if (points.size() < 3 || sxx == 0.0) throw std::invalid_argument("collision fit: fewer than 3 usable samples");
  fit.a1 = -sxy1 / sxx;
  fit.a2 = -sxy2 / sxx;
  double r1 = 0.0, r2 = 0.0;
  for (const auto& [x, y1, y2] : points) {
    r1 += std::pow(y1 + fit.a1 * x, 2);
    r2 += std::pow(y2 + fit.a2 * x, 2);
  }
  fit.residual_a1 = std::sqrt(r1 / points.size());
  fit.residual_a2 = std::sqrt(r2 / points.size());
  return fit;
}

BoundReport p1_upper_bound_check(const ChainSpec& spec, const ModeBasis& basis, const RateModel& rates,
                                 const std::vector<double>& times, const TransferOptions& options) {
  TransferOptions opts = options;
  opts.frame = Frame::interaction;
  const TransferSetup setup(spec, basis, rates, opts);
  const RealVector q0 = logical_mixture_populations(basis, Scheme::c);
  BoundReport report;
  report.max_violation = -kInfinity;
  for (double t : times) {
    BoundRow row;
    row.t = t;
    row.fidelity = average_fidelity(extract_channel(setup, Scheme::c, t).map);
    row.p1 = classical_populations_evolve(q0, t, rates).p1;
    row.bound = 0.5 * (1.0 + row.p1);
    report.max_violation = std::max(report.max_violation, row.fidelity - row.bound);
    report.rows.push_back(row);
  }
  return report;
}

PureDecayReport pure_decay_report(const ChainSpec& spec, const ModeBasis& basis, const RealVector& gammas,
                                  const std::vector<double>& times, const TransferOptions& options) {
  if (!spec.omega.is_infinite() && spec.omega.value() + basis.energies.minCoeff() <= 0.0) {
    throw std::invalid_argument("pure decay needs omega above the single-particle band");
  }
  const RateModel model = RateModel::detailed_balance(spec, basis, gammas, kInfinity);
  TransferOptions opts = options;
  opts.frame = Frame::interaction;
  const TransferSetup setup(spec, basis, model, opts);

  PureDecayReport report;
  const bool has_c = spec.n_sites >= 3;
  for (double t : times) {
    PureDecayRow row;
    row.t = t;
    row.f_a = average_fidelity(extract_channel(setup, Scheme::a, t).map);
    double printed_a = 1.0, printed_c = 1.0;
    for (int k = 0; k < gammas.size(); ++k) {
      printed_a += std::exp(-gammas(k) * t / 2.0);
      printed_c += std::exp(-gammas(k) * t);
    }
    row.printed_f_a = 0.5 * printed_a;
    row.printed_f_c = 0.5 * printed_c;
    if (has_c) {
      const ChannelResult c = extract_channel(setup, Scheme::c, t);
      row.f_c = average_fidelity(c.map);
      ComplexMatrix vac = ComplexMatrix::Zero(setup.algebra().dim(), setup.algebra().dim());
      vac(0, 0) = 1.0;
      row.vacuum_distance = (0.5 * c.evolved_identity - vac).cwiseAbs().maxCoeff();
    } else {
      row.f_c = kNaN;
    }
    if (!report.rows.empty()) {
      const PureDecayRow& prev = report.rows.back();
      if (row.f_a > prev.f_a + 1e-9) report.monotone_a = false;
      if (has_c && row.f_c > prev.f_c + 1e-9) report.monotone_c = false;
    }
    report.rows.push_back(row);
  }
  report.printed_first_order_a = 1.0 - 0.25 * gammas.sum();
  report.numeric_first_order_a = perturbative_fidelity(Scheme::a, spec, basis, model);
  if (has_c) {
    report.printed_first_order_c = 1.0 - 0.5 * gammas.dot(RealVector(basis.modes.row(0).array().square()));
    report.numeric_first_order_c = perturbative_fidelity(Scheme::c, spec, basis, model);
  } else {
    report.printed_first_order_c = kNaN;
    report.numeric_first_order_c = kNaN;
  }
  return report;
}

GroundStateReport ground_state_report(const ChainSpec& spec, const ModeBasis& basis) {
  GroundStateReport r;
  r.crossing_omega = -basis.energies.minCoeff();
  if (spec.omega.is_infinite()) return r;
  for (int k = 0; k < basis.size(); ++k) {
    const double e = basis.energies(k) + spec.omega.value();
    if (e < 0.0) {
      r.ground_energy += e;
      r.vacuum_is_ground = false;
    }
  }
  return r;
}

}  // namespace qwire
