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


#include "qwire/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "qwire/cli/csv.hpp"

namespace qwire::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* pauli_name(Pauli p) {
  static const char* names[] = {"I", "X", "Y", "Z"};
  return names[static_cast<int>(p)];
}

std::vector<Scheme> selected_schemes(const RunConfig& cfg) {
  std::vector<Scheme> out;
  for (Scheme s : {Scheme::a, Scheme::c}) {
    if (cfg.wants(s)) out.push_back(s);
  }
  return out;
}

ModeBasis basis_for(const RunConfig& cfg) {
  const ChainSpec spec = cfg.chain();
  if (cfg.perturb_hamiltonian == 0.0) return chain_modes(spec);
  return diagonalize_oqs(build_perturbed_oqs_hamiltonian(spec, cfg.perturb_hamiltonian));
}

double max_abs(const SparseMatrix& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
  }
  return v;
}

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

struct SpectrumResiduals {
  double ladder = 0.0;
  double orthonormality = 0.0;
  double reconstruction = 0.0;
  double mirror = 0.0;
};

SpectrumResiduals spectrum_residuals(const ChainSpec& spec, const ModeBasis& basis) {
  const int n = spec.n_sites;
  SpectrumResiduals r;
  r.ladder = (basis.energies - ladder_spectrum(n, spec.coupling)).cwiseAbs().maxCoeff();
  r.orthonormality = (basis.modes * basis.modes.transpose() - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  const RealMatrix h = build_oqs_hamiltonian(spec);
  r.reconstruction =
      (basis.modes.transpose() * basis.energies.asDiagonal() * basis.modes - h).cwiseAbs().maxCoeff();
  r.mirror = std::abs(std::abs(oqs_propagator(basis, spec.transfer_time)(n - 1, 0)) - 1.0);
  return r;
}

bool spectrum_ok(const SpectrumResiduals& r) {
  return r.ladder <= 1e-9 && r.orthonormality <= 1e-10 && r.reconstruction <= 1e-9 && r.mirror <= 1e-9;
}

/// Opens the configured output or falls back to the data stream.
class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& fallback) : stream_(&fallback) {
    if (!cfg.out.empty()) {
      file_.open(cfg.out, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + cfg.out + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void echo_config(CsvWriter& csv, const std::string& command, const RunConfig& cfg) {
  csv.comment("qwire " + command);
  csv.comments(cfg.echo());
}

RateModel rate_model(const RunConfig& cfg, const ChainSpec& spec, const ModeBasis& basis) {
  return RateModel::detailed_balance(spec, basis, cfg.rates.gammas(cfg.gamma, spec, basis), cfg.temperature());
}

/// RK4 unless the relaxation is too stiff for it (e.g. an inverted mode
/// pumped at low temperature); an explicit engine setting always wins.
Engine single_run_engine(const RunConfig& cfg, const RateModel& model, double t) {
  if (cfg.engine) return *cfg.engine;
  const double stiffness = model.gammas.dot(RealVector(1.0 + model.pump_factors.array()));
  return stiffness * t > 1e4 ? Engine::exact : Engine::rk4;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  bool pass = true;
  std::string detail;
};

using Check = std::function<CheckResult()>;

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

CheckResult bound_check(double value, double limit) {
  return {value <= limit, "max residual " + fmt(value) + " (limit " + fmt(limit) + ")"};
}

RealVector random_rates(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  RealVector g(n);
  for (int k = 0; k < n; ++k) g(k) = u(rng);
  return g;
}

ComplexMatrix random_density(std::mt19937_64& rng, std::int64_t dim) {
  std::normal_distribution<double> g;
  ComplexVector v(dim);
  for (auto& x : v) x = cplx(g(rng), g(rng));
  v.normalize();
  return v * v.adjoint();
}

double car_residual(const std::vector<SpinOperator>& ops) {
  const int n = ops.empty() ? 0 : ops.front().n_sites;
  const SpinOperator id = identity_operator(n);
  double worst = 0.0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = 0; j < ops.size(); ++j) {
      SpinOperator mixed = anticommutator(ops[i], ops[j].adjoint());
      if (i == j) mixed = mixed - id;
      worst = std::max(worst, max_abs(mixed.matrix));
      worst = std::max(worst, max_abs(anticommutator(ops[i], ops[j]).matrix));
    }
  }
  return worst;
}

std::vector<std::pair<std::string, Check>> verify_checks(const RunConfig& cfg) {
  std::vector<std::pair<std::string, Check>> checks;
  const double j = cfg.coupling;
  const double eps = cfg.perturb_hamiltonian;

  for (int n = 2; n <= 10; ++n) {
    checks.emplace_back("spectrum N=" + std::to_string(n), [=] {
      ChainSpec spec;
      spec.n_sites = n;
      spec.coupling = j;
      const ModeBasis basis =
          eps == 0.0 ? chain_modes(spec) : diagonalize_oqs(build_perturbed_oqs_hamiltonian(spec, eps));
      const SpectrumResiduals r = spectrum_residuals(spec, basis);
      return CheckResult{spectrum_ok(r), "ladder " + fmt(r.ladder) + ", orthonormality " + fmt(r.orthonormality) +
                                             ", reconstruction " + fmt(r.reconstruction) + ", mirror " +
                                             fmt(r.mirror)};
    });
  }
  for (int n = 2; n <= 8; ++n) {
    checks.emplace_back("CAR N=" + std::to_string(n), [=] {
      ChainSpec spec;
      spec.n_sites = n;
      spec.coupling = j;
      const ModeBasis basis = chain_modes(spec);
      double worst = 0.0;
      for (Representation rep : {Representation::site, Representation::mode}) {
        const FermionAlgebra alg(basis, rep);
        std::vector<SpinOperator> sites;
        for (int i = 1; i <= n; ++i) sites.push_back(alg.site(i));
        worst = std::max({worst, car_residual(sites), car_residual(alg.modes())});
      }
      return bound_check(worst, 1e-10);
    });
    checks.emplace_back("spin vs mode Hamiltonian N=" + std::to_string(n), [=] {
      ChainSpec spec;
      spec.n_sites = n;
      spec.coupling = j;
      spec.omega = Omega::finite(1.3);
      const ModeBasis basis = chain_modes(spec);
      const SpinOperator diff = build_spin_hamiltonian(spec) - build_full_hamiltonian(spec, basis);
      return bound_check(max_abs(diff.matrix), 1e-9);
    });
  }
  for (int n = 2; n <= 8; ++n) {
    checks.emplace_back("perfect transfer N=" + std::to_string(n), [=] {
      ChainSpec spec;
      spec.n_sites = n;
      spec.coupling = j;
      const ModeBasis basis = chain_modes(spec);
      const RateModel none = RateModel::detailed_balance(spec, basis, RealVector::Zero(n), 0.0);
      TransferOptions opts;
      opts.engine = Engine::rk4;
      double worst = 0.0;
      for (Scheme s : {Scheme::a, Scheme::c}) {
        if (s == Scheme::c && n < 3) continue;
        const ChannelResult ch = transfer_channel(spec, basis, none, s, opts);
        worst = std::max(worst, std::abs(1.0 - average_fidelity(ch.map)));
      }
      return bound_check(worst, 1e-8);
    });
  }

  const std::uint64_t seed = cfg.seed;
  checks.emplace_back("Lindblad trace/Hermiticity/positivity N=3, t in [0,5]", [=] {
    std::mt19937_64 rng(seed);
    ChainSpec spec;
    spec.n_sites = 3;
    spec.coupling = j;
    spec.omega = Omega::finite(2.0 * j);
    const ModeBasis basis = chain_modes(spec);
    const RateModel model = RateModel::detailed_balance(spec, basis, random_rates(rng, 3, 0.1, 1.0), 0.7);
    const FermionAlgebra alg(basis, Representation::site);
    const SpinOperator h = build_full_hamiltonian(spec, basis);
    const SparseLiouvillian gen(model, alg.modes(), &h);
    ComplexMatrix rho = random_density(rng, alg.dim());
    double trace = 0.0, herm = 0.0, neg = 0.0;
    for (int step = 0; step < 5; ++step) {
      EvolveResult r = evolve(rho, 1.0, gen);
      rho = std::move(r.state);
      trace = std::max(trace, std::abs(rho.trace() - cplx(1.0)));
      herm = std::max(herm, max_abs(ComplexMatrix(rho - rho.adjoint())));
      neg = std::max(neg, -Eigen::SelfAdjointEigenSolver<ComplexMatrix>(rho).eigenvalues().minCoeff());
    }
    return CheckResult{trace < 1e-8 && herm < 1e-9 && neg <= 1e-8,
                       "trace " + fmt(trace) + ", hermiticity " + fmt(herm) + ", negativity " + fmt(neg)};
  });
  checks.emplace_back("Gibbs fixed point N=5, omega=2J, beta=0.7", [=] {
    std::mt19937_64 rng(seed + 1);
    ChainSpec spec;
    spec.n_sites = 5;
    spec.coupling = j;
    spec.omega = Omega::finite(2.0 * j);
    const ModeBasis basis = chain_modes(spec);
    const RealVector levels = basis.energies.array() + spec.omega.value();
    const RateModel model = RateModel::detailed_balance(spec, basis, random_rates(rng, 5, 0.2, 2.0), 0.7);
    double worst = 0.0;
    for (Representation rep : {Representation::site, Representation::mode}) {
      const FermionAlgebra alg(basis, rep);
      const SpinOperator h = alg.quadratic_hamiltonian(levels);
      const ComplexMatrix gibbs = gibbs_state(h, 0.7);
      const SparseLiouvillian gen(model, alg.modes(), &h);
      worst = std::max(worst, max_abs(gen.apply(gibbs)));
    }
    return bound_check(worst, 1e-8);
  });
  checks.emplace_back("RK4 vs exact propagation N=5", [=] {
    std::mt19937_64 rng(seed + 2);
    ChainSpec spec;
    spec.n_sites = 5;
    spec.coupling = j;
    spec.omega = Omega::infinite();
    const ModeBasis basis = chain_modes(spec);
    const RateModel model = RateModel::detailed_balance(spec, basis, random_rates(rng, 5, 0.2, 2.0), 1.0);
    TransferOptions rk, ex;
    rk.engine = Engine::rk4;
    ex.engine = Engine::exact;
    const TransferSetup a(spec, basis, model, rk), b(spec, basis, model, ex);
    const ComplexMatrix x = random_density(rng, a.algebra().dim());
    return bound_check(max_abs(ComplexMatrix(a.propagate(x, 0.8).state - b.propagate(x, 0.8).state)), 1e-8);
  });
  checks.emplace_back("classical populations vs quantum diagonal N=4", [=] {
    std::mt19937_64 rng(seed + 3);
    ChainSpec spec;
    spec.n_sites = 4;
    spec.coupling = j;
    spec.omega = Omega::finite(1.5 * j);
    const ModeBasis basis = chain_modes(spec);
    const RateModel model = RateModel::detailed_balance(spec, basis, random_rates(rng, 4, 0.2, 2.0), 0.5);
    const FermionAlgebra alg(basis, Representation::mode);
    const SparseLiouvillian gen(model, alg.modes(), nullptr);
    RealVector q = random_rates(rng, 16, 0.0, 1.0);
    q /= q.sum();
    const ComplexMatrix rho = q.cast<cplx>().asDiagonal();
    const RealVector quantum = evolve(rho, 1.1, gen).state.diagonal().real();
    const RealVector classical = classical_populations_evolve(q, 1.1, model).distribution;
    return bound_check((quantum - classical).cwiseAbs().maxCoeff(), 1e-9);
  });
  return checks;
}

// ---------------------------------------------------------------------------

int write_grid_rows(CsvWriter& csv, const std::vector<std::vector<double>>& rows,
                    const std::vector<std::string>& errors) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!errors[i].empty()) {
      csv.error(errors[i]);
      return kExitNumerical;
    }
    csv.row(rows[i]);
  }
  return kExitOk;
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, Streams io) {
  const ChainSpec spec = cfg.chain();
  const ModeBasis basis = basis_for(cfg);
  Output out(cfg, io.data);
  CsvWriter csv(out.stream());
  echo_config(csv, "spectrum", cfg);
  std::vector<std::string> cols{"k", "energy"};
  for (int i = 1; i <= spec.n_sites; ++i) cols.push_back("b_" + std::to_string(i));
  csv.header(cols);
  for (int k = 0; k < basis.size(); ++k) {
    std::vector<double> row{double(k + 1), basis.energies(k)};
    for (int i = 0; i < spec.n_sites; ++i) row.push_back(basis.modes(k, i));
    csv.row(row);
  }
  csv.flush();

  const SpectrumResiduals r = spectrum_residuals(spec, basis);
  io.log << "ladder residual " << fmt(r.ladder) << ", orthonormality " << fmt(r.orthonormality)
         << ", reconstruction " << fmt(r.reconstruction) << ", mirror amplitude " << fmt(r.mirror) << '\n';
  if (!spec.omega.is_infinite()) {
    const GroundStateReport g = ground_state_report(spec, basis);
    io.log << "ground energy " << format_real(g.ground_energy) << (g.vacuum_is_ground ? " (vacuum)" : "")
           << ", vacuum becomes ground state at omega >= " << format_real(g.crossing_omega) << '\n';
  }
  if (!spectrum_ok(r)) {
    io.log << "spectrum invariant check FAILED\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_fidelity(const RunConfig& cfg, Streams io) {
  const ChainSpec spec = cfg.chain();
  const ModeBasis basis = basis_for(cfg);
  const RateModel model = rate_model(cfg, spec, basis);
  const Engine engine = single_run_engine(cfg, model, spec.transfer_time);
  const TransferSetup setup(spec, basis, model, cfg.transfer_options(engine));
  Output out(cfg, io.data);
  std::ostream& os = out.stream();
  CsvWriter csv(os);
  echo_config(csv, "fidelity", cfg);
  os << "engine: " << (engine == Engine::rk4 ? "rk4" : "exact") << '\n';

  for (int k : inverted_modes(spec, basis)) {
    os << "note: mode " << k << " has omega + E_k = " << format_real(spec.omega.value() + basis.energies(k - 1))
       << " < 0, absorption and emission roles are exchanged\n";
  }
  os << "gamma_k =";
  for (double g : model.gammas) os << ' ' << format_real(g);
  os << "\npump_k / gamma_k =";
  for (double p : model.pump_factors) os << ' ' << format_real(p);
  os << '\n';

  int code = kExitOk;
  for (Scheme s : selected_schemes(cfg)) {
    if (s == Scheme::c && spec.n_sites < 3) {
      os << "scheme c: skipped, needs N >= 3\n";
      continue;
    }
    const ChannelResult ch = extract_channel(setup, s);
    os << "scheme " << to_string(s) << '\n';
    os << "lambda (rows: output I X Y Z, columns: input I X Y Z)\n";
    for (Pauli p : kPaulis) {
      os << "  " << pauli_name(p);
      for (Pauli q : kPaulis) os << ' ' << std::setw(20) << format_real(ch.map(p, q));
      os << '\n';
    }
    os << "F_" << to_string(s) << " = " << format_real(average_fidelity(ch.map)) << '\n';
    if (s == Scheme::c) {
      const DecodeHead& head = setup.head(Scheme::c);
      os << "p1 = "
         << format_real(
                classical_populations_evolve(logical_mixture_populations(basis, Scheme::c), spec.transfer_time, model)
                    .p1)
         << '\n';
      os << "p_ap = " << format_real(antiparallel_probability(0.5 * ch.evolved_identity, head.primary(), head.secondary()))
         << '\n';
    }
    for (const auto& w : ch.warnings) {
      io.log << "warning (scheme " << to_string(s) << "): " << w << '\n';
      code = kExitNumerical;
    }
  }
  return code;
}

int cmd_sweep(const RunConfig& cfg, Streams io) {
  const ChainSpec spec = cfg.chain();
  const ModeBasis basis = basis_for(cfg);
  const TransferOptions opts = cfg.transfer_options(Engine::exact);
  const std::vector<double> betas = cfg.beta_axis.values();
  const std::vector<double> gts = cfg.gamma_tau_axis.values();
  const std::size_t count = betas.size() * gts.size();

  std::vector<std::vector<double>> rows(count);
  std::vector<std::string> errors(count), warnings(count);
  parallel_for(count, cfg.jobs, [&](std::size_t i) {
    const double beta = betas[i / gts.size()];
    const double gt = gts[i % gts.size()];
    try {
      const SweepPoint p = evaluate_point(spec, basis, cfg.rates, beta, gt, opts);
      rows[i] = {p.beta, p.gamma_tau, p.f_a, p.f_c, p.diff, p.p1, p.p_ap};
      if (!p.warnings.empty()) warnings[i] = p.warnings.front();
    } catch (const std::exception& e) {
      errors[i] = "beta=" + format_real(beta) + " gamma_tau=" + format_real(gt) + ": " + e.what();
    }
  });

  Output out(cfg, io.data);
  CsvWriter csv(out.stream());
  echo_config(csv, "sweep", cfg);
  csv.header({"beta", "gamma_tau", "F_a", "F_c", "diff", "p1", "p_ap"});
  int code = write_grid_rows(csv, rows, errors);
  for (std::size_t i = 0; i < count; ++i) {
    if (warnings[i].empty()) continue;
    io.log << "warning at beta=" << format_real(rows[i][0]) << " gamma_tau=" << format_real(rows[i][1]) << ": "
           << warnings[i] << '\n';
    code = kExitNumerical;
  }
  csv.flush();
  return code;
}

int cmd_threshold(const RunConfig& cfg, Streams io) {
  const ChainSpec spec = cfg.chain();
  const ModeBasis basis = basis_for(cfg);
  const TransferOptions opts = cfg.transfer_options(Engine::exact);
  const std::vector<double> betas = cfg.beta_axis.values();
  ThresholdOptions thr;
  thr.target = cfg.target_fidelity;
  thr.initial_upper = cfg.gamma_tau_axis.hi > 0.0 ? cfg.gamma_tau_axis.hi : 2.0;
  thr.max_upper = std::max(256.0, 8.0 * thr.initial_upper);

  const bool do_a = cfg.wants(Scheme::a);
  const bool do_c = cfg.wants(Scheme::c) && spec.n_sites >= 3;
  std::vector<std::vector<double>> rows(betas.size());
  std::vector<std::string> errors(betas.size()), notes(betas.size());
  parallel_for(betas.size(), cfg.jobs, [&](std::size_t i) {
    try {
      std::vector<double> row{betas[i], kNaN, kNaN};
      for (Scheme s : {Scheme::a, Scheme::c}) {
        if (!(s == Scheme::a ? do_a : do_c)) continue;
        const ThresholdPoint p = threshold_curve(s, spec, basis, cfg.rates, {betas[i]}, thr, opts).front();
        row[s == Scheme::a ? 1 : 2] = p.gamma_tau;
        if (!p.bracketed) notes[i] += " scheme " + to_string(s) + ": target not crossed below " + format_real(thr.max_upper) + ";";
        if (!p.monotone) notes[i] += " scheme " + to_string(s) + ": fidelity not monotone in gamma_tau;";
      }
      rows[i] = row;
    } catch (const std::exception& e) {
      errors[i] = "beta=" + format_real(betas[i]) + ": " + e.what();
    }
  });

  Output out(cfg, io.data);
  CsvWriter csv(out.stream());
  echo_config(csv, "threshold", cfg);
  csv.header({"beta", "gamma_tau_threshold_a", "gamma_tau_threshold_c"});
  const int code = write_grid_rows(csv, rows, errors);
  if (code == kExitOk) {
    for (std::size_t i = 0; i < betas.size(); ++i) {
      if (!notes[i].empty()) csv.comment("WARNING beta=" + format_real(betas[i]) + ":" + notes[i]);
    }
  }
  csv.flush();
  return code;
}

int cmd_fit(const RunConfig& cfg, Streams io) {
  const ChainSpec spec = cfg.chain();
  if (!spec.omega.is_infinite()) throw UsageError("fit needs omega=inf");
  if (cfg.rates.preset != RatePreset::uniform) throw UsageError("fit needs uniform rates");
  const double gamma = cfg.gamma > 0.0 ? cfg.gamma : 1.0;
  const FitResult fit = fit_collision_exponents(spec, gamma, cfg.temperature(), cfg.fit_window.values(),
                                                cfg.transfer_options(Engine::exact));
  Output out(cfg, io.data);
  CsvWriter csv(out.stream());
  echo_config(csv, "fit", cfg);
  int used = 0;
  for (const FitSample& s : fit.samples) {
    used += s.used;
    csv.comment("sample gamma_t=" + format_real(s.gamma_t) + " F_c=" + format_real(s.fidelity) +
                " p_ap=" + format_real(s.p_ap) + " p1=" + format_real(s.p1) + " used=" + (s.used ? "1" : "0"));
  }
  csv.header({"N", "beta_prime", "a1", "a2", "residual_a1", "residual_a2", "samples_used"});
  csv.row(std::vector<double>{double(spec.n_sites), cfg.temperature(), fit.a1, fit.a2, fit.residual_a1,
                              fit.residual_a2, double(used)});
  csv.flush();
  io.log << "a1 = " << format_real(fit.a1) << ", a2 = " << format_real(fit.a2) << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, Streams io) {
  int failures = 0;
  for (const auto& [name, check] : verify_checks(cfg)) {
    CheckResult r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failures += !r.pass;
    io.data << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << '\n';
  }
  io.data << (failures ? std::to_string(failures) + " check(s) failed" : std::string("all checks passed")) << '\n';
  return failures ? kExitNumerical : kExitOk;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"spectrum", "fidelity", "sweep", "threshold", "fit", "verify"};
  return names;
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  static const std::vector<std::pair<std::string, int (*)(const RunConfig&, Streams)>> table{
      {"spectrum", cmd_spectrum}, {"fidelity", cmd_fidelity}, {"sweep", cmd_sweep},
      {"threshold", cmd_threshold}, {"fit", cmd_fit}, {"verify", cmd_verify}};
  for (const auto& [n, fn] : table) {
    if (n != name) continue;
    try {
      return fn(cfg, Streams{out, log});
    } catch (const UsageError& e) {
      log << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      log << "error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      log << "numerical failure: " << e.what() << '\n';
      return kExitNumerical;
    }
  }
  log << "error: unknown command '" << name << "'\n";
  return kExitUsage;
}

}  // namespace qwire::cli
