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


#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qwire/dynamics.hpp"

using namespace qwire;
using std::numbers::pi;

namespace {

ChainSpec chain(int n, Omega omega) {
  ChainSpec s;
  s.n_sites = n;
  s.omega = omega;
  return s;
}

RealVector random_vector(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  RealVector v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

ComplexMatrix random_state(std::mt19937_64& rng, std::int64_t dim) {
  std::normal_distribution<double> g;
  ComplexMatrix a(dim, dim);
  for (auto& x : a.reshaped()) x = cplx(g(rng), g(rng));
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("detailed balance pump factors") {
  const ChainSpec finite = chain(4, Omega::finite(4.0 * pi));
  const ModeBasis b = chain_modes(finite);
  const RateModel m = RateModel::detailed_balance(finite, b, RealVector::Ones(4), 0.3);
  for (int k = 0; k < 4; ++k) CHECK(m.pump_factors(k) == doctest::Approx(std::exp(-0.3 * (4.0 * pi + b.energies(k)))));

  const ChainSpec inf = chain(4, Omega::infinite());
  const RateModel mi = RateModel::detailed_balance(inf, chain_modes(inf), RealVector::Ones(4), 1.5);
  CHECK((mi.pump_factors.array() - std::exp(-1.5)).abs().maxCoeff() < 1e-15);
  const RateModel cold = RateModel::detailed_balance(inf, chain_modes(inf), RealVector::Ones(4), kInfinity);
  CHECK(cold.pump_factors.isZero());

  CHECK(inverted_modes(finite, b).empty());
  CHECK_THROWS_AS(RateModel::detailed_balance(finite, b, -RealVector::Ones(4), 1.0), std::invalid_argument);

  // Six sites at omega = 4 pi: omega + E_1 = -pi, so zero temperature pumps mode 1 without bound.
  const ChainSpec six = chain(6, Omega::finite(4.0 * pi));
  const ModeBasis b6 = chain_modes(six);
  CHECK(inverted_modes(six, b6) == std::vector<int>{1});
  CHECK_THROWS_AS(RateModel::detailed_balance(six, b6, RealVector::Ones(6), kInfinity), std::invalid_argument);
}

TEST_CASE("rate presets") {
  const ChainSpec s = chain(6, Omega::finite(5.0 * pi));
  const ModeBasis b = chain_modes(s);
  const RealVector q = preset_gammas(RatePreset::quadratic, 2.0, s, b);
  CHECK(q(0) == 0.0);  // zero-energy mode stays dark
  CHECK(q(5) == doctest::Approx(2.0 * 100.0 * pi * pi));
  const RealVector l = preset_gammas(RatePreset::explicit_list, 0.5, s, b, {1, 2, 3, 4, 5, 6});
  CHECK(l(3) == doctest::Approx(2.0));
  CHECK_THROWS_AS(preset_gammas(RatePreset::explicit_list, 1.0, s, b, {1, 2}), std::invalid_argument);
  const ChainSpec inf = chain(6, Omega::infinite());
  CHECK_THROWS_AS(preset_gammas(RatePreset::quadratic, 1.0, inf, chain_modes(inf)), std::invalid_argument);
}

TEST_CASE("generator special cases") {
  const ChainSpec s = chain(3, Omega::finite(7.0 * pi));
  const ModeBasis b = chain_modes(s);
  const FermionAlgebra alg(b, Representation::site);
  std::mt19937_64 rng(3);
  const ComplexMatrix x = random_state(rng, 8);

  const RateModel none = RateModel::detailed_balance(s, b, RealVector::Zero(3), 0.0);
  CHECK(max_abs(SparseLiouvillian(none, alg.modes(), nullptr).apply(x)) == 0.0);

  const RateModel cold = RateModel::detailed_balance(s, b, RealVector::Constant(3, 0.7), kInfinity);
  const ComplexVector vac = alg.vacuum();
  const ComplexMatrix vv = vac * vac.adjoint();
  const SpinOperator h = build_full_hamiltonian(s, b);
  CHECK(max_abs(SparseLiouvillian(cold, alg.modes(), &h).apply(vv)) < 1e-14);
  CHECK(max_abs(ModeLiouvillian(cold, RealVector(b.energies.array() + 7.0 * pi)).apply(vv)) < 1e-14);
}

TEST_CASE("single mode population equation") {
  RateModel m;
  m.gammas = RealVector::Constant(1, 0.8);
  m.pump_factors = RealVector::Constant(1, 0.3);
  m.beta = 1.0;
  const double q = 0.35;
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 0) = 1.0 - q;
  x(1, 1) = q;
  const ComplexMatrix dx = ModeLiouvillian(m, std::nullopt).apply(x);
  CHECK(dx(1, 1).real() == doctest::Approx(-0.8 * q + 0.8 * 0.3 * (1.0 - q)));
  CHECK(dx(0, 0).real() == doctest::Approx(-dx(1, 1).real()));
}

TEST_CASE("sparse generator against the dense superoperator") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    const ChainSpec s = chain(n, Omega::finite(1.9));
    const ModeBasis b = chain_modes(s);
    const RateModel m = RateModel::detailed_balance(s, b, random_vector(rng, n, 0.2, 1.5), 0.6);
    const std::int64_t d = std::int64_t{1} << n;

    std::vector<oracle::Jump> jumps;
    oracle::Dense h = oracle::Dense::Zero(d, d);
    for (int k = 0; k < n; ++k) {
      oracle::Dense c = oracle::Dense::Zero(d, d);
      for (int j = 0; j < n; ++j) c += b.modes(k, j) * oracle::kron_annihilator(j, n);
      jumps.push_back({m.gammas(k), c});
      jumps.push_back({m.gammas(k) * m.pump_factors(k), c.adjoint()});
      h += (b.energies(k) + 1.9) * c.adjoint() * c;
    }
    const oracle::Dense sup = oracle::lindblad_superoperator(h, jumps);
    const ComplexMatrix x0 = random_state(rng, d);

    const FermionAlgebra alg(b, Representation::site);
    const SpinOperator hs = build_full_hamiltonian(s, b);
    const SparseLiouvillian gen(m, alg.modes(), &hs);
    CHECK(max_abs(gen.apply(x0) - oracle::unvec(sup * oracle::vec(x0), d)) < 1e-10);

    const double t = 0.9;
    const ComplexMatrix ref = oracle::unvec(oracle::expm(sup * t) * oracle::vec(x0), d);
    const EvolveResult r = evolve(x0, t, gen);
    CHECK(max_abs(r.state - ref) < 1e-8);
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("mode representation: RK4 and exact propagation agree") {
  std::mt19937_64 rng(5);
  for (Omega omega : {Omega::infinite(), Omega::finite(4.0 * pi)}) {
    const ChainSpec s = chain(5, omega);
    const ModeBasis b = chain_modes(s);
    const RateModel m = RateModel::detailed_balance(s, b, random_vector(rng, 5, 0.1, 2.0), 0.8);
    std::optional<RealVector> levels;
    if (!omega.is_infinite()) levels = RealVector(b.energies.array() + omega.value());
    const ModeLiouvillian gen(m, levels);
    const ComplexMatrix x0 = random_state(rng, 32);
    for (double t : {0.0, 0.3, 1.7}) {
      CHECK(max_abs(evolve(x0, t, gen).state - gen.propagate_exact(x0, t)) < 1e-8);
    }
  }
}

TEST_CASE("evolution invariants") {
  std::mt19937_64 rng(17);
  const ChainSpec s = chain(3, Omega::finite(2.3));
  const ModeBasis b = chain_modes(s);
  const RateModel m = RateModel::detailed_balance(s, b, random_vector(rng, 3, 0.1, 1.0), 0.4);
  const FermionAlgebra alg(b, Representation::site);
  const SpinOperator h = build_full_hamiltonian(s, b);
  const SparseLiouvillian gen(m, alg.modes(), &h);
  const ComplexMatrix x0 = random_state(rng, 8);
  CHECK(max_abs(evolve(x0, 0.0, gen).state - x0) == 0.0);
  ComplexMatrix x = x0;
  for (int i = 0; i < 5; ++i) {
    const EvolveResult r = evolve(x, 1.0, gen);
    x = r.state;
    CHECK(r.trace_drift < 1e-8);
    CHECK(r.hermiticity_residual < 1e-9);
    CHECK(r.min_eigenvalue >= -1e-8);
    CHECK(r.warnings.empty());
  }
  CHECK_THROWS(evolve(x0, -1.0, gen));
}

TEST_CASE("thermalization to the Gibbs state") {
  std::mt19937_64 rng(23);
  const ChainSpec s = chain(3, Omega::finite(2.0 * pi));
  const ModeBasis b = chain_modes(s);
  const double beta = 0.45;
  const RateModel m = RateModel::detailed_balance(s, b, random_vector(rng, 3, 0.5, 1.5), beta);
  const FermionAlgebra alg(b, Representation::site);
  const SpinOperator h = build_full_hamiltonian(s, b);
  const SparseLiouvillian gen(m, alg.modes(), &h);
  const ComplexMatrix gibbs = gibbs_state(h, beta);
  CHECK(max_abs(gen.apply(gibbs)) < 1e-10);
  const ComplexMatrix late = evolve(random_state(rng, 8), 30.0, gen).state;
  CHECK(max_abs(late - gibbs) < 1e-5);
}

TEST_CASE("pure decay relaxes to the vacuum") {
  std::mt19937_64 rng(29);
  const ChainSpec s = chain(3, Omega::finite(2.5 * pi));
  const ModeBasis b = chain_modes(s);
  const RateModel m = RateModel::detailed_balance(s, b, random_vector(rng, 3, 0.5, 1.5), kInfinity);
  const FermionAlgebra alg(b, Representation::site);
  const SpinOperator h = build_full_hamiltonian(s, b);
  const ComplexMatrix late = evolve(random_state(rng, 8), 50.0, m, alg.modes(), &h).state;
  ComplexMatrix vac = ComplexMatrix::Zero(8, 8);
  vac(0, 0) = 1.0;
  CHECK(max_abs(late - vac) < 1e-8);
}

TEST_CASE("classical population equation") {
  const int n = 4;
  const ChainSpec s = chain(n, Omega::infinite());
  const ModeBasis b = chain_modes(s);
  RealVector one = RealVector::Zero(16);
  one(1) = 1.0;  // one quasi-fermion in mode 1

  const RateModel cold = RateModel::detailed_balance(s, b, RealVector::Constant(n, 0.9), kInfinity);
  for (double t : {0.0, 0.4, 2.0}) {
    CHECK(classical_populations_evolve(one, t, cold).p1 == doctest::Approx(std::exp(-0.9 * t)).epsilon(1e-12));
  }
  CHECK((classical_populations_evolve(one, 0.0, cold).distribution - one).norm() == 0.0);

  const RateModel hot = RateModel::detailed_balance(s, b, RealVector::Constant(n, 0.9), 0.0);
  const PopulationResult eq = classical_populations_evolve(one, 60.0, hot);
  CHECK(eq.p1 == doctest::Approx(n / 16.0).epsilon(1e-9));
  CHECK((eq.mode_occupations.array() - 0.5).abs().maxCoeff() < 1e-9);

  RealVector bad = one;
  bad(0) = -0.5;
  CHECK_THROWS_AS(classical_populations_evolve(bad, 1.0, hot), std::invalid_argument);
}

TEST_CASE("classical populations match the quantum diagonal") {
  std::mt19937_64 rng(31);
  const ChainSpec s = chain(4, Omega::finite(1.5 * pi));
  const ModeBasis b = chain_modes(s);
  const RateModel m = RateModel::detailed_balance(s, b, random_vector(rng, 4, 0.2, 2.0), 0.5);
  const FermionAlgebra alg(b, Representation::mode);
  RealVector q = random_vector(rng, 16, 0.0, 1.0);
  q /= q.sum();
  const ComplexMatrix rho = q.cast<cplx>().asDiagonal();
  const SparseLiouvillian gen(m, alg.modes(), nullptr);
  const RealVector quantum = evolve(rho, 1.3, gen).state.diagonal().real();
  CHECK((quantum - classical_populations_evolve(q, 1.3, m).distribution).cwiseAbs().maxCoeff() < 1e-9);

  RealVector occ(4);
  occ << 0.1, 0.5, 0.9, 0.0;
  const PopulationResult r = classical_populations_evolve_occupations(occ, 0.0, m);
  CHECK((r.mode_occupations - occ).norm() < 1e-12);
}

TEST_CASE("anti-parallel probability") {
  const ChainSpec s = chain(3, Omega::finite(0.0));
  const FermionAlgebra alg(chain_modes(s), Representation::site);
  ComplexMatrix rho = ComplexMatrix::Zero(8, 8);
  rho(1, 1) = 1.0;  // site 1 occupied
  CHECK(antiparallel_probability(rho, alg, 1, 2) == doctest::Approx(1.0));
  rho.setZero();
  rho(0, 0) = 1.0;
  CHECK(antiparallel_probability(rho, alg, 1, 2) == doctest::Approx(0.0));
  CHECK(antiparallel_probability(ComplexMatrix::Identity(8, 8) / 8.0, alg, 1, 2) == doctest::Approx(0.5));
}
