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

#include "oracles.hpp"
#include "qwire/chain_model.hpp"

using namespace qwire;
using std::numbers::pi;

namespace {

ChainSpec chain(int n) {
  ChainSpec s;
  s.n_sites = n;
  return s;
}

}  // namespace

TEST_CASE("hopping matrix entries") {
  const RealMatrix h2 = build_oqs_hamiltonian(chain(2));
  CHECK(h2(0, 0) == 0.0);
  CHECK(h2(0, 1) == doctest::Approx(pi));
  CHECK(h2(1, 0) == doctest::Approx(pi));

  const RealMatrix h3 = build_oqs_hamiltonian(chain(3));
  CHECK(h3(0, 1) == doctest::Approx(pi * std::sqrt(2.0)));
  CHECK(h3(1, 2) == doctest::Approx(pi * std::sqrt(2.0)));
  CHECK(h3(0, 2) == 0.0);
  CHECK(h3.diagonal().isZero());
}

TEST_CASE("ladder spectrum for N = 2..10") {
  for (int n = 2; n <= 10; ++n) {
    const ModeBasis b = chain_modes(chain(n));
    for (int k = 1; k <= n; ++k) CHECK(std::abs(b.energies(k - 1) - (2 * k - n - 1) * pi) < 1e-9);
    CHECK((b.modes * b.modes.transpose() - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
  }
  const ModeBasis six = chain_modes(chain(6));
  for (int k = 1; k < 6; ++k) CHECK(std::abs(six.energies(k) - six.energies(k - 1) - 2 * pi) < 1e-9);
}

TEST_CASE("two-site basis by hand") {
  const ModeBasis b = chain_modes(chain(2));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(b.energies(0) == doctest::Approx(-pi));
  CHECK(b.energies(1) == doctest::Approx(pi));
  CHECK(b.modes(0, 0) == doctest::Approx(r));
  CHECK(b.modes(0, 1) == doctest::Approx(-r));
  CHECK(b.modes(1, 0) == doctest::Approx(r));
  CHECK(b.modes(1, 1) == doctest::Approx(r));
}

TEST_CASE("sign convention: first largest entry of each mode is positive") {
  for (int n = 2; n <= 9; ++n) {
    const ModeBasis b = chain_modes(chain(n));
    for (int k = 0; k < n; ++k) {
      const double top = b.modes.row(k).cwiseAbs().maxCoeff();
      Eigen::Index first = 0;
      while (std::abs(b.modes(k, first)) < top - 1e-12) ++first;
      CHECK(b.modes(k, first) > 0.0);
    }
  }
}

TEST_CASE("reconstruction and propagator against a brute-force exponential") {
  for (int n = 2; n <= 8; ++n) {
    const ModeBasis b = chain_modes(chain(n));
    const Eigen::MatrixXd h = oracle::chain_matrix(n, pi);
    CHECK((b.modes.transpose() * b.energies.asDiagonal() * b.modes - h).cwiseAbs().maxCoeff() < 1e-9);
    for (double t : {0.0, 0.13, 0.5, 0.77}) {
      const oracle::Dense ref = oracle::expm(oracle::Dense(oracle::cplx(0, -t) * h.cast<oracle::cplx>()));
      CHECK((oqs_propagator(b, t) - ref).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("mirror transfer at half period") {
  for (int n = 2; n <= 10; ++n) {
    const ComplexMatrix u = oqs_propagator(chain_modes(chain(n)), 0.5);
    CHECK(std::abs(std::abs(u(n - 1, 0)) - 1.0) < 1e-9);
  }
  CHECK(std::abs(oqs_propagator(chain_modes(chain(5)), 0.5)(4, 0)) == doctest::Approx(1.0));
  // Phases from the brute-force oracle: -i, -1, +i for N = 2, 3, 4.
  const auto phase = [](int n) {
    const oracle::Dense u =
        oracle::expm(oracle::Dense(oracle::cplx(0, -0.5) * oracle::chain_matrix(n, pi).cast<oracle::cplx>()));
    return u(n - 1, 0);
  };
  CHECK(std::abs(phase(2) - oracle::cplx(0, -1)) < 1e-10);
  CHECK(std::abs(phase(3) - oracle::cplx(-1, 0)) < 1e-10);
  CHECK(std::abs(phase(4) - oracle::cplx(0, 1)) < 1e-10);
  for (int n = 2; n <= 8; ++n) {
    CHECK(std::abs(oqs_propagator(chain_modes(chain(n)), 0.5)(n - 1, 0) - phase(n)) < 1e-10);
  }
}

TEST_CASE("propagator at t = 0 is the identity") {
  const ComplexMatrix u = oqs_propagator(chain_modes(chain(6)), 0.0);
  CHECK((u - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(build_oqs_hamiltonian(chain(1)), std::invalid_argument);
  ChainSpec bad = chain(3);
  bad.coupling = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  RealMatrix asym = oracle::chain_matrix(3, pi);
  asym(0, 1) += 1.0;
  CHECK_THROWS_AS(diagonalize_oqs(asym), std::invalid_argument);
  RealMatrix dense = oracle::chain_matrix(3, pi);
  dense(0, 2) = dense(2, 0) = 1.0;
  CHECK_THROWS_AS(diagonalize_oqs(dense), std::invalid_argument);
  CHECK_THROWS_AS(Omega::infinite().value(), std::logic_error);
}

TEST_CASE("perturbed couplings break the ladder") {
  const ModeBasis b = diagonalize_oqs(build_perturbed_oqs_hamiltonian(chain(5), 1e-3));
  CHECK((b.energies - ladder_spectrum(5, pi)).cwiseAbs().maxCoeff() > 1e-3);
}
