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

#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qwire {

using cplx = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// On-site excitation energy. Either a finite non-negative value or the
/// symbolic infinite limit, in which temperatures are given as beta' = omega*beta.
class Omega {
 public:
  static Omega finite(double value);
  static Omega infinite() { return Omega(true, 0.0); }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error in the infinite limit.
  double value() const;

  friend bool operator==(const Omega&, const Omega&) = default;

 private:
  Omega(bool infinite, double value) : infinite_(infinite), value_(value) {}
  bool infinite_;
  double value_;
};

/// Engineered-coupling chain: H_OQS(i,i+1) = J sqrt(i(N-i)).
struct ChainSpec {
  int n_sites = 2;
  double coupling = std::numbers::pi;
  Omega omega = Omega::finite(0.0);
  double transfer_time = 0.5;

  /// Throws std::invalid_argument when an invariant does not hold.
  void validate() const;
};

/// Eigenbasis of the one-quasiparticle Hamiltonian. Row k of `modes` holds the
/// site amplitudes of mode k, so c_k = sum_j modes(k, j) a_j.
struct ModeBasis {
  RealVector energies;
  RealMatrix modes;

  int size() const { return static_cast<int>(energies.size()); }
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric tridiagonal N x N matrix with zero diagonal.
RealMatrix build_oqs_hamiltonian(const ChainSpec& spec);

/// Same as build_oqs_hamiltonian but with the couplings multiplied by
/// (1 + relative_perturbation). Used only by the verification negative control.
RealMatrix build_perturbed_oqs_hamiltonian(const ChainSpec& spec, double relative_perturbation);

/// Diagonalizes a symmetric tridiagonal matrix. Energies ascend; in each row the
/// first entry of largest magnitude is made positive.
ModeBasis diagonalize_oqs(const RealMatrix& h_oqs);

/// Single-particle propagator modes^T diag(exp(-i E t)) modes.
ComplexMatrix oqs_propagator(const ModeBasis& basis, double t);

/// Convenience: build and diagonalize in one step.
ModeBasis chain_modes(const ChainSpec& spec);

/// E_k = (2k - N - 1) J for k = 1..N.
RealVector ladder_spectrum(int n_sites, double coupling);

}  // namespace qwire
