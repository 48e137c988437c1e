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

#include "qwire/chain_model.hpp"

#include <cmath>
#include <string>

namespace qwire {

Omega Omega::finite(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("omega must be a finite non-negative number, got " +
                                std::to_string(value));
  }
  return Omega(false, value);
}

double Omega::value() const {
  if (infinite_) throw std::logic_error("omega is in the infinite limit and has no finite value");
  return value_;
}

void ChainSpec::validate() const {
  if (n_sites < 2) throw std::invalid_argument("chain length must be at least 2");
  if (!(coupling > 0.0) || !std::isfinite(coupling)) {
    throw std::invalid_argument("coupling scale must be positive");
  }
  if (!(transfer_time > 0.0) || !std::isfinite(transfer_time)) {
    throw std::invalid_argument("transfer time must be positive");
  }
}

RealMatrix build_perturbed_oqs_hamiltonian(const ChainSpec& spec, double relative_perturbation) {
  spec.validate();
  const int n = spec.n_sites;
  RealMatrix h = RealMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const double v =
        spec.coupling * std::sqrt(static_cast<double>(i) * (n - i)) * (1.0 + relative_perturbation);
    h(i - 1, i) = v;
    h(i, i - 1) = v;
  }
  return h;
}

RealMatrix build_oqs_hamiltonian(const ChainSpec& spec) {
  return build_perturbed_oqs_hamiltonian(spec, 0.0);
}

ModeBasis diagonalize_oqs(const RealMatrix& h_oqs) {
  const Eigen::Index n = h_oqs.rows();
  if (n < 1 || h_oqs.cols() != n) throw std::invalid_argument("OQS Hamiltonian must be square");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(i - j) > 1 && h_oqs(i, j) != 0.0) {
        throw std::invalid_argument("OQS Hamiltonian must be tridiagonal");
      }
      if (h_oqs(i, j) != h_oqs(j, i)) throw std::invalid_argument("OQS Hamiltonian must be symmetric");
    }
  }

  RealVector diag = h_oqs.diagonal();
  RealVector sub = n > 1 ? RealVector(h_oqs.diagonal(-1)) : RealVector(0);
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("tridiagonal eigensolver did not converge");
  }

  // Eigen returns ascending eigenvalues with eigenvectors as columns.
  ModeBasis basis;
  basis.energies = solver.eigenvalues();
  basis.modes = solver.eigenvectors().transpose();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = 0;
    for (Eigen::Index j = 1; j < n; ++j) {
      if (std::abs(basis.modes(k, j)) > std::abs(basis.modes(k, pivot)) + 1e-12) pivot = j;
    }
    if (basis.modes(k, pivot) < 0.0) basis.modes.row(k) *= -1.0;
  }
  if (!basis.energies.allFinite() || !basis.modes.allFinite()) {
    throw ConvergenceError("tridiagonal eigensolver produced non-finite output");
  }
  return basis;
}

ComplexMatrix oqs_propagator(const ModeBasis& basis, double t) {
  const int n = basis.size();
  ComplexVector phases(n);
  for (int k = 0; k < n; ++k) phases(k) = std::exp(cplx(0.0, -basis.energies(k) * t));
  const ComplexMatrix b = basis.modes.cast<cplx>();
  return b.transpose() * phases.asDiagonal() * b;
}

ModeBasis chain_modes(const ChainSpec& spec) { return diagonalize_oqs(build_oqs_hamiltonian(spec)); }

RealVector ladder_spectrum(int n_sites, double coupling) {
  RealVector e(n_sites);
  for (int k = 1; k <= n_sites; ++k) e(k - 1) = (2.0 * k - n_sites - 1.0) * coupling;
  return e;
}

}  // namespace qwire
