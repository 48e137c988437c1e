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

#include "qwire/transfer.hpp"

#include <cmath>

namespace qwire {
namespace {

std::pair<ComplexVector, ComplexVector> logical_basis(const FermionAlgebra& algebra, Scheme scheme) {
  const ComplexVector vac = algebra.vacuum();
  const SparseMatrix a1dag = algebra.site(1).matrix.adjoint();
  if (scheme == Scheme::a) return {vac, a1dag * vac};
  if (algebra.n_sites() < 3) throw std::invalid_argument("scheme (c) needs at least 3 sites");
  const SparseMatrix a2dag = algebra.site(2).matrix.adjoint();
  return {a1dag * vac, a2dag * vac};
}

SpinOperator combine(const FermionAlgebra& algebra, const ComplexVector& coeffs) {
  SpinOperator out{algebra.n_sites(), SparseMatrix(algebra.dim(), algebra.dim())};
  for (int j = 1; j <= algebra.n_sites(); ++j) {
    const cplx w = coeffs(j - 1);
    if (std::abs(w) > 1e-14) out.matrix += w * algebra.site(j).matrix;
  }
  out.matrix.prune(cplx(0.0), 1e-14);
  return out;
}

}  // namespace

std::string to_string(Scheme scheme) { return scheme == Scheme::a ? "a" : "c"; }

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Encoding Encoding::make(Scheme scheme, int n_sites) {
  if (scheme == Scheme::a) {
    if (n_sites < 2) throw std::invalid_argument("scheme (a) needs at least 2 sites");
    return {scheme, {1}, {n_sites}};
  }
  if (n_sites < 3) throw std::invalid_argument("scheme (c) needs at least 3 sites");
  return {scheme, {1, 2}, {n_sites, n_sites - 1}};
}

ComplexMatrix encode_operator(const FermionAlgebra& algebra, Scheme scheme, Pauli pauli) {
  const auto [v0, v1] = logical_basis(algebra, scheme);
  const Eigen::Matrix2cd s = pauli_matrix(pauli);
  const ComplexVector* v[2] = {&v0, &v1};
  ComplexMatrix out = ComplexMatrix::Zero(algebra.dim(), algebra.dim());
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      if (s(a, b) != cplx(0.0)) out.noalias() += s(a, b) * (*v[a]) * v[b]->adjoint();
    }
  }
  return out;
}

ComplexVector encode_state(const FermionAlgebra& algebra, Scheme scheme, cplx alpha, cplx beta) {
  const auto [v0, v1] = logical_basis(algebra, scheme);
  return alpha * v0 + beta * v1;
}

// ---------------------------------------------------------------------------

DecodeHead::DecodeHead(const FermionAlgebra& algebra, const ChainSpec& spec, Scheme scheme, Frame frame,
                       bool phase_correction)
    : scheme_(scheme) {
  const Encoding enc = Encoding::make(scheme, algebra.n_sites());
  const int n = algebra.n_sites();
  if (spec.n_sites != n) throw std::invalid_argument("chain spec does not match the algebra");

  const ComplexMatrix u = oqs_propagator(algebra.basis(), spec.transfer_time);
  cplx reference = u(n - 1, 0);
  if (frame == Frame::lab) {
    if (spec.omega.is_infinite()) throw std::invalid_argument("lab frame needs a finite omega");
    reference *= std::exp(cplx(0.0, -spec.omega.value() * spec.transfer_time));
  }
  if (phase_correction && std::abs(reference) > 1e-12) correction_ = std::conj(reference) / std::abs(reference);

  // Heisenberg transport of a_m back through the free evolution:
  // U^+ a_m U = sum_l u(m, l) a_l.
  auto readout = [&](int site) {
    ComplexVector coeffs = ComplexVector::Zero(n);
    if (frame == Frame::interaction) {
      coeffs = u.row(site - 1).transpose();
    } else {
      coeffs(site - 1) = 1.0;
    }
    return combine(algebra, correction_ * coeffs);
  };

  d1_ = readout(enc.decode_sites[0]);
  const SpinOperator id = identity_operator(n);
  observables_[0] = id;
  if (scheme == Scheme::a) {
    const SpinOperator d1dag = d1_.adjoint();
    observables_[1] = d1_ + d1dag;
    observables_[2] = cplx(0, -1) * d1_ + cplx(0, 1) * d1dag;
    observables_[3] = d1_ * d1dag - d1dag * d1_;
  } else {
    d2_ = readout(enc.decode_sites[1]);
    const SpinOperator raise = d1_.adjoint() * *d2_;  // |0><1| on the logical qubit
    const SpinOperator lower = raise.adjoint();
    observables_[1] = raise + lower;
    observables_[2] = cplx(0, -1) * raise + cplx(0, 1) * lower;
    observables_[3] = d1_.adjoint() * d1_ - d2_->adjoint() * *d2_;
  }
  for (auto& o : observables_) o.matrix.prune(cplx(0.0), 1e-14);
}

const SpinOperator& DecodeHead::secondary() const {
  if (!d2_) throw std::logic_error("scheme (a) reads a single site");
  return *d2_;
}

double DecodeHead::overlap(const ComplexMatrix& evolved, Pauli pauli) const {
  return 0.5 * trace_product(observable(pauli), evolved).real();
}

Eigen::Vector3d DecodeHead::bloch(const ComplexMatrix& wire_state) const {
  return {trace_product(observable(Pauli::X), wire_state).real(),
          trace_product(observable(Pauli::Y), wire_state).real(),
          trace_product(observable(Pauli::Z), wire_state).real()};
}

double decode_overlap(const DecodeHead& head, const ComplexMatrix& evolved, Pauli pauli) {
  return head.overlap(evolved, pauli);
}

// ---------------------------------------------------------------------------

TransferSetup::TransferSetup(const ChainSpec& spec, const ModeBasis& basis, const RateModel& rates,
                             const TransferOptions& options)
    : spec_(spec),
      rates_(rates),
      options_(options),
      algebra_(basis, options.representation),
      head_a_(algebra_, spec, Scheme::a, options.frame, options.phase_correction) {
  spec_.validate();
  if (basis.size() != spec.n_sites || rates.size() != spec.n_sites) {
    throw std::invalid_argument("chain spec, mode basis and rate model disagree on N");
  }
  if (spec.n_sites >= 3) head_c_.emplace(algebra_, spec, Scheme::c, options.frame, options.phase_correction);

  std::optional<RealVector> energies;
  if (options.frame == Frame::lab) {
    energies = RealVector(basis.energies.array() + spec.omega.value());
  }
  if (options.engine == Engine::exact && options.representation != Representation::mode) {
    throw std::invalid_argument("the exact engine needs the mode representation");
  }
  if (options.representation == Representation::mode) {
    generator_ = std::make_unique<ModeLiouvillian>(rates, energies);
  } else {
    std::optional<SpinOperator> h;
    if (energies) h = algebra_.quadratic_hamiltonian(*energies);
    generator_ = std::make_unique<SparseLiouvillian>(rates, algebra_.modes(), h ? &*h : nullptr);
  }
}

const DecodeHead& TransferSetup::head(Scheme scheme) const {
  if (scheme == Scheme::a) return head_a_;
  if (!head_c_) throw std::invalid_argument("scheme (c) needs at least 3 sites");
  return *head_c_;
}

EvolveResult TransferSetup::propagate(const ComplexMatrix& x0, double t) const {
  if (options_.engine == Engine::exact) {
    EvolveResult r;
    r.state = static_cast<const ModeLiouvillian&>(*generator_).propagate_exact(x0, t);
    return r;
  }
  return evolve(x0, t, *generator_, options_.step);
}

ChannelResult extract_channel(const TransferSetup& setup, Scheme scheme, std::optional<double> t) {
  const double time = t.value_or(setup.spec().transfer_time);
  const DecodeHead& head = setup.head(scheme);
  ChannelResult result;
  Eigen::Matrix4d lambda;
  for (Pauli in : kPaulis) {
    const EvolveResult ev = setup.propagate(encode_operator(setup.algebra(), scheme, in), time);
    result.steps += ev.steps;
    for (const auto& w : ev.warnings) result.warnings.push_back(w);
    for (Pauli out : kPaulis) lambda(static_cast<int>(out), static_cast<int>(in)) = head.overlap(ev.state, out);
    if (in == Pauli::I) result.evolved_identity = ev.state;
  }
  // Trace preservation pins the first row; anything else is integration error.
  const double row_error = (lambda.row(0) - Eigen::RowVector4d(1, 0, 0, 0)).cwiseAbs().maxCoeff();
  if (row_error > 1e-8) {
    result.warnings.push_back("logical channel not trace preserving: first-row error " + std::to_string(row_error));
  }
  lambda.row(0) << 1.0, 0.0, 0.0, 0.0;
  result.map.lambda = lambda;
  return result;
}

ChannelResult transfer_channel(const ChainSpec& spec, const ModeBasis& basis, const RateModel& rates,
                               Scheme scheme, const TransferOptions& options) {
  const TransferSetup setup(spec, basis, rates, options);
  return extract_channel(setup, scheme);
}

double average_fidelity(const PauliTransferMap& map) {
  return 0.5 + (map.lambda(1, 1) + map.lambda(2, 2) + map.lambda(3, 3)) / 6.0;
}

Eigen::Vector3d apply_map(const PauliTransferMap& map, const Eigen::Vector3d& r) {
  Eigen::Vector4d in(1.0, r.x(), r.y(), r.z());
  const Eigen::Vector4d out = map.lambda * in;
  return out.tail<3>();
}

double pure_state_fidelity(const PauliTransferMap& map, const Eigen::Vector3d& r) {
  return 0.5 * (1.0 + r.dot(apply_map(map, r)));
}

double axis_average_fidelity(const PauliTransferMap& map) {
  double sum = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    for (double s : {1.0, -1.0}) {
      Eigen::Vector3d r = Eigen::Vector3d::Zero();
      r(axis) = s;
      sum += pure_state_fidelity(map, r);
    }
  }
  return sum / 6.0;
}

double haar_average_fidelity(const PauliTransferMap& map, int samples, std::mt19937_64& rng) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  std::normal_distribution<double> normal;
  double sum = 0.0;
  for (int i = 0; i < samples; ++i) {
    // Haar-random qubit states are uniform on the Bloch sphere.
    Eigen::Vector3d r(normal(rng), normal(rng), normal(rng));
    r.normalize();
    sum += pure_state_fidelity(map, r);
  }
  return sum / samples;
}

}  // namespace qwire
