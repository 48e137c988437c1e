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

#include <array>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qwire/dynamics.hpp"

namespace qwire {

/// (a): logical {|vac>, a_1^+|vac>}. (c): logical {a_1^+|vac>, a_2^+|vac>}.
enum class Scheme { a, c };
enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

std::string to_string(Scheme scheme);
Eigen::Matrix2cd pauli_matrix(Pauli p);

/// Encoding scheme plus the sites it writes to and reads from.
struct Encoding {
  Scheme scheme;
  std::vector<int> encode_sites;
  std::vector<int> decode_sites;

  /// Throws for scheme (c) on fewer than 3 sites.
  static Encoding make(Scheme scheme, int n_sites);
};

/// Where the dissipative evolution is computed. `interaction`: free evolution
/// removed, decode head transported back through the single-particle
/// propagator (no omega phases). `lab`: commutator switched on (finite omega
/// only), decode head at the mirror sites.
enum class Frame { interaction, lab };

/// `exact` uses the factorized mode propagator and needs the mode representation.
enum class Engine { rk4, exact };

struct TransferOptions {
  Frame frame = Frame::interaction;
  Engine engine = Engine::rk4;
  Representation representation = Representation::mode;
  /// Receiver removes the known mirror phase of the single-particle amplitude.
  bool phase_correction = true;
  StepControl step;
};

/// Logical Pauli transfer matrix in the basis (I, sx, sy, sz); column j is
/// the image of input Pauli j.
struct PauliTransferMap {
  Eigen::Matrix4d lambda = Eigen::Matrix4d::Identity();

  double operator()(Pauli out, Pauli in) const {
    return lambda(static_cast<int>(out), static_cast<int>(in));
  }
};

/// Image of a logical Pauli on the 2^N space.
ComplexMatrix encode_operator(const FermionAlgebra& algebra, Scheme scheme, Pauli pauli);

/// Encoded logical pure state alpha|0> + beta|1>.
ComplexVector encode_state(const FermionAlgebra& algebra, Scheme scheme, cplx alpha, cplx beta);

/// Read-out head: observables whose expectation values in the wire state are the
/// Pauli expectations of the output qubit. In scheme (c) the aligned pair states
/// read as a maximally mixed qubit (zero X, Y, Z; full weight in I).
class DecodeHead {
 public:
  DecodeHead(const FermionAlgebra& algebra, const ChainSpec& spec, Scheme scheme, Frame frame,
             bool phase_correction);

  Scheme scheme() const { return scheme_; }
  /// Annihilators read by the head: logical |0>-site and (scheme c) |1>-site,
  /// expressed in the evolution frame.
  const SpinOperator& primary() const { return d1_; }
  const SpinOperator& secondary() const;
  const SpinOperator& observable(Pauli p) const { return observables_[static_cast<std::size_t>(p)]; }
  /// Phase the receiver multiplies the read-out annihilator by.
  cplx correction() const { return correction_; }

  /// Pauli-basis coefficient 1/2 Tr[D(pauli) evolved].
  double overlap(const ComplexMatrix& evolved, Pauli pauli) const;
  /// Output Bloch vector (x, y, z) for a decoded wire state.
  Eigen::Vector3d bloch(const ComplexMatrix& wire_state) const;

 private:
  Scheme scheme_;
  SpinOperator d1_;
  std::optional<SpinOperator> d2_;
  cplx correction_ = 1.0;
  std::array<SpinOperator, 4> observables_;
};

/// 1/2 Tr[D(pauli) evolved] for a head built with default options.
double decode_overlap(const DecodeHead& head, const ComplexMatrix& evolved, Pauli pauli);

/// Everything needed to push operators through one transfer: algebra, encoders,
/// decode heads and the generator. Immutable after construction.
class TransferSetup {
 public:
  TransferSetup(const ChainSpec& spec, const ModeBasis& basis, const RateModel& rates,
                const TransferOptions& options = {});

  const ChainSpec& spec() const { return spec_; }
  const FermionAlgebra& algebra() const { return algebra_; }
  const TransferOptions& options() const { return options_; }
  const DecodeHead& head(Scheme scheme) const;

  /// Evolve an operator for time t with the configured engine.
  EvolveResult propagate(const ComplexMatrix& x0, double t) const;

 private:
  ChainSpec spec_;
  RateModel rates_;
  TransferOptions options_;
  FermionAlgebra algebra_;
  DecodeHead head_a_;
  std::optional<DecodeHead> head_c_;
  std::unique_ptr<Generator> generator_;
};

struct ChannelResult {
  PauliTransferMap map;
  /// Evolved image of the encoded logical identity.
  ComplexMatrix evolved_identity;
  std::int64_t steps = 0;
  std::vector<std::string> warnings;
};

/// Encode the four Paulis, evolve for time t (the transfer time by default) and
/// decode.
ChannelResult extract_channel(const TransferSetup& setup, Scheme scheme, std::optional<double> t = std::nullopt);

/// One-shot pipeline encode -> evolve(tau) -> decode.
ChannelResult transfer_channel(const ChainSpec& spec, const ModeBasis& basis, const RateModel& rates,
                               Scheme scheme, const TransferOptions& options = {});

/// F = 1/2 + (l_xx + l_yy + l_zz)/6.
double average_fidelity(const PauliTransferMap& map);

/// Output Bloch vector for input Bloch vector r.
Eigen::Vector3d apply_map(const PauliTransferMap& map, const Eigen::Vector3d& r);

/// Fidelity of a pure input with Bloch vector r (unit length).
double pure_state_fidelity(const PauliTransferMap& map, const Eigen::Vector3d& r);

/// Mean fidelity over the six Pauli axis states.
double axis_average_fidelity(const PauliTransferMap& map);

/// Monte-Carlo mean over Haar-random pure inputs.
double haar_average_fidelity(const PauliTransferMap& map, int samples, std::mt19937_64& rng);

}  // namespace qwire
