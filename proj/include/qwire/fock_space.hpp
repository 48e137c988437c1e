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

#include <cstdint>
#include <vector>

#include <Eigen/Sparse>

#include "qwire/chain_model.hpp"

namespace qwire {

using SparseMatrix = Eigen::SparseMatrix<cplx>;

// Basis convention: computational states are indexed by bit strings, bit (j-1)
// of the index is the occupation of site j (1 = flipped / excited). Index 0 is
// the vacuum. Site 1 is the least significant bit, so a_1 carries no string.

/// Operator on the 2^N dimensional spin space.
struct SpinOperator {
  int n_sites = 0;
  SparseMatrix matrix;

  std::int64_t dim() const { return std::int64_t{1} << n_sites; }
  ComplexMatrix dense() const { return ComplexMatrix(matrix); }
  SpinOperator adjoint() const { return {n_sites, SparseMatrix(matrix.adjoint())}; }
};

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b);
SpinOperator operator+(const SpinOperator& a, const SpinOperator& b);
SpinOperator operator-(const SpinOperator& a, const SpinOperator& b);
SpinOperator operator*(cplx s, const SpinOperator& a);

SpinOperator identity_operator(int n_sites);
SpinOperator anticommutator(const SpinOperator& a, const SpinOperator& b);
SpinOperator commutator(const SpinOperator& a, const SpinOperator& b);

/// Jordan-Wigner annihilator for fermion `index` (1-based) of `count` modes:
/// (prod_{j<index} sigma^z_j) sigma^+_index, sigma^+ lowering the occupation.
SpinOperator jordan_wigner_annihilator(int index, int count);

/// a_i on the site basis.
SpinOperator site_annihilator(int i, int n_sites);

/// c_k = sum_j b_kj a_j on the site basis.
SpinOperator mode_annihilator(const ModeBasis& basis, int k);

/// H = sum_k (E_k + omega) c_k^dag c_k on the site basis. Requires finite omega.
SpinOperator build_full_hamiltonian(const ChainSpec& spec, const ModeBasis& basis);

/// Spin-form Hamiltonian built from Kronecker products of single-site matrices,
/// without any fermionic machinery:
/// sum_i J sqrt(i(N-i)) (s+_i s-_{i+1} + s-_i s+_{i+1}) + omega/2 sum_i (1 - sz_i).
SpinOperator build_spin_hamiltonian(const ChainSpec& spec);

/// Single-site Pauli-type matrix embedded at `site` (1-based) by Kronecker products.
SpinOperator embed_site_matrix(const Eigen::Matrix2cd& m, int site, int n_sites);

/// Which Fock basis the algebra is represented on. Both are faithful
/// representations of the same CAR algebra with the same vacuum (index 0); they
/// are related by the Gaussian unitary that maps site occupations to mode
/// occupations. Traces and expectation values agree between them.
enum class Representation { site, mode };

/// Site and mode annihilators of one chain in one representation. In the site
/// representation the a_j are Jordan-Wigner strings and c_k = sum_j b_kj a_j; in
/// the mode representation the c_k are strings and a_j = sum_k b_kj c_k.
class FermionAlgebra {
 public:
  FermionAlgebra(const ModeBasis& basis, Representation rep);

  int n_sites() const { return n_; }
  std::int64_t dim() const { return std::int64_t{1} << n_; }
  Representation representation() const { return rep_; }
  const ModeBasis& basis() const { return basis_; }

  /// 1-based.
  const SpinOperator& site(int j) const;
  const SpinOperator& mode(int k) const;
  const std::vector<SpinOperator>& modes() const { return modes_; }

  ComplexVector vacuum() const;
  /// Diagonal of sum_k eps_k c_k^dag c_k in the mode representation; throws in
  /// the site representation (the Hamiltonian is not diagonal there).
  RealVector mode_energy_diagonal(const RealVector& mode_energies) const;
  /// sum_k eps_k c_k^dag c_k, valid in either representation.
  SpinOperator quadratic_hamiltonian(const RealVector& mode_energies) const;

 private:
  int n_;
  Representation rep_;
  ModeBasis basis_;
  std::vector<SpinOperator> sites_;
  std::vector<SpinOperator> modes_;
};

}  // namespace qwire
