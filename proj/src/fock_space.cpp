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

#include "qwire/fock_space.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qwire {
namespace {

void require_same_space(const SpinOperator& a, const SpinOperator& b) {
  if (a.n_sites != b.n_sites) {
    throw std::invalid_argument("operators act on different chain lengths (" +
                                std::to_string(a.n_sites) + " vs " + std::to_string(b.n_sites) + ")");
  }
}

void require_index(int i, int n, const char* what) {
  if (i < 1 || i > n) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n));
  }
}

SpinOperator linear_combination(const RealMatrix& coeffs, int row, const std::vector<SpinOperator>& ops) {
  SpinOperator out{ops.front().n_sites, SparseMatrix(ops.front().matrix.rows(), ops.front().matrix.cols())};
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const double w = coeffs(row, static_cast<Eigen::Index>(j));
    if (w != 0.0) out.matrix += cplx(w) * ops[j].matrix;
  }
  out.matrix.prune(cplx(0.0));
  return out;
}

}  // namespace

SpinOperator operator*(const SpinOperator& a, const SpinOperator& b) {
  require_same_space(a, b);
  return {a.n_sites, SparseMatrix(a.matrix * b.matrix)};
}

SpinOperator operator+(const SpinOperator& a, const SpinOperator& b) {
  require_same_space(a, b);
  return {a.n_sites, SparseMatrix(a.matrix + b.matrix)};
}

SpinOperator operator-(const SpinOperator& a, const SpinOperator& b) {
  require_same_space(a, b);
  return {a.n_sites, SparseMatrix(a.matrix - b.matrix)};
}

SpinOperator operator*(cplx s, const SpinOperator& a) { return {a.n_sites, SparseMatrix(s * a.matrix)}; }

SpinOperator identity_operator(int n_sites) {
  const auto dim = std::int64_t{1} << n_sites;
  SparseMatrix m(dim, dim);
  m.setIdentity();
  return {n_sites, m};
}

SpinOperator anticommutator(const SpinOperator& a, const SpinOperator& b) { return a * b + b * a; }

SpinOperator commutator(const SpinOperator& a, const SpinOperator& b) { return a * b - b * a; }

SpinOperator jordan_wigner_annihilator(int index, int count) {
  require_index(index, count, "fermion");
  const auto dim = std::int64_t{1} << count;
  const std::uint64_t bit = std::uint64_t{1} << (index - 1);
  const std::uint64_t lower = bit - 1;
  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(static_cast<std::size_t>(dim / 2));
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim); ++s) {
    if ((s & bit) == 0) continue;
    const double sign = (std::popcount(s & lower) % 2 == 0) ? 1.0 : -1.0;
    entries.emplace_back(static_cast<int>(s ^ bit), static_cast<int>(s), sign);
  }
  SparseMatrix m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  return {count, m};
}

SpinOperator site_annihilator(int i, int n_sites) { return jordan_wigner_annihilator(i, n_sites); }

SpinOperator mode_annihilator(const ModeBasis& basis, int k) {
  const int n = basis.size();
  require_index(k, n, "mode");
  std::vector<SpinOperator> sites;
  for (int j = 1; j <= n; ++j) sites.push_back(site_annihilator(j, n));
  return linear_combination(basis.modes, k - 1, sites);
}

SpinOperator build_full_hamiltonian(const ChainSpec& spec, const ModeBasis& basis) {
  spec.validate();
  if (basis.size() != spec.n_sites) throw std::invalid_argument("mode basis does not match chain length");
  const FermionAlgebra algebra(basis, Representation::site);
  RealVector eps = basis.energies.array() + spec.omega.value();
  return algebra.quadratic_hamiltonian(eps);
}

SpinOperator embed_site_matrix(const Eigen::Matrix2cd& m, int site, int n_sites) {
  require_index(site, n_sites, "site");
  // Kronecker order: site n_sites is the most significant factor.
  SparseMatrix out(1, 1);
  out.insert(0, 0) = 1.0;
  for (int s = n_sites; s >= 1; --s) {
    Eigen::Matrix2cd factor = (s == site) ? m : Eigen::Matrix2cd::Identity();
    SparseMatrix next(out.rows() * 2, out.cols() * 2);
    std::vector<Eigen::Triplet<cplx>> entries;
    for (int k = 0; k < out.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(out, k); it; ++it) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            if (factor(a, b) == cplx(0.0)) continue;
            entries.emplace_back(static_cast<int>(it.row() * 2 + a), static_cast<int>(it.col() * 2 + b),
                                 it.value() * factor(a, b));
          }
        }
      }
    }
    next.setFromTriplets(entries.begin(), entries.end());
    out = std::move(next);
  }
  return {n_sites, out};
}

SpinOperator build_spin_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  // Single-site states ordered (|0>, |1>); sigma^+ lowers 1 -> 0.
  Eigen::Matrix2cd lower, raise, sz;
  lower << 0, 1, 0, 0;
  raise << 0, 0, 1, 0;
  sz << 1, 0, 0, -1;
  SpinOperator h{n, SparseMatrix(std::int64_t{1} << n, std::int64_t{1} << n)};
  for (int i = 1; i < n; ++i) {
    const double w = spec.coupling * std::sqrt(static_cast<double>(i) * (n - i));
    const SpinOperator hop = embed_site_matrix(lower, i, n) * embed_site_matrix(raise, i + 1, n) +
                             embed_site_matrix(raise, i, n) * embed_site_matrix(lower, i + 1, n);
    h = h + cplx(w) * hop;
  }
  if (!spec.omega.is_infinite() && spec.omega.value() != 0.0) {
    for (int i = 1; i <= n; ++i) {
      h = h + cplx(spec.omega.value() / 2.0) * (identity_operator(n) - embed_site_matrix(sz, i, n));
    }
  } else if (spec.omega.is_infinite()) {
    throw std::invalid_argument("spin Hamiltonian needs a finite omega");
  }
  h.matrix.prune(cplx(0.0));
  return h;
}

FermionAlgebra::FermionAlgebra(const ModeBasis& basis, Representation rep)
    : n_(basis.size()), rep_(rep), basis_(basis) {
  if (n_ < 1 || n_ > 16) throw std::invalid_argument("fermion algebra supports 1..16 modes");
  std::vector<SpinOperator> strings;
  for (int j = 1; j <= n_; ++j) strings.push_back(jordan_wigner_annihilator(j, n_));
  if (rep_ == Representation::site) {
    sites_ = strings;
    for (int k = 0; k < n_; ++k) modes_.push_back(linear_combination(basis_.modes, k, sites_));
  } else {
    modes_ = strings;
    // a_j = sum_k b_kj c_k, i.e. row j of b^T.
    const RealMatrix bt = basis_.modes.transpose();
    for (int j = 0; j < n_; ++j) sites_.push_back(linear_combination(bt, j, modes_));
  }
}

const SpinOperator& FermionAlgebra::site(int j) const {
  require_index(j, n_, "site");
  return sites_[static_cast<std::size_t>(j - 1)];
}

const SpinOperator& FermionAlgebra::mode(int k) const {
  require_index(k, n_, "mode");
  return modes_[static_cast<std::size_t>(k - 1)];
}

ComplexVector FermionAlgebra::vacuum() const {
  ComplexVector v = ComplexVector::Zero(dim());
  v(0) = 1.0;
  return v;
}

RealVector FermionAlgebra::mode_energy_diagonal(const RealVector& mode_energies) const {
  if (rep_ != Representation::mode) {
    throw std::logic_error("mode energies are diagonal only in the mode representation");
  }
  if (mode_energies.size() != n_) throw std::invalid_argument("mode energy vector has wrong length");
  RealVector diag(dim());
  for (std::int64_t s = 0; s < dim(); ++s) {
    double e = 0.0;
    for (int k = 0; k < n_; ++k) {
      if ((s >> k) & 1) e += mode_energies(k);
    }
    diag(s) = e;
  }
  return diag;
}

SpinOperator FermionAlgebra::quadratic_hamiltonian(const RealVector& mode_energies) const {
  if (mode_energies.size() != n_) throw std::invalid_argument("mode energy vector has wrong length");
  SpinOperator h{n_, SparseMatrix(dim(), dim())};
  for (int k = 1; k <= n_; ++k) {
    h = h + cplx(mode_energies(k - 1)) * (mode(k).adjoint() * mode(k));
  }
  h.matrix.prune(cplx(0.0), 1e-14);
  return h;
}

}  // namespace qwire
