// Copyright 2026 The trianneal Authors
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

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's numerics.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "trianneal/model.hpp"
#include "trianneal/operator.hpp"

namespace oracle {

using Cd = std::complex<double>;

inline Eigen::Matrix2cd pauli(trianneal::Pauli p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case trianneal::Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case trianneal::Pauli::Y:
      m << 0, Cd(0, -1), Cd(0, 1), 0;
      break;
    case trianneal::Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Sum of Kronecker products; qubit q is bit q of the index, so the most
/// significant factor is qubit n-1.
inline Eigen::MatrixXcd kron_dense(const trianneal::OperatorSpec& spec) {
  const int n = spec.n_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : spec.terms) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = n - 1; q >= 0; --q) {
      const auto it = term.sites.find(q);
      const Eigen::MatrixXcd factor =
          it == term.sites.end() ? Eigen::MatrixXcd(Eigen::Matrix2cd::Identity())
                                 : Eigen::MatrixXcd(pauli(it->second));
      m = kron(m, factor);
    }
    total += term.coefficient * m;
  }
  return total;
}

inline std::vector<double> dense_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

/// Ising energy evaluated straight from the coefficient maps.
inline double ising_energy(const trianneal::LogicalIsing& model, std::uint64_t state) {
  auto spin = [&](int i) { return (state >> i & 1u) ? -1.0 : 1.0; };
  double e = 0.0;
  for (const auto& [i, h] : model.fields()) e += h * spin(i);
  for (const auto& [edge, j] : model.couplings()) e += j * spin(edge.first) * spin(edge.second);
  return e;
}

inline std::vector<double> sorted_energies(const trianneal::LogicalIsing& model) {
  std::vector<double> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << model.size()); ++s) {
    out.push_back(ising_energy(model, s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline trianneal::OperatorSpec random_spec(int n, int n_terms, std::mt19937_64& rng,
                                           bool allow_y = true) {
  std::uniform_int_distribution<int> site(0, n - 1);
  std::uniform_int_distribution<int> kind(0, allow_y ? 2 : 1);
  std::uniform_int_distribution<int> arity(1, std::min(n, 3));
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  trianneal::OperatorSpec spec(n);
  for (int t = 0; t < n_terms; ++t) {
    std::map<int, trianneal::Pauli> word;
    const int k = arity(rng);
    while (static_cast<int>(word.size()) < k) {
      const int p = kind(rng);
      word[site(rng)] = p == 0 ? trianneal::Pauli::X
                        : p == 1 ? trianneal::Pauli::Z
                                 : trianneal::Pauli::Y;
    }
    spec.add(word, coef(rng));
  }
  return spec;
}

}  // namespace oracle
