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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "trianneal/model.hpp"

namespace trianneal {

inline constexpr int kMaxMatrixFreeQubits = 24;
inline constexpr int kMaxDenseQubits = 14;

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { X, Y, Z };

/// Weighted Pauli word, e.g. 0.5 * X0 Z3.
struct PauliTerm {
  std::map<int, Pauli> sites;
  double coefficient = 0.0;
};

/// Real linear combination of Pauli words on n qubits. Qubit q is bit q of
/// the basis-state index, and Z|0> = |0>.
struct OperatorSpec {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;

  OperatorSpec() = default;
  explicit OperatorSpec(int n) : n_qubits(n) {}

  OperatorSpec& add(std::map<int, Pauli> sites, double coefficient);
  OperatorSpec& x(int q, double c) { return add({{q, Pauli::X}}, c); }
  OperatorSpec& z(int q, double c) { return add({{q, Pauli::Z}}, c); }
  OperatorSpec& zz(int p, int q, double c) { return add({{p, Pauli::Z}, {q, Pauli::Z}}, c); }
  OperatorSpec& xx(int p, int q, double c) { return add({{p, Pauli::X}, {q, Pauli::X}}, c); }

  void validate() const;
};

OperatorSpec operator+(const OperatorSpec& a, const OperatorSpec& b);
OperatorSpec operator*(double s, const OperatorSpec& a);

/// sum_i h_i Z_i + sum_{i<j} J_ij Z_i Z_j.
OperatorSpec ising_operator(const LogicalIsing& model);

/// -sum_q X_q.
OperatorSpec standard_driver(int n_qubits);

/// Product of X over `sites` (coefficient 1).
OperatorSpec x_string(int n_qubits, const std::vector<int>& sites);

/// Matrix-free operator compiled from an OperatorSpec. Diagonal words are
/// summed into a table; off-diagonal words are grouped by flip mask.
/// Immutable once built.
class Operator {
 public:
  explicit Operator(const OperatorSpec& spec);

  /// a A + b B without rebuilding from specs.
  static Operator combine(double a, const Operator& A, double b, const Operator& B);

  int n_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return dim_; }
  /// False when some word carries an odd number of Y factors.
  bool is_real() const noexcept { return real_; }
  bool is_diagonal() const noexcept { return groups_.empty(); }
  const std::vector<double>& diagonal() const noexcept { return diag_; }

  void apply(const Eigen::VectorXd& in, Eigen::VectorXd& out) const;
  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;

  /// Column-by-column dense matrix (n <= kMaxDenseQubits).
  Eigen::MatrixXcd dense() const;

 private:
  Operator() = default;

  struct Phase {
    std::uint64_t sign_mask = 0;  ///< bits whose value 1 contributes -1
    Complex coefficient;          ///< includes the i^{#Y} factor
  };
  struct FlipGroup {
    std::uint64_t flip = 0;
    std::vector<Phase> phases;
  };

  template <class Scalar>
  void apply_impl(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& in,
                  Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& out) const;

  int n_ = 0;
  std::size_t dim_ = 0;
  bool real_ = true;
  std::vector<double> diag_;
  std::vector<FlipGroup> groups_;
};

}  // namespace trianneal
