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
#include <string>
#include <vector>

#include "trianneal/compiler.hpp"
#include "trianneal/operator.hpp"

namespace trianneal {

enum class DriverKind { standard, tfim, xyz, ghz };

/// Per-chain driver family. All chains use open boundaries.
///   standard: -sum X_i
///   tfim:     -sum X_i - J_zz sum Z_i Z_{i+1}
///   xyz:      -sum X_i - J_zz sum (Z_i Z_{i+1} + alpha X_i X_{i+1})
///   ghz:      -(prod X_i + Z_{i0} sum_{r>0} Z_{ir})
/// The ghz form carries an l-body term and is for verification only.
struct DriverSpec {
  DriverKind kind = DriverKind::standard;
  double j_zz = 0.0;
  double alpha = 0.0;

  static DriverSpec standard() { return {}; }
  static DriverSpec tfim(double j_zz) { return {DriverKind::tfim, j_zz, 0.0}; }
  static DriverSpec xyz(double j_zz, double alpha) { return {DriverKind::xyz, j_zz, alpha}; }
  static DriverSpec ghz() { return {DriverKind::ghz, 0.0, 0.0}; }

  void validate() const;
};

std::string to_string(DriverKind kind);
DriverKind parse_driver_kind(const std::string& text);

/// Driver on a single chain of l qubits (qubits 0..l-1).
OperatorSpec chain_driver(const DriverSpec& spec, int l);

/// Direct sum of the per-chain driver over every path, on n_qubits qubits.
OperatorSpec layout_driver(const DriverSpec& spec, const std::vector<std::vector<int>>& chains,
                           int n_qubits);
OperatorSpec layout_driver(const DriverSpec& spec, const ChainSet& chains, int n_qubits);

/// Diagonal operator of a compiled model: problem terms, J_P (1 - Z Z) per
/// penalty link, and the constant offset, so its eigenvalues are the
/// physical energies.
OperatorSpec physical_operator(const CompiledModel& compiled, double penalty);

/// Chain-agreement operator sum_c sum_i Z_i Z_{i+1}; its top eigenspace is
/// the logical subspace.
OperatorSpec chain_agreement_operator(const std::vector<std::vector<int>>& chains, int n_qubits);

/// <psi| P_L |psi> with P_L = |0..0><0..0| + |1..1><1..1| on l qubits.
double logical_projection(const Eigen::VectorXcd& state, int l);

/// Spectral-norm estimate of AB - BA by power iteration on its Gram
/// operator (matrix-free).
double commutation_check(const OperatorSpec& a, const OperatorSpec& b, int iterations = 200,
                         std::uint64_t seed = 0xc0de);
double commutation_check(const Operator& a, const Operator& b, int iterations = 200,
                         std::uint64_t seed = 0xc0de);

inline constexpr int kMaxChainLength = 20;
inline constexpr double kParityCommutatorBound = 1e-10;

struct ParitySectorGap {
  double gap = 0.0;
  double ground_energy = 0.0;
  double commutator_norm = 0.0;
};

/// E1 - E0 inside the +1 eigenspace of the X string over the whole chain.
/// Throws ValidationError if the driver does not conserve that parity.
ParitySectorGap parity_sector_gap(const DriverSpec& driver, int l);

}  // namespace trianneal
