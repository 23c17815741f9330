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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trianneal/model.hpp"

namespace trianneal {

inline constexpr int kMaxDegree = 3;

/// A triad (a, k*, b) with internal labels l0 = a, l1 = k*, l2 = b.
/// q0 carries the parity of edge (a, k*), q1 that of (b, k*); their product
/// carries edge (a, b), the one edge no other cell shares.
struct TriangleCell {
  int a = 0;
  int k_star = 0;
  int b = 0;
  double j_ab = 0.0;
  double j_a_kstar = 0.0;
  double j_b_kstar = 0.0;
  double f_a = 0.0;
  double f_b = 0.0;
  int q0 = -1;
  int q1 = -1;

  friend bool operator==(const TriangleCell&, const TriangleCell&) = default;
};

/// One triad per unordered pair {a, b} of [0, N) minus k*, ordered by (b, a):
/// row r of the layout holds the cells whose larger index is the r-th
/// non-selected node.
std::vector<std::array<int, 3>> decompose(int n_spins, int k_star);

struct CellZ2Solution {
  double h_q0 = 0.0;
  double h_q1 = 0.0;
  double j_pair = 0.0;
  double constant = 0.0;
};

/// Two-qubit Hamiltonian h0 Z0 + h1 Z1 + J Z0 Z1 reproducing the four
/// energy classes of one triangle, found by solving the 4x4 system over the
/// class representatives.
CellZ2Solution solve_cell_z2(double j_ab, double j_a_kstar, double j_b_kstar);

/// Coefficients of the three-qubit cell (q0, q1, sign qubit q2).
struct CellFieldSolution {
  double constant = 0.0;
  std::array<double, 3> field{};  ///< Z_q0, Z_q1, Z_q2
  double j01 = 0.0;
  double j02 = 0.0;
  double j12 = 0.0;
  double triple = 0.0;  ///< Z_q0 Z_q1 Z_q2; zero unless k* carries a field
};

/// Solves the 8x8 system over the signed encoding (q2 = overall parity of
/// l0 l1 l2). `f_kstar` exists for diagnostics; any non-zero value forces a
/// three-body term and is rejected.
CellFieldSolution solve_cell_fields(double j_ab, double j_a_kstar, double j_b_kstar,
                                    double f_a, double f_b, double f_kstar = 0.0);

/// Raw 8x8 solve: coefficients for the logical energies of the eight
/// configurations in table order (q0 q1 q2 = 000, 001, 010, ... , 111).
CellFieldSolution solve_cell_table(const std::array<double, 8>& energies);

enum class QubitRole { chain, sign };
enum class CouplerKind { problem, penalty, field };

std::string to_string(QubitRole role);
std::string to_string(CouplerKind kind);

struct Qubit {
  int id = 0;
  QubitRole role = QubitRole::chain;
  int variable = 0;  ///< chain variable; k* for the sign chain
  double local_field = 0.0;

  friend bool operator==(const Qubit&, const Qubit&) = default;
};

struct Coupler {
  int u = 0;
  int v = 0;
  CouplerKind kind = CouplerKind::problem;
  double strength = 0.0;

  friend bool operator==(const Coupler&, const Coupler&) = default;
};

struct HardwareGraph {
  std::vector<Qubit> qubits;
  std::vector<Coupler> couplers;

  std::vector<int> degrees() const;
  friend bool operator==(const HardwareGraph&, const HardwareGraph&) = default;
};

struct ChainSet {
  std::map<int, std::vector<int>> chains;  ///< variable -> qubits in path order
  std::vector<int> sign_chain;             ///< empty for Z2 compilation
  int sign_variable = 0;                   ///< k*

  /// Every chain, the sign chain last (if present).
  std::vector<std::vector<int>> all_paths() const;
  friend bool operator==(const ChainSet&, const ChainSet&) = default;
};

/// H_p = sum_q h_q Z_q + sum_{uv} J_uv Z_u Z_v + J_P sum_links (1 - Z_u Z_v)
///       + constant_offset.
struct PhysicalHamiltonian {
  int n_qubits = 0;
  std::map<int, double> fields;
  std::map<std::pair<int, int>, double> two_local;  ///< problem and field couplers
  std::set<std::pair<int, int>> penalties;
  double constant_offset = 0.0;

  double problem_energy(std::uint64_t state) const noexcept;
  int broken_links(std::uint64_t state) const noexcept;
  double energy(std::uint64_t state, double penalty) const noexcept;
  double energy(const std::vector<std::uint8_t>& bits, double penalty) const;

  friend bool operator==(const PhysicalHamiltonian&, const PhysicalHamiltonian&) = default;
};

enum class FieldMode { automatic, z2, fields };

struct CompiledModel {
  int n_logical = 0;
  int k_star = 0;
  bool with_fields = false;
  double penalty = 0.0;
  HardwareGraph graph;
  PhysicalHamiltonian hamiltonian;
  ChainSet chains;
  std::vector<TriangleCell> cells;

  int n_qubits() const noexcept { return hamiltonian.n_qubits; }
  friend bool operator==(const CompiledModel&, const CompiledModel&) = default;
};

/// 2 (sum |J| + sum |h|), or 1 for an all-zero model.
double default_penalty(const LogicalIsing& model);

/// Compiles a model onto the triangle architecture. A missing penalty means
/// default_penalty(model).
CompiledModel compile(const LogicalIsing& model, int k_star,
                      std::optional<double> penalty = std::nullopt,
                      FieldMode mode = FieldMode::automatic);

struct ValidationReport {
  bool passed = true;
  int max_degree = 0;
  std::map<int, int> degree_histogram;  ///< degree -> qubit count
  bool chains_are_paths = true;
  bool penalty_uniform = true;
  bool connected = true;
  std::vector<int> offending_qubits;
  std::vector<std::string> failures;
};

ValidationReport validate_architecture(const HardwareGraph& graph);

struct CouplerCounts {
  int problem = 0;
  int penalty = 0;
  int field = 0;
  int total() const noexcept { return problem + penalty + field; }
};

/// Closed-form predictions next to the counts this compiler produces.
struct ResourceCounts {
  int n_spins = 0;
  bool with_fields = false;
  long n_predicted = 0;
  std::optional<long> couplers_predicted;  ///< N(3N-5)/2, stated for the fields layout
  std::optional<long> ferro_predicted;     ///< N(N-2), stated for the fields layout
  int n_actual = 0;
  CouplerCounts actual;
  bool qubits_match = false;
  /// Mismatches against the coupler formulas are reported, not raised; the
  /// stated total is incompatible with degree 3 at n = N(N-2) qubits.
  bool couplers_match = false;
  bool ferro_match = false;
};

ResourceCounts resource_counts(int n_spins, bool with_fields);

}  // namespace trianneal
