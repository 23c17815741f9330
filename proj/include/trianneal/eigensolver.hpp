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
#include <cstdint>
#include <optional>
#include <vector>

#include "trianneal/operator.hpp"

namespace trianneal {

/// Eigenspace of a global X-string symmetry: states with
/// X_mask |psi> = parity |psi>.
struct Sector {
  std::uint64_t flip_mask = 0;
  int parity = 1;

  /// Even sector of the X string over all n qubits.
  static Sector even(int n_qubits) { return {(std::uint64_t{1} << n_qubits) - 1, 1}; }
};

enum class EigenMethod { automatic, lanczos, dense };

struct EigenOptions {
  int k = 1;
  bool vectors = false;
  std::optional<Sector> sector;
  EigenMethod method = EigenMethod::automatic;
  /// Residual ||H v - theta v|| accepted per unit max(1, |theta|).
  double tolerance = 1e-9;
  int krylov_dimension = 100;
  int max_restarts = 300;
  std::uint64_t seed = 0x5eed;
  /// Optional start vector for the first Lanczos pass (e.g. a nearby ground
  /// state in a parameter sweep).
  const Eigen::VectorXcd* start = nullptr;
};

struct EigenResult {
  std::vector<double> values;             ///< ascending
  std::vector<Eigen::VectorXcd> vectors;  ///< filled when requested
  std::vector<double> residuals;
  EigenMethod method_used = EigenMethod::lanczos;
};

/// The k lowest eigenvalues. Lanczos with full reorthogonalization, explicit
/// restarts and locking, so degenerate levels are returned with their
/// multiplicity. Falls back to dense diagonalization (n <= 14) if the
/// iteration stalls.
EigenResult lowest_eigenpairs(const Operator& op, const EigenOptions& options);

/// Smallest spacing E1 - E0 between distinct levels (tolerance 1e-9),
/// requesting more eigenvalues while the bottom of the spectrum is degenerate.
struct GapResult {
  double ground_energy = 0.0;
  double first_excited = 0.0;
  double gap = 0.0;
  Eigen::VectorXcd ground_state;
};

GapResult distinct_gap(const Operator& op, EigenOptions options);

/// Projects v onto the sector, in place.
void project_sector(Eigen::VectorXcd& v, const Sector& sector);

/// Number of basis states spanning the sector.
std::size_t sector_dimension(std::size_t dim, const std::optional<Sector>& sector);

}  // namespace trianneal
