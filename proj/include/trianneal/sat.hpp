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
#include <utility>
#include <vector>

#include "trianneal/model.hpp"

namespace trianneal {

inline constexpr int kMaxSatVariables = 12;
inline constexpr double kClauseRatio = 4.26;

/// One disjunction of three literals over distinct variables. A variable is
/// true when its bit is 1.
struct Clause {
  std::array<int, 3> variables{};
  std::array<bool, 3> negated{};

  bool satisfied(std::uint64_t state) const noexcept;
};

/// A 3-SAT formula with exactly one satisfying assignment, reduced to a
/// 2-local Ising model over the problem variables followed by ancilla spins.
///
/// Cubic monomials of the clause-violation polynomial are reduced by pair
/// substitution: an ancilla z stands for the product of two problem bits and
/// is pinned by M (x_a x_b - 2 x_a z - 2 x_b z + 3 z), with M larger than the
/// total weight routed through z. With correct ancillas the model energy plus
/// `offset` equals the number of violated clauses; any wrong ancilla costs at
/// least one extra unit.
struct Unique3Sat {
  int n_vars = 0;
  std::vector<Clause> clauses;
  std::vector<std::pair<int, int>> ancilla_pairs;  ///< ancilla k stands for x_a x_b
  LogicalIsing model{1};
  double offset = 0.0;
  Assignment solution;  ///< n_vars bits

  int n_ancillas() const noexcept { return static_cast<int>(ancilla_pairs.size()); }
  int violations(std::uint64_t variable_state) const noexcept;
  /// Full model configuration for `variables` with every ancilla consistent.
  Assignment with_ancillas(const Assignment& variables) const;
};

/// Number of satisfying assignments by enumeration (n_vars <= 20).
std::uint64_t count_solutions(int n_vars, const std::vector<Clause>& clauses);

/// Rejection-samples round(4.26 n) random clauses until exactly one
/// assignment satisfies them, then builds the Ising reduction.
Unique3Sat unique_3sat_instance(int n_vars, std::uint64_t seed,
                                int max_attempts = 100000);

/// Ising reduction of an arbitrary clause list (no uniqueness requirement).
Unique3Sat reduce_3sat(int n_vars, std::vector<Clause> clauses);

}  // namespace trianneal
