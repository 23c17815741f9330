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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trianneal/compiler.hpp"
#include "trianneal/model.hpp"

namespace trianneal {

/// Largest physical register spectrum_equivalence and minimal_penalty enumerate.
inline constexpr int kMaxPhysicalEnumeration = 24;

/// Resolution of the minimal-penalty bisection.
inline constexpr double kPenaltyResolution = 1e-3;

enum class DecodePolicy { strict, majority_vote };

/// Chain i holds eta_i = x_i XOR x_k*; the sign chain (if present) holds x_k*.
std::vector<std::uint8_t> encode(const Assignment& logical, const CompiledModel& compiled);

struct DecodeResult {
  std::optional<Assignment> assignment;  ///< empty when infeasible
  std::vector<int> broken_chains;        ///< chain variables; the sign chain reports k*

  bool feasible() const noexcept { return assignment.has_value(); }
};

/// Reads each chain by unanimity (strict) or majority with ties to bit 0.
/// Without a sign chain, x_k* is fixed to 0 as the representative of the
/// global-flip pair.
DecodeResult decode(const std::vector<std::uint8_t>& physical, const CompiledModel& compiled,
                    DecodePolicy policy = DecodePolicy::strict);

struct EquivalenceReport {
  std::uint64_t feasible_count = 0;
  std::uint64_t expected_feasible_count = 0;
  double energy_max_abs_error = 0.0;
  bool energies_ok = false;
  bool bijection_ok = false;
  bool low_spectrum_ok = false;
  double penalty_used = 0.0;
  double max_feasible_energy = 0.0;
  std::optional<double> min_infeasible_energy;

  bool passed() const noexcept { return energies_ok && bijection_ok && low_spectrum_ok; }
};

/// Exhaustive check over all 2^n physical states:
///  (a) zero-penalty states are exactly the encode images,
///  (b) their energies equal the logical energies,
///  (c) every feasible energy lies strictly below every infeasible one.
EquivalenceReport spectrum_equivalence(const LogicalIsing& model, const CompiledModel& compiled,
                                       double penalty);

enum class PenaltyCriterion { ground_only, full_low_spectrum };

std::string to_string(PenaltyCriterion c);
PenaltyCriterion parse_penalty_criterion(const std::string& text);

/// Smallest J_P in [0, default_penalty] (to 1e-3) meeting the criterion.
double minimal_penalty(const LogicalIsing& model, const CompiledModel& compiled,
                       PenaltyCriterion criterion);

/// Precomputed per-state problem energy and broken-link count of a compiled
/// model. Evaluating a criterion at a new J_P is a single linear pass.
class PhysicalEnumeration {
 public:
  PhysicalEnumeration(const LogicalIsing& model, const CompiledModel& compiled);

  bool low_spectrum_contained(double penalty) const;
  bool ground_states_logical(double penalty) const;
  bool criterion(PenaltyCriterion c, double penalty) const;

  double max_feasible_energy() const noexcept { return max_feasible_; }
  std::uint64_t feasible_count() const noexcept { return feasible_count_; }
  const std::vector<double>& problem_energies() const noexcept { return problem_; }
  const std::vector<std::uint8_t>& broken_links() const noexcept { return broken_; }

 private:
  const CompiledModel& compiled_;
  std::vector<double> problem_;
  std::vector<std::uint8_t> broken_;
  double max_feasible_ = 0.0;
  double logical_ground_ = 0.0;
  std::uint64_t feasible_count_ = 0;
};

}  // namespace trianneal
