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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trianneal/anneal.hpp"
#include "trianneal/model.hpp"

namespace trianneal {

/// Mixed encoding around a selected spin k*: eta_k* = s_k* and
/// eta_j = s_j s_k* for j != k*. The transformed energy function keeps
/// every index in place:
///   h_k*       -> field on eta_k*
///   J_{i,k*}   -> field on eta_i
///   h_i        -> coupling eta_i eta_k*
///   J_ij       -> coupling eta_i eta_j        (i, j != k*)
struct MixedEncoding {
  int k_star = 0;
  LogicalIsing eta_model{1};
};

MixedEncoding eltip_transform(const LogicalIsing& model, int k_star);

/// Basis permutation induced by the variable change; an involution.
Assignment eltip_map_assignment(const Assignment& a, int k_star);

struct HammingShift {
  int before = 0;
  int after = 0;
};

/// Distances before and after mapping both strings. Throws ValidationError
/// if the shift rule fails: strings that agree at k* keep their distance,
/// strings that differ at k* go from N - r to r + 1.
HammingShift hamming_shift_check(const Assignment& a, const Assignment& b, int k_star);

enum class KStarHeuristic {
  coupling_strength,   ///< mean |J| over mean |h| after transforming, descending
  coupling_diversity,  ///< number of distinct |J| values after transforming, descending
};

/// Ordering hint for which k* to try first. Never prunes: always returns a
/// permutation of [0, N).
std::vector<int> rank_kstar(const LogicalIsing& model, KStarHeuristic heuristic);

struct GapRatioRecord {
  std::string instance_id;
  double original_gap = 0.0;
  double original_lambda = 0.0;
  std::map<int, double> kstar_gaps;    ///< k* -> mixed-formulation minimal gap
  std::map<int, double> kstar_lambda;  ///< k* -> location of that minimum
  std::map<int, double> ratios;        ///< k* -> gap_m / gap_o
  double best_ratio = 0.0;
  double worst_ratio = 0.0;
  int best_kstar = -1;
  int worst_kstar = -1;
};

struct MixedScanConfig {
  ScheduleSpec schedule;
  /// k* values to scan; empty means every spin.
  std::vector<int> kstar_candidates;
  /// Restrict gap searches to the sector fixed by any global or single-spin
  /// flip symmetry of the final Hamiltonian.
  bool use_symmetry_sectors = true;
  unsigned workers = 0;
  std::string instance_id;
};

/// Minimal gap of the standard transverse-field anneal for the original
/// model and for every mixed formulation, with ratios gap_m / gap_o.
GapRatioRecord kstar_scan(const LogicalIsing& model, const MixedScanConfig& config);

}  // namespace trianneal
