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

#include "trianneal/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "trianneal/error.hpp"
#include "trianneal/operator.hpp"
#include "trianneal/parallel.hpp"

namespace trianneal {

namespace {

void check_kstar(int n, int k_star) {
  if (k_star < 0 || k_star >= n) {
    throw InputError("k* = " + std::to_string(k_star) + " outside [0, " + std::to_string(n) +
                     ")");
  }
}

void add_field(LogicalIsing& m, int i, double value) {
  const double total = m.field(i) + value;
  if (total != 0.0) m.set_field(i, total);
}

}  // namespace

MixedEncoding eltip_transform(const LogicalIsing& model, int k_star) {
  const int n = model.size();
  check_kstar(n, k_star);
  MixedEncoding out{k_star, LogicalIsing(n)};
  LogicalIsing& eta = out.eta_model;
  for (const auto& [i, h] : model.fields()) {
    if (h == 0.0) continue;
    if (i == k_star) {
      add_field(eta, i, h);
    } else {
      eta.set_coupling(i, k_star, eta.coupling(i, k_star) + h);
    }
  }
  for (const auto& [edge, j] : model.couplings()) {
    if (j == 0.0) continue;
    const auto [a, b] = edge;
    if (a == k_star || b == k_star) {
      add_field(eta, a == k_star ? b : a, j);
    } else {
      eta.set_coupling(a, b, j);
    }
  }
  return out;
}

Assignment eltip_map_assignment(const Assignment& a, int k_star) {
  check_kstar(static_cast<int>(a.size()), k_star);
  Assignment out = a;
  const std::uint8_t pivot = a.bit(k_star);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (static_cast<int>(j) != k_star) out.set_bit(j, a.bit(j) ^ pivot);
  }
  return out;
}

HammingShift hamming_shift_check(const Assignment& a, const Assignment& b, int k_star) {
  if (a.size() != b.size()) throw DimensionError("assignments differ in length");
  const int n = static_cast<int>(a.size());
  HammingShift shift;
  shift.before = hamming_distance(a, b);
  shift.after = hamming_distance(eltip_map_assignment(a, k_star), eltip_map_assignment(b, k_star));
  const bool agree = a.bit(k_star) == b.bit(k_star);
  const int expected = agree ? shift.before : n - shift.before + 1;
  if (shift.after != expected) {
    throw ValidationError("Hamming shift rule violated: distance " +
                          std::to_string(shift.before) + " became " +
                          std::to_string(shift.after) + ", expected " +
                          std::to_string(expected));
  }
  return shift;
}

std::vector<int> rank_kstar(const LogicalIsing& model, KStarHeuristic heuristic) {
  const int n = model.size();
  std::vector<double> score(n, 0.0);
  for (int k = 0; k < n; ++k) {
    const LogicalIsing eta = eltip_transform(model, k).eta_model;
    if (heuristic == KStarHeuristic::coupling_strength) {
      double sum_j = 0.0, sum_h = 0.0;
      for (const auto& [e, j] : eta.couplings()) sum_j += std::abs(j);
      for (const auto& [i, h] : eta.fields()) sum_h += std::abs(h);
      const double mean_j = eta.couplings().empty() ? 0.0 : sum_j / eta.couplings().size();
      const double mean_h = eta.fields().empty() ? 0.0 : sum_h / eta.fields().size();
      score[k] = mean_h > 0.0 ? mean_j / mean_h : std::numeric_limits<double>::infinity();
    } else {
      std::vector<double> magnitudes;
      for (const auto& [e, j] : eta.couplings()) magnitudes.push_back(std::abs(j));
      std::sort(magnitudes.begin(), magnitudes.end());
      int distinct = 0;
      for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        if (i == 0 || magnitudes[i] - magnitudes[i - 1] > kEnergyTolerance) ++distinct;
      }
      score[k] = distinct;
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });
  return order;
}

GapRatioRecord kstar_scan(const LogicalIsing& model, const MixedScanConfig& config) {
  const int n = model.size();
  config.schedule.validate();
  std::vector<int> candidates = config.kstar_candidates;
  if (candidates.empty()) {
    candidates.resize(n);
    std::iota(candidates.begin(), candidates.end(), 0);
  }
  for (int k : candidates) check_kstar(n, k);

  const Operator driver(standard_driver(n));
  // Slot 0 is the original formulation, slot i+1 the mixed one for candidates[i].
  std::vector<MinimalGap> results(candidates.size() + 1);
  parallel_for(
      results.size(),
      [&](std::size_t slot) {
        const LogicalIsing final_model =
            slot == 0 ? model : eltip_transform(model, candidates[slot - 1]).eta_model;
        const Operator final_op(ising_operator(final_model));
        std::optional<Sector> sector;
        if (config.use_symmetry_sectors) sector = anneal_symmetry(driver, final_op);
        results[slot] = minimal_gap(driver, final_op, config.schedule, sector, 1);
      },
      config.workers);

  GapRatioRecord record;
  record.instance_id = config.instance_id;
  record.original_gap = results[0].gap;
  record.original_lambda = results[0].lambda_at_min;
  if (!(record.original_gap > 0.0)) {
    throw NumericalError("original formulation has a vanishing minimal gap");
  }
  record.best_ratio = -std::numeric_limits<double>::infinity();
  record.worst_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const int k = candidates[i];
    const double ratio = results[i + 1].gap / record.original_gap;
    record.kstar_gaps[k] = results[i + 1].gap;
    record.kstar_lambda[k] = results[i + 1].lambda_at_min;
    record.ratios[k] = ratio;
    if (ratio > record.best_ratio) {
      record.best_ratio = ratio;
      record.best_kstar = k;
    }
    if (ratio < record.worst_ratio) {
      record.worst_ratio = ratio;
      record.worst_kstar = k;
    }
  }
  return record;
}

}  // namespace trianneal
