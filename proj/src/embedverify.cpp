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

#include "trianneal/embedverify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "trianneal/error.hpp"
#include "trianneal/parallel.hpp"

namespace trianneal {

std::vector<std::uint8_t> encode(const Assignment& logical, const CompiledModel& compiled) {
  if (logical.size() != static_cast<std::size_t>(compiled.n_logical)) {
    throw DimensionError("logical assignment has " + std::to_string(logical.size()) +
                         " bits, compiled model has " + std::to_string(compiled.n_logical));
  }
  std::vector<std::uint8_t> physical(compiled.n_qubits(), 0);
  const std::uint8_t pivot = logical.bit(compiled.k_star);
  for (const auto& [var, path] : compiled.chains.chains) {
    const std::uint8_t eta = logical.bit(var) ^ pivot;
    for (int q : path) physical[q] = eta;
  }
  for (int q : compiled.chains.sign_chain) physical[q] = pivot;
  return physical;
}

namespace {

// Returns the chain's value, or nullopt if strict reading finds disagreement.
std::optional<std::uint8_t> read_chain(const std::vector<std::uint8_t>& physical,
                                       const std::vector<int>& path, DecodePolicy policy) {
  std::size_t ones = 0;
  for (int q : path) ones += physical[q] & 1u;
  if (ones == 0) return 0;
  if (ones == path.size()) return 1;
  if (policy == DecodePolicy::strict) return std::nullopt;
  return static_cast<std::uint8_t>(2 * ones > path.size() ? 1 : 0);
}

}  // namespace

DecodeResult decode(const std::vector<std::uint8_t>& physical, const CompiledModel& compiled,
                    DecodePolicy policy) {
  if (physical.size() != static_cast<std::size_t>(compiled.n_qubits())) {
    throw DimensionError("physical state has " + std::to_string(physical.size()) +
                         " bits, compiled model has " + std::to_string(compiled.n_qubits()));
  }
  DecodeResult result;
  std::uint8_t pivot = 0;
  if (!compiled.chains.sign_chain.empty()) {
    const auto sign = read_chain(physical, compiled.chains.sign_chain, policy);
    if (sign) {
      pivot = *sign;
    } else {
      result.broken_chains.push_back(compiled.k_star);
    }
  }
  Assignment x(static_cast<std::size_t>(compiled.n_logical));
  x.set_bit(compiled.k_star, pivot);
  for (const auto& [var, path] : compiled.chains.chains) {
    const auto eta = read_chain(physical, path, policy);
    if (!eta) {
      result.broken_chains.push_back(var);
      continue;
    }
    x.set_bit(var, *eta ^ pivot);
  }
  std::sort(result.broken_chains.begin(), result.broken_chains.end());
  if (result.broken_chains.empty()) result.assignment = std::move(x);
  return result;
}

// ---------------------------------------------------------------------------

PhysicalEnumeration::PhysicalEnumeration(const LogicalIsing& model,
                                         const CompiledModel& compiled)
    : compiled_(compiled) {
  const int n = compiled.n_qubits();
  if (n > kMaxPhysicalEnumeration) {
    throw ResourceError("physical enumeration of " + std::to_string(n) +
                        " qubits exceeds the bound of " +
                        std::to_string(kMaxPhysicalEnumeration));
  }
  if (model.size() != compiled.n_logical) {
    throw DimensionError("model and compiled artifact disagree on N");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  problem_.resize(total);
  broken_.resize(total);

  const PhysicalHamiltonian& ham = compiled.hamiltonian;
  constexpr std::uint64_t kBlock = 4096;
  parallel_for((total + kBlock - 1) / kBlock, [&](std::size_t b) {
    const std::uint64_t begin = b * kBlock;
    const std::uint64_t end = std::min(total, begin + kBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      problem_[s] = ham.problem_energy(s);
      broken_[s] = static_cast<std::uint8_t>(ham.broken_links(s));
    }
  });

  max_feasible_ = -std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 0; s < total; ++s) {
    if (broken_[s] == 0) {
      ++feasible_count_;
      max_feasible_ = std::max(max_feasible_, problem_[s]);
    }
  }

  const std::vector<double> logical = IsingTable(model).all_energies();
  logical_ground_ = *std::min_element(logical.begin(), logical.end());
}

bool PhysicalEnumeration::low_spectrum_contained(double penalty) const {
  double min_infeasible = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < problem_.size(); ++s) {
    if (broken_[s] != 0) {
      min_infeasible = std::min(min_infeasible, problem_[s] + 2.0 * penalty * broken_[s]);
    }
  }
  return max_feasible_ < min_infeasible - kEnergyTolerance;
}

bool PhysicalEnumeration::ground_states_logical(double penalty) const {
  double ground = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < problem_.size(); ++s) {
    ground = std::min(ground, problem_[s] + 2.0 * penalty * broken_[s]);
  }
  const int n = compiled_.n_qubits();
  for (std::size_t s = 0; s < problem_.size(); ++s) {
    const double e = problem_[s] + 2.0 * penalty * broken_[s];
    if (e > ground + kEnergyTolerance) continue;
    if (broken_[s] != 0) return false;
    std::vector<std::uint8_t> bits(n);
    for (int q = 0; q < n; ++q) bits[q] = (s >> q) & 1u;
    const DecodeResult decoded = decode(bits, compiled_);
    if (!decoded.feasible()) return false;
    if (std::abs(problem_[s] - logical_ground_) > kEnergyTolerance) return false;
  }
  return true;
}

bool PhysicalEnumeration::criterion(PenaltyCriterion c, double penalty) const {
  return c == PenaltyCriterion::ground_only ? ground_states_logical(penalty)
                                            : low_spectrum_contained(penalty);
}

EquivalenceReport spectrum_equivalence(const LogicalIsing& model, const CompiledModel& compiled,
                                       double penalty) {
  const PhysicalEnumeration table(model, compiled);
  EquivalenceReport report;
  report.penalty_used = penalty;
  report.feasible_count = table.feasible_count();
  report.expected_feasible_count = std::uint64_t{1}
                                   << (compiled.with_fields ? model.size() : model.size() - 1);
  report.max_feasible_energy = table.max_feasible_energy();

  const auto& problem = table.problem_energies();
  const auto& broken = table.broken_links();
  for (std::size_t s = 0; s < problem.size(); ++s) {
    if (broken[s] == 0) continue;
    const double e = problem[s] + 2.0 * penalty * broken[s];
    report.min_infeasible_energy =
        report.min_infeasible_energy ? std::min(*report.min_infeasible_energy, e) : e;
  }

  const IsingTable logical(model);
  const std::uint64_t n_logical_states = std::uint64_t{1} << model.size();
  std::set<std::uint64_t> image;
  bool image_feasible = true;
  for (std::uint64_t x = 0; x < n_logical_states; ++x) {
    const auto bits = encode(Assignment::from_index(x, model.size()), compiled);
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) index |= std::uint64_t{bits[q]} << q;
    image.insert(index);
    image_feasible = image_feasible && broken[index] == 0;
    report.energy_max_abs_error =
        std::max(report.energy_max_abs_error, std::abs(problem[index] - logical.energy(x)));
  }
  report.energies_ok = report.energy_max_abs_error <= kEnergyTolerance;
  report.bijection_ok = image_feasible && image.size() == report.feasible_count &&
                        image.size() == report.expected_feasible_count;
  report.low_spectrum_ok = table.low_spectrum_contained(penalty);
  return report;
}

std::string to_string(PenaltyCriterion c) {
  return c == PenaltyCriterion::ground_only ? "ground_only" : "full_low_spectrum";
}

PenaltyCriterion parse_penalty_criterion(const std::string& text) {
  if (text == "ground_only") return PenaltyCriterion::ground_only;
  if (text == "full_low_spectrum") return PenaltyCriterion::full_low_spectrum;
  throw InputError("unknown criterion '" + text + "' (ground_only | full_low_spectrum)");
}

double minimal_penalty(const LogicalIsing& model, const CompiledModel& compiled,
                       PenaltyCriterion criterion) {
  if (compiled.hamiltonian.penalties.empty()) {
    if (compiled.n_qubits() > kMaxPhysicalEnumeration) {
      throw ResourceError("physical enumeration bound exceeded");
    }
    return 0.0;
  }
  const PhysicalEnumeration table(model, compiled);
  double lo = 0.0;
  double hi = default_penalty(model);
  if (!table.criterion(criterion, hi)) {
    throw NumericalError(to_string(criterion) + " not met at the default penalty " +
                         std::to_string(hi));
  }
  if (table.criterion(criterion, lo)) return 0.0;
  while (hi - lo > kPenaltyResolution) {
    const double mid = 0.5 * (lo + hi);
    (table.criterion(criterion, mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace trianneal
