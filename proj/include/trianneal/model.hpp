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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trianneal {

/// Absolute tolerance for treating two energies as the same level.
inline constexpr double kEnergyTolerance = 1e-9;

/// Largest model size brute_force_spectrum will enumerate.
inline constexpr int kMaxEnumerationSpins = 26;

/// A computational-basis configuration. Bit 0 is spin +1, bit 1 is spin -1;
/// this convention holds in every module.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n) : bits_(n, 0) {}
  explicit Assignment(std::vector<std::uint8_t> bits);

  /// Parses "0110": character i is bit i.
  static Assignment from_string(std::string_view text);
  /// Bit i of the result is bit i of `index`.
  static Assignment from_index(std::uint64_t index, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t bit(std::size_t i) const { return bits_.at(i); }
  void set_bit(std::size_t i, std::uint8_t value) { bits_.at(i) = value & 1u; }
  int spin(std::size_t i) const { return bits_.at(i) ? -1 : 1; }

  std::uint64_t to_index() const;
  std::string to_string() const;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

Assignment flip_all(const Assignment& a);

/// Classical Ising energy function
///   E(s) = sum_i h_i s_i + sum_{i<j} J_ij s_i s_j
/// over N spins. Couplings are stored under (min, max) keys.
class LogicalIsing {
 public:
  using Edge = std::pair<int, int>;

  explicit LogicalIsing(int n_spins);

  int size() const noexcept { return n_; }

  /// Replaces the field on spin i.
  void set_field(int i, double h);
  /// Replaces the coupling on {i, j}; the order of i and j is irrelevant.
  void set_coupling(int i, int j, double value);

  double field(int i) const;
  double coupling(int i, int j) const;

  const std::map<int, double>& fields() const noexcept { return fields_; }
  const std::map<Edge, double>& couplings() const noexcept { return couplings_; }

  /// True iff every field is zero, i.e. E(s) == E(-s).
  bool z2_symmetric() const noexcept;

  /// Sum of |J_ij| plus sum of |h_i|.
  double coefficient_l1() const noexcept;

  friend bool operator==(const LogicalIsing&, const LogicalIsing&) = default;

 private:
  void check_index(int i) const;

  int n_;
  std::map<int, double> fields_;
  std::map<Edge, double> couplings_;
};

/// Dense, enumeration-friendly copy of a model. Shared by every exhaustive
/// loop in the project.
class IsingTable {
 public:
  explicit IsingTable(const LogicalIsing& model);

  int size() const noexcept { return n_; }
  /// Energy of the basis state whose bit i is spin i.
  double energy(std::uint64_t state) const noexcept;
  /// Energies of all 2^N states, indexed by state.
  std::vector<double> all_energies(unsigned workers = 0) const;

 private:
  int n_;
  std::vector<double> h_;
  std::vector<double> j_;  // row-major N x N, symmetric, zero diagonal
};

double energy(const LogicalIsing& model, const Assignment& a);

struct SpectrumEntry {
  double energy = 0.0;
  std::uint64_t degeneracy = 0;
  Assignment representative;  ///< lowest-index state in the level
};

/// Exact spectrum by enumerating all 2^N states, grouped into levels with
/// kEnergyTolerance and sorted ascending.
std::vector<SpectrumEntry> brute_force_spectrum(const LogicalIsing& model);

/// Groups an arbitrary list of energies into levels. Representatives index
/// into `energies`, decoded as `bits`-wide assignments.
std::vector<SpectrumEntry> group_levels(const std::vector<double>& energies,
                                        std::size_t bits);

int hamming_distance(const Assignment& a, const Assignment& b);

/// Coefficient distribution for random_instance.
struct Distribution {
  enum class Kind { zero, uniform, gaussian, bimodal };
  Kind kind = Kind::zero;
  double a = 0.0;  ///< uniform lower bound, gaussian mean, bimodal magnitude
  double b = 0.0;  ///< uniform upper bound, gaussian sigma

  static Distribution zero() { return {}; }
  static Distribution uniform(double lo, double hi) { return {Kind::uniform, lo, hi}; }
  static Distribution gaussian(double mean, double sigma) { return {Kind::gaussian, mean, sigma}; }
  static Distribution bimodal(double magnitude) { return {Kind::bimodal, magnitude, 0.0}; }

  /// "zero", "uniform:-1,1", "gaussian:0,1", "pmJ:1".
  static Distribution parse(std::string_view text);
  std::string to_string() const;
  void validate() const;
};

/// All-to-all instance; couplings are drawn first in (i, j) row-major order,
/// then fields in index order. Deterministic in `seed`.
LogicalIsing random_instance(int n, const Distribution& coupling_law,
                             const Distribution& field_law, std::uint64_t seed);

}  // namespace trianneal
