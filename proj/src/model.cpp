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

#include "trianneal/model.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "trianneal/error.hpp"
#include "trianneal/parallel.hpp"

namespace trianneal {

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw InputError("assignment bits must be 0 or 1");
  }
}

Assignment Assignment::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InputError("assignment string may contain only '0' and '1'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Assignment(std::move(bits));
}

Assignment Assignment::from_index(std::uint64_t index, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a.bits_[i] = (index >> i) & 1u;
  return a;
}

std::uint64_t Assignment::to_index() const {
  if (bits_.size() > 64) throw ResourceError("assignment wider than 64 bits");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    index |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return index;
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Assignment flip_all(const Assignment& a) {
  std::vector<std::uint8_t> bits = a.bits();
  for (auto& b : bits) b ^= 1u;
  return Assignment(std::move(bits));
}

// ---------------------------------------------------------------------------

LogicalIsing::LogicalIsing(int n_spins) : n_(n_spins) {
  if (n_spins < 1) throw InputError("model needs at least one spin");
}

void LogicalIsing::check_index(int i) const {
  if (i < 0 || i >= n_) {
    throw InputError("spin index " + std::to_string(i) + " outside [0, " +
                     std::to_string(n_) + ")");
  }
}

void LogicalIsing::set_field(int i, double h) {
  check_index(i);
  if (!std::isfinite(h)) throw InputError("field must be finite");
  fields_[i] = h;
}

void LogicalIsing::set_coupling(int i, int j, double value) {
  check_index(i);
  check_index(j);
  if (i == j) throw InputError("self-coupling on spin " + std::to_string(i));
  if (!std::isfinite(value)) throw InputError("coupling must be finite");
  couplings_[{std::min(i, j), std::max(i, j)}] = value;
}

double LogicalIsing::field(int i) const {
  check_index(i);
  auto it = fields_.find(i);
  return it == fields_.end() ? 0.0 : it->second;
}

double LogicalIsing::coupling(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return 0.0;
  auto it = couplings_.find({std::min(i, j), std::max(i, j)});
  return it == couplings_.end() ? 0.0 : it->second;
}

bool LogicalIsing::z2_symmetric() const noexcept {
  return std::all_of(fields_.begin(), fields_.end(),
                     [](const auto& kv) { return kv.second == 0.0; });
}

double LogicalIsing::coefficient_l1() const noexcept {
  double total = 0.0;
  for (const auto& [_, h] : fields_) total += std::abs(h);
  for (const auto& [_, j] : couplings_) total += std::abs(j);
  return total;
}

// ---------------------------------------------------------------------------

IsingTable::IsingTable(const LogicalIsing& model)
    : n_(model.size()),
      h_(static_cast<std::size_t>(model.size()), 0.0),
      j_(static_cast<std::size_t>(model.size()) * model.size(), 0.0) {
  for (const auto& [i, h] : model.fields()) h_[i] = h;
  for (const auto& [edge, value] : model.couplings()) {
    j_[edge.first * n_ + edge.second] = value;
    j_[edge.second * n_ + edge.first] = value;
  }
}

double IsingTable::energy(std::uint64_t state) const noexcept {
  double e = 0.0;
  for (int i = 0; i < n_; ++i) {
    const double si = ((state >> i) & 1u) ? -1.0 : 1.0;
    double row = h_[i];
    for (int j = i + 1; j < n_; ++j) {
      const double sj = ((state >> j) & 1u) ? -1.0 : 1.0;
      row += j_[i * n_ + j] * sj;
    }
    e += si * row;
  }
  return e;
}

std::vector<double> IsingTable::all_energies(unsigned workers) const {
  if (n_ > kMaxEnumerationSpins) {
    throw ResourceError("enumeration of " + std::to_string(n_) +
                        " spins exceeds the bound of " +
                        std::to_string(kMaxEnumerationSpins));
  }
  const std::uint64_t total = std::uint64_t{1} << n_;
  const int low_bits = std::min(n_, 10);
  const std::uint64_t block = std::uint64_t{1} << low_bits;
  std::vector<double> out(total);

  // Each block walks its low bits in Gray-code order from an exactly
  // evaluated start, so incremental round-off never spans more than 1024 flips.
  parallel_for(
      total / block,
      [&](std::size_t b) {
        const std::uint64_t base = static_cast<std::uint64_t>(b) << low_bits;
        std::vector<double> s(n_), local(n_);
        for (int i = 0; i < n_; ++i) s[i] = ((base >> i) & 1u) ? -1.0 : 1.0;
        for (int i = 0; i < n_; ++i) {
          double f = h_[i];
          for (int j = 0; j < n_; ++j) f += j_[i * n_ + j] * s[j];
          local[i] = f;
        }
        double e = energy(base);
        std::uint64_t state = base;
        out[state] = e;
        for (std::uint64_t t = 1; t < block; ++t) {
          const int k = std::countr_zero(t);
          e -= 2.0 * s[k] * local[k];
          s[k] = -s[k];
          for (int j = 0; j < n_; ++j) local[j] += 2.0 * j_[j * n_ + k] * s[k];
          state ^= std::uint64_t{1} << k;
          out[state] = e;
        }
      },
      workers);
  return out;
}

double energy(const LogicalIsing& model, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(model.size())) {
    throw DimensionError("assignment has " + std::to_string(a.size()) +
                         " bits, model has " + std::to_string(model.size()) +
                         " spins");
  }
  double e = 0.0;
  for (const auto& [i, h] : model.fields()) e += h * a.spin(i);
  for (const auto& [edge, j] : model.couplings()) {
    e += j * a.spin(edge.first) * a.spin(edge.second);
  }
  return e;
}

std::vector<SpectrumEntry> group_levels(const std::vector<double>& energies,
                                        std::size_t bits) {
  std::vector<double> sorted = energies;
  std::sort(sorted.begin(), sorted.end());

  std::vector<SpectrumEntry> levels;
  std::vector<double> anchors;
  for (double e : sorted) {
    if (levels.empty() || e - anchors.back() > kEnergyTolerance) {
      anchors.push_back(e);
      levels.push_back({e, 0, {}});
    }
    levels.back().degeneracy += 1;
  }

  // Representatives: lowest state index falling into each level.
  std::vector<std::int64_t> rep(levels.size(), -1);
  for (std::size_t state = 0; state < energies.size(); ++state) {
    const double e = energies[state];
    auto it = std::upper_bound(anchors.begin(), anchors.end(), e);
    const std::size_t level = static_cast<std::size_t>(it - anchors.begin()) - 1;
    if (rep[level] < 0) rep[level] = static_cast<std::int64_t>(state);
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    levels[l].representative =
        Assignment::from_index(static_cast<std::uint64_t>(rep[l]), bits);
  }
  return levels;
}

std::vector<SpectrumEntry> brute_force_spectrum(const LogicalIsing& model) {
  IsingTable table(model);
  return group_levels(table.all_energies(), static_cast<std::size_t>(model.size()));
}

int hamming_distance(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) {
    throw DimensionError("hamming distance between assignments of length " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.bit(i) != b.bit(i);
  return d;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view piece =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    double value = 0.0;
    std::istringstream in{std::string(piece)};
    if (!(in >> value) || !(in >> std::ws).eof()) {
      throw InputError("bad number '" + std::string(piece) + "' in distribution");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Distribution Distribution::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::vector<double> args =
      colon == std::string_view::npos ? std::vector<double>{}
                                      : parse_numbers(text.substr(colon + 1));
  auto expect = [&](std::size_t count) {
    if (args.size() != count) {
      throw InputError("distribution '" + std::string(name) + "' takes " +
                       std::to_string(count) + " parameter(s)");
    }
  };
  Distribution d;
  if (name == "zero") {
    expect(0);
  } else if (name == "uniform") {
    expect(2);
    d = uniform(args[0], args[1]);
  } else if (name == "gaussian") {
    expect(2);
    d = gaussian(args[0], args[1]);
  } else if (name == "pmJ" || name == "bimodal") {
    expect(1);
    d = bimodal(args[0]);
  } else {
    throw InputError("unknown distribution '" + std::string(name) + "'");
  }
  d.validate();
  return d;
}

std::string Distribution::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case Kind::zero:
      return "zero";
    case Kind::uniform:
      out << "uniform:" << a << "," << b;
      break;
    case Kind::gaussian:
      out << "gaussian:" << a << "," << b;
      break;
    case Kind::bimodal:
      out << "pmJ:" << a;
      break;
  }
  return out.str();
}

void Distribution::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw InputError("distribution parameters must be finite");
  }
  switch (kind) {
    case Kind::zero:
      break;
    case Kind::uniform:
      if (!(a < b)) throw InputError("uniform distribution needs lo < hi");
      break;
    case Kind::gaussian:
      if (b < 0.0) throw InputError("gaussian sigma must be non-negative");
      break;
    case Kind::bimodal:
      if (a < 0.0) throw InputError("bimodal magnitude must be non-negative");
      break;
  }
}

namespace {

double draw(const Distribution& d, std::mt19937_64& rng) {
  switch (d.kind) {
    case Distribution::Kind::zero:
      return 0.0;
    case Distribution::Kind::uniform:
      return std::uniform_real_distribution<double>(d.a, d.b)(rng);
    case Distribution::Kind::gaussian:
      return d.b == 0.0 ? d.a : std::normal_distribution<double>(d.a, d.b)(rng);
    case Distribution::Kind::bimodal:
      return (rng() & 1u) ? d.a : -d.a;
  }
  return 0.0;
}

}  // namespace

LogicalIsing random_instance(int n, const Distribution& coupling_law,
                             const Distribution& field_law, std::uint64_t seed) {
  if (n < 2) throw InputError("random instances need at least 2 spins");
  coupling_law.validate();
  field_law.validate();

  std::mt19937_64 rng(seed);
  LogicalIsing model(n);
  if (coupling_law.kind != Distribution::Kind::zero) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) model.set_coupling(i, j, draw(coupling_law, rng));
    }
  }
  if (field_law.kind != Distribution::Kind::zero) {
    for (int i = 0; i < n; ++i) model.set_field(i, draw(field_law, rng));
  }
  return model;
}

}  // namespace trianneal
