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

#include "trianneal/sat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "trianneal/error.hpp"

namespace trianneal {

bool Clause::satisfied(std::uint64_t state) const noexcept {
  for (int k = 0; k < 3; ++k) {
    const bool value = (state >> variables[k]) & 1u;
    if (value != negated[k]) return true;
  }
  return false;
}

int Unique3Sat::violations(std::uint64_t variable_state) const noexcept {
  int count = 0;
  for (const auto& c : clauses) count += !c.satisfied(variable_state);
  return count;
}

Assignment Unique3Sat::with_ancillas(const Assignment& variables) const {
  if (variables.size() != static_cast<std::size_t>(n_vars)) {
    throw DimensionError("expected " + std::to_string(n_vars) + " variable bits");
  }
  Assignment full(static_cast<std::size_t>(n_vars + n_ancillas()));
  for (int i = 0; i < n_vars; ++i) full.set_bit(i, variables.bit(i));
  for (int k = 0; k < n_ancillas(); ++k) {
    const auto [a, b] = ancilla_pairs[k];
    full.set_bit(n_vars + k, variables.bit(a) & variables.bit(b));
  }
  return full;
}

std::uint64_t count_solutions(int n_vars, const std::vector<Clause>& clauses) {
  if (n_vars > 20) throw ResourceError("solution counting limited to 20 variables");
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n_vars;
  for (std::uint64_t s = 0; s < total; ++s) {
    bool ok = true;
    for (const auto& c : clauses) {
      if (!c.satisfied(s)) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

namespace {

using Monomial = std::vector<int>;  // sorted variable indices
using Polynomial = std::map<Monomial, double>;

void add_term(Polynomial& p, Monomial m, double c) {
  std::sort(m.begin(), m.end());
  p[m] += c;
}

// Violation indicator of a clause as a multilinear polynomial in the bits.
// A literal is false when y = (negated ? x : 1 - x) equals 1.
void add_clause(Polynomial& p, const Clause& clause) {
  for (int subset = 0; subset < 8; ++subset) {
    double coefficient = 1.0;
    Monomial m;
    for (int k = 0; k < 3; ++k) {
      const bool in_subset = (subset >> k) & 1;
      const double constant = clause.negated[k] ? 0.0 : 1.0;
      const double linear = clause.negated[k] ? 1.0 : -1.0;
      if (in_subset) {
        coefficient *= linear;
        m.push_back(clause.variables[k]);
      } else {
        coefficient *= constant;
      }
    }
    if (coefficient != 0.0) add_term(p, std::move(m), coefficient);
  }
}

constexpr double kZero = 1e-12;

}  // namespace

Unique3Sat reduce_3sat(int n_vars, std::vector<Clause> clauses) {
  if (n_vars < 3) throw InputError("3-SAT needs at least 3 variables");
  for (const auto& c : clauses) {
    std::set<int> distinct(c.variables.begin(), c.variables.end());
    if (distinct.size() != 3 || *distinct.begin() < 0 || *distinct.rbegin() >= n_vars) {
      throw InputError("clause must reference 3 distinct variables in range");
    }
  }

  Polynomial poly;
  for (const auto& c : clauses) add_clause(poly, c);

  std::vector<Monomial> cubic;
  for (const auto& [m, c] : poly) {
    if (m.size() == 3 && std::abs(c) > kZero) cubic.push_back(m);
  }

  // Greedy pair cover: repeatedly choose the pair shared by the most
  // still-uncovered cubic monomials (ties to the lexicographically first pair).
  std::vector<std::pair<int, int>> pairs;
  std::map<Monomial, std::size_t> owner;
  while (owner.size() < cubic.size()) {
    std::map<std::pair<int, int>, int> votes;
    for (const auto& m : cubic) {
      if (owner.count(m)) continue;
      votes[{m[0], m[1]}]++;
      votes[{m[0], m[2]}]++;
      votes[{m[1], m[2]}]++;
    }
    auto best = std::max_element(votes.begin(), votes.end(),
                                 [](const auto& l, const auto& r) { return l.second < r.second; });
    const auto chosen = best->first;
    pairs.push_back(chosen);
    for (const auto& m : cubic) {
      if (owner.count(m)) continue;
      const bool has_first = std::find(m.begin(), m.end(), chosen.first) != m.end();
      const bool has_second = std::find(m.begin(), m.end(), chosen.second) != m.end();
      if (has_first && has_second) owner[m] = pairs.size() - 1;
    }
  }

  Polynomial reduced;
  std::vector<double> routed(pairs.size(), 0.0);
  for (const auto& [m, c] : poly) {
    if (std::abs(c) <= kZero) continue;
    if (m.size() < 3) {
      reduced[m] += c;
      continue;
    }
    const std::size_t k = owner.at(m);
    const int z = n_vars + static_cast<int>(k);
    int rest = -1;
    for (int v : m) {
      if (v != pairs[k].first && v != pairs[k].second) rest = v;
    }
    add_term(reduced, {z, rest}, c);
    routed[k] += std::abs(c);
  }
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double weight = 1.0 + routed[k];
    const int a = pairs[k].first;
    const int b = pairs[k].second;
    const int z = n_vars + static_cast<int>(k);
    add_term(reduced, {a, b}, weight);
    add_term(reduced, {a, z}, -2.0 * weight);
    add_term(reduced, {b, z}, -2.0 * weight);
    add_term(reduced, {z}, 3.0 * weight);
  }

  // x = (1 - s) / 2 turns the quadratic pseudo-Boolean form into an Ising
  // model plus a constant.
  const int n_total = n_vars + static_cast<int>(pairs.size());
  std::vector<double> h(n_total, 0.0);
  std::map<std::pair<int, int>, double> j;
  double offset = 0.0;
  for (const auto& [m, c] : reduced) {
    if (m.empty()) {
      offset += c;
    } else if (m.size() == 1) {
      offset += c / 2.0;
      h[m[0]] -= c / 2.0;
    } else {
      offset += c / 4.0;
      h[m[0]] -= c / 4.0;
      h[m[1]] -= c / 4.0;
      j[{m[0], m[1]}] += c / 4.0;
    }
  }

  Unique3Sat out;
  out.n_vars = n_vars;
  out.clauses = std::move(clauses);
  out.ancilla_pairs = std::move(pairs);
  out.model = LogicalIsing(n_total);
  for (int i = 0; i < n_total; ++i) {
    if (std::abs(h[i]) > kZero) out.model.set_field(i, h[i]);
  }
  for (const auto& [edge, value] : j) {
    if (std::abs(value) > kZero) out.model.set_coupling(edge.first, edge.second, value);
  }
  out.offset = offset;
  return out;
}

Unique3Sat unique_3sat_instance(int n_vars, std::uint64_t seed, int max_attempts) {
  if (n_vars < 3 || n_vars > kMaxSatVariables) {
    throw InputError("UNIQUE 3-SAT generation supports 3 <= n_vars <= " +
                     std::to_string(kMaxSatVariables));
  }
  std::mt19937_64 rng(seed);
  const int n_clauses = static_cast<int>(std::lround(kClauseRatio * n_vars));
  std::vector<int> pool(n_vars);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Clause> clauses(n_clauses);
    for (auto& c : clauses) {
      for (int i = 0; i < n_vars; ++i) pool[i] = i;
      // Partial Fisher-Yates for three distinct variables.
      for (int k = 0; k < 3; ++k) {
        std::uniform_int_distribution<int> pick(k, n_vars - 1);
        std::swap(pool[k], pool[pick(rng)]);
      }
      std::array<int, 3> vars{pool[0], pool[1], pool[2]};
      std::sort(vars.begin(), vars.end());
      c.variables = vars;
      for (int k = 0; k < 3; ++k) c.negated[k] = rng() & 1u;
    }
    if (count_solutions(n_vars, clauses) != 1) continue;

    std::uint64_t solution = 0;
    const std::uint64_t total = std::uint64_t{1} << n_vars;
    for (std::uint64_t s = 0; s < total; ++s) {
      if (std::all_of(clauses.begin(), clauses.end(),
                      [s](const Clause& c) { return c.satisfied(s); })) {
        solution = s;
        break;
      }
    }
    Unique3Sat out = reduce_3sat(n_vars, std::move(clauses));
    out.solution = Assignment::from_index(solution, static_cast<std::size_t>(n_vars));
    return out;
  }
  throw GenerationError("no UNIQUE 3-SAT instance with " + std::to_string(n_vars) +
                        " variables after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace trianneal
