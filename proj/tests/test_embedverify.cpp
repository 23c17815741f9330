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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "trianneal/compiler.hpp"
#include "trianneal/embedverify.hpp"
#include "trianneal/error.hpp"

using namespace trianneal;

namespace {

// Physical energy straight from the coefficient lists, without the library's
// evaluator.
double physical_energy(const PhysicalHamiltonian& h, const std::vector<std::uint8_t>& bits,
                       double penalty) {
  auto z = [&](int q) { return bits[q] ? -1.0 : 1.0; };
  double e = h.constant_offset;
  for (const auto& [q, v] : h.fields) e += v * z(q);
  for (const auto& [uv, v] : h.two_local) e += v * z(uv.first) * z(uv.second);
  for (const auto& [u, v] : h.penalties) e += penalty * (1 - z(u) * z(v));
  return e;
}

std::vector<std::uint8_t> bits_of(std::uint64_t state, int n) {
  std::vector<std::uint8_t> b(n);
  for (int q = 0; q < n; ++q) b[q] = state >> q & 1;
  return b;
}

bool chains_intact(const std::vector<std::uint8_t>& bits, const CompiledModel& c) {
  for (const auto& path : c.chains.all_paths()) {
    for (int q : path) {
      if (bits[q] != bits[path.front()]) return false;
    }
  }
  return true;
}

LogicalIsing z2_model(int n, std::uint64_t seed) {
  return random_instance(n, Distribution::uniform(-1, 1), Distribution::zero(), seed);
}

LogicalIsing field_model(int n, std::uint64_t seed) {
  return random_instance(n, Distribution::uniform(-1, 1), Distribution::uniform(-1, 1), seed);
}

}  // namespace

TEST_CASE("encode examples") {
  const LogicalIsing m = field_model(5, 1);
  const auto c = compile(m, 2);
  const auto zeros = encode(Assignment(5), c);
  CHECK(std::all_of(zeros.begin(), zeros.end(), [](auto b) { return b == 0; }));

  const auto ones = encode(Assignment::from_string("11111"), c);
  for (const auto& [var, path] : c.chains.chains) {
    for (int q : path) CHECK(ones[q] == 0);
  }
  for (int q : c.chains.sign_chain) CHECK(ones[q] == 1);

  const auto z2 = compile(z2_model(5, 1), 2);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto a = Assignment::from_index(rng() & 31, 5);
    CHECK(encode(a, z2) == encode(flip_all(a), z2));
  }
  CHECK_THROWS_AS(encode(Assignment(4), c), DimensionError);
}

TEST_CASE("decode round trips") {
  for (int n = 3; n <= 6; ++n) {
    const auto cf = compile(field_model(n, n), n - 1);
    const auto cz = compile(z2_model(n, n), 0);
    for (std::uint64_t s = 0; s < (1u << n); ++s) {
      const auto a = Assignment::from_index(s, n);
      const auto rf = decode(encode(a, cf), cf);
      REQUIRE(rf.feasible());
      CHECK(*rf.assignment == a);
      const auto rz = decode(encode(a, cz), cz);
      REQUIRE(rz.feasible());
      CHECK((*rz.assignment == a || *rz.assignment == flip_all(a)));
      CHECK(rz.assignment->bit(0) == 0);
    }
  }
}

TEST_CASE("strict decode reports broken chains, majority vote repairs them") {
  const auto c = compile(field_model(5, 3), 0);  // chains of length 3
  const auto a = Assignment::from_string("10110");
  auto bits = encode(a, c);
  const auto& [var, path] = *c.chains.chains.begin();
  REQUIRE(path.size() == 3);
  bits[path[1]] ^= 1;

  const auto strict = decode(bits, c, DecodePolicy::strict);
  CHECK_FALSE(strict.feasible());
  CHECK(strict.broken_chains == std::vector<int>{var});

  const auto vote = decode(bits, c, DecodePolicy::majority_vote);
  REQUIRE(vote.feasible());
  CHECK(*vote.assignment == a);

  auto sign_broken = encode(a, c);
  sign_broken[c.chains.sign_chain.front()] ^= 1;
  const auto r = decode(sign_broken, c);
  CHECK(r.broken_chains == std::vector<int>{0});

  CHECK_THROWS_AS(decode(std::vector<std::uint8_t>(3), c), DimensionError);
}

TEST_CASE("majority vote ties go to bit 0") {
  const auto c = compile(z2_model(6, 3), 0);  // chains of length 4
  auto bits = encode(Assignment(6), c);
  const auto& [var, path] = *c.chains.chains.begin();
  bits[path[0]] = 1;
  bits[path[1]] = 1;
  const auto vote = decode(bits, c, DecodePolicy::majority_vote);
  REQUIRE(vote.feasible());
  CHECK(*vote.assignment == Assignment(6));
}

TEST_CASE("encoded states have zero penalty and the logical energy") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const bool fields = rng() & 1;
    const auto m = fields ? field_model(n, rng()) : z2_model(n, rng());
    const int k = static_cast<int>(rng() % n);
    const auto c = compile(m, k);
    const auto a = Assignment::from_index(rng() & ((1u << n) - 1), n);
    const auto bits = encode(a, c);
    CHECK(chains_intact(bits, c));
    const double logical = oracle::ising_energy(m, a.to_index());
    CHECK(std::abs(physical_energy(c.hamiltonian, bits, c.penalty) - logical) <= 1e-9);
    CHECK(std::abs(c.hamiltonian.energy(bits, c.penalty) - logical) <= 1e-9);
  }
}

TEST_CASE("feasible set cardinality and exhaustive equivalence") {
  for (int n = 3; n <= 5; ++n) {
    for (bool fields : {false, true}) {
      CAPTURE(n);
      CAPTURE(fields);
      const auto m = fields ? field_model(n, 7 * n) : z2_model(n, 7 * n);
      const auto c = compile(m, 1);
      const int nq = c.n_qubits();
      std::set<std::vector<std::uint8_t>> images;
      for (std::uint64_t s = 0; s < (1u << n); ++s) images.insert(encode(Assignment::from_index(s, n), c));
      std::uint64_t feasible = 0;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << nq); ++s) {
        const auto bits = bits_of(s, nq);
        if (chains_intact(bits, c)) {
          ++feasible;
          CHECK(images.count(bits) == 1);
        }
      }
      const std::uint64_t expected = fields ? (1u << n) : (1u << (n - 1));
      CHECK(feasible == expected);
      CHECK(images.size() == expected);

      const auto report = spectrum_equivalence(m, c, c.penalty);
      CHECK(report.feasible_count == expected);
      CHECK(report.bijection_ok);
      CHECK(report.energies_ok);
      CHECK(report.low_spectrum_ok);
      CHECK(report.energy_max_abs_error <= 1e-9);
      CHECK(report.passed());
    }
  }
}

TEST_CASE("single cell: four physical states match four logical classes") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 20; ++t) {
    LogicalIsing m(3);
    m.set_coupling(0, 1, u(rng));
    m.set_coupling(0, 2, u(rng));
    m.set_coupling(1, 2, u(rng));
    const auto c = compile(m, static_cast<int>(t % 3), 0.37);
    REQUIRE(c.n_qubits() == 2);
    std::multiset<long long> phys, logical;
    for (std::uint64_t s = 0; s < 4; ++s) {
      phys.insert(std::llround(1e9 * physical_energy(c.hamiltonian, bits_of(s, 2), 0.37)));
    }
    for (std::uint64_t s = 0; s < 8; s += 1) {
      if (s & 1) continue;  // one representative per flip pair
      logical.insert(std::llround(1e9 * oracle::ising_energy(m, s)));
    }
    CHECK(phys == logical);
    const auto report = spectrum_equivalence(m, c, 0.37);
    CHECK(report.bijection_ok);
    CHECK(report.energies_ok);
  }
}

TEST_CASE("zero penalty lets infeasible states intrude") {
  int intrusions = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = z2_model(4, seed);
    const auto c = compile(m, 0);
    CHECK(spectrum_equivalence(m, c, c.penalty).low_spectrum_ok);
    const auto zero = spectrum_equivalence(m, c, 0.0);
    CHECK(zero.energies_ok);
    intrusions += !zero.low_spectrum_ok;
  }
  CHECK(intrusions == 10);
}

TEST_CASE("minimal penalty examples") {
  LogicalIsing cell(3);
  cell.set_coupling(0, 1, 0.4);
  cell.set_coupling(1, 2, -0.9);
  const auto single = compile(cell, 0);
  CHECK(minimal_penalty(cell, single, PenaltyCriterion::ground_only) == 0.0);
  CHECK(minimal_penalty(cell, single, PenaltyCriterion::full_low_spectrum) == 0.0);

  const auto ferro = random_instance(5, Distribution::uniform(-1, -0.1), Distribution::zero(), 3);
  const auto cf = compile(ferro, 0);
  const double p = minimal_penalty(ferro, cf, PenaltyCriterion::ground_only);
  CHECK(p <= cf.penalty);
  CHECK(p < 0.5 * cf.penalty);
}

TEST_CASE("minimal penalty is monotone and ordered") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const bool fields = seed & 1;
    const auto m = fields ? field_model(4, seed) : z2_model(5, seed);
    const auto c = compile(m, static_cast<int>(seed % m.size()));
    const double ground = minimal_penalty(m, c, PenaltyCriterion::ground_only);
    const double full = minimal_penalty(m, c, PenaltyCriterion::full_low_spectrum);
    CHECK(ground <= full + 1e-12);
    CHECK(full <= c.penalty);

    const PhysicalEnumeration e(m, c);
    CHECK(e.criterion(PenaltyCriterion::full_low_spectrum, full));
    CHECK(e.criterion(PenaltyCriterion::full_low_spectrum, 2 * full));
    CHECK(e.criterion(PenaltyCriterion::ground_only, ground));
    CHECK(e.criterion(PenaltyCriterion::ground_only, 2 * ground));
    if (full > kPenaltyResolution) {
      CHECK_FALSE(e.criterion(PenaltyCriterion::full_low_spectrum, full - 2 * kPenaltyResolution));
    }
    CHECK(spectrum_equivalence(m, c, full).low_spectrum_ok);
  }
}

TEST_CASE("penalty criterion names") {
  CHECK(parse_penalty_criterion("ground_only") == PenaltyCriterion::ground_only);
  CHECK(parse_penalty_criterion(to_string(PenaltyCriterion::full_low_spectrum)) ==
        PenaltyCriterion::full_low_spectrum);
  CHECK_THROWS_AS(parse_penalty_criterion("both_ways"), InputError);
}
