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

#include <random>

#include "oracles.hpp"
#include "trianneal/eigensolver.hpp"
#include "trianneal/error.hpp"

using namespace trianneal;

namespace {

OperatorSpec transverse_ising(int n, double field, std::uint64_t seed) {
  const auto model = random_instance(n, Distribution::uniform(-1, 1), Distribution::zero(), seed);
  return ising_operator(model) + field * standard_driver(n);
}

// Eigenvalues of the dense matrix restricted to a sector by the projector.
std::vector<double> sector_eigenvalues(const Eigen::MatrixXcd& h, const Sector& s) {
  const Eigen::Index dim = h.rows();
  std::vector<Eigen::VectorXcd> basis;
  std::vector<bool> seen(dim, false);
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (seen[b]) continue;
    const Eigen::Index partner = b ^ static_cast<Eigen::Index>(s.flip_mask);
    seen[b] = seen[partner] = true;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[b] += 1;
    v[partner] += s.parity;
    if (v.norm() > 0) basis.push_back(v.normalized());
  }
  Eigen::MatrixXcd p(dim, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) p.col(i) = basis[i];
  return oracle::dense_eigenvalues(p.adjoint() * h * p);
}

}  // namespace

TEST_CASE("Lanczos agrees with dense diagonalization") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + trial % 6;
    const auto spec = trial % 2 ? transverse_ising(n, 0.7, trial) : oracle::random_spec(n, 3 * n, rng);
    const auto reference = oracle::dense_eigenvalues(oracle::kron_dense(spec));
    EigenOptions o;
    o.k = 4;
    o.method = EigenMethod::lanczos;
    o.vectors = true;
    const auto r = lowest_eigenpairs(Operator(spec), o);
    REQUIRE(r.values.size() == 4);
    const Operator op(spec);
    for (int i = 0; i < 4; ++i) {
      CHECK(r.values[i] == doctest::Approx(reference[i]).epsilon(1e-8));
      // Rayleigh quotient and residual of the returned vector.
      Eigen::VectorXcd hv;
      op.apply(r.vectors[i], hv);
      CHECK(std::abs(r.vectors[i].norm() - 1) <= 1e-9);
      CHECK(r.vectors[i].dot(hv).real() == doctest::Approx(r.values[i]).epsilon(1e-8));
      CHECK((hv - r.values[i] * r.vectors[i]).norm() <= 1e-6);
    }
  }
}

TEST_CASE("degenerate levels keep their multiplicity") {
  // -sum X on 6 qubits: levels -6 (1), -4 (6), -2 (15).
  EigenOptions o;
  o.k = 8;
  o.method = EigenMethod::lanczos;
  const auto r = lowest_eigenpairs(Operator(standard_driver(6)), o);
  REQUIRE(r.values.size() == 8);
  CHECK(r.values[0] == doctest::Approx(-6));
  for (int i = 1; i <= 6; ++i) CHECK(r.values[i] == doctest::Approx(-4));
  CHECK(r.values[7] == doctest::Approx(-2));

  // A classical field-free model is doubly degenerate at every level.
  const auto classical = random_instance(7, Distribution::uniform(-1, 1), Distribution::zero(), 4);
  const auto energies = oracle::sorted_energies(classical);
  const auto c = lowest_eigenpairs(Operator(ising_operator(classical)), o);
  for (int i = 0; i < 8; ++i) CHECK(c.values[i] == doctest::Approx(energies[i]));
}

TEST_CASE("dense and automatic methods") {
  const auto spec = transverse_ising(5, 0.4, 9);
  const auto reference = oracle::dense_eigenvalues(oracle::kron_dense(spec));
  for (auto m : {EigenMethod::dense, EigenMethod::automatic}) {
    EigenOptions o;
    o.k = 3;
    o.method = m;
    const auto r = lowest_eigenpairs(Operator(spec), o);
    for (int i = 0; i < 3; ++i) CHECK(r.values[i] == doctest::Approx(reference[i]));
  }
}

TEST_CASE("sector-restricted spectra") {
  for (int n : {4, 7}) {
    const auto spec = transverse_ising(n, 0.8, n);
    const Eigen::MatrixXcd h = oracle::kron_dense(spec);
    for (int parity : {1, -1}) {
      const Sector s{Sector::even(n).flip_mask, parity};
      const auto reference = sector_eigenvalues(h, s);
      EigenOptions o;
      o.k = 3;
      o.sector = s;
      o.vectors = true;
      o.method = EigenMethod::lanczos;
      const auto r = lowest_eigenpairs(Operator(spec), o);
      for (int i = 0; i < 3; ++i) CHECK(r.values[i] == doctest::Approx(reference[i]).epsilon(1e-8));
      Eigen::VectorXcd v = r.vectors[0];
      project_sector(v, s);
      CHECK((v - r.vectors[0]).norm() <= 1e-8);
    }
  }
  CHECK(sector_dimension(64, Sector::even(6)) == 32);
  CHECK(sector_dimension(64, std::nullopt) == 64);
}

TEST_CASE("distinct gap skips degeneracy") {
  // Classical model: bottom level is a flip pair.
  const auto classical = random_instance(6, Distribution::uniform(-1, 1), Distribution::zero(), 2);
  const auto energies = oracle::sorted_energies(classical);
  EigenOptions o;
  const auto g = distinct_gap(Operator(ising_operator(classical)), o);
  double next = energies[0];
  for (double e : energies) {
    if (e > energies[0] + 1e-9) {
      next = e;
      break;
    }
  }
  CHECK(g.ground_energy == doctest::Approx(energies[0]));
  CHECK(g.gap == doctest::Approx(next - energies[0]));

  const auto d = distinct_gap(Operator(standard_driver(5)), o);
  CHECK(d.gap == doctest::Approx(2));
  CHECK(d.ground_state.size() == 32);
}

TEST_CASE("warm start gives the same answer") {
  const auto spec = transverse_ising(9, 0.5, 3);
  EigenOptions o;
  o.vectors = true;
  o.method = EigenMethod::lanczos;
  const auto cold = lowest_eigenpairs(Operator(spec), o);
  EigenOptions w = o;
  w.start = &cold.vectors[0];
  const auto warm = lowest_eigenpairs(Operator(transverse_ising(9, 0.52, 3)), w);
  const auto reference = oracle::dense_eigenvalues(oracle::kron_dense(transverse_ising(9, 0.52, 3)));
  CHECK(warm.values[0] == doctest::Approx(reference[0]).epsilon(1e-9));
}

TEST_CASE("invalid requests") {
  EigenOptions o;
  o.k = 0;
  CHECK_THROWS_AS(lowest_eigenpairs(Operator(standard_driver(3)), o), InputError);
  o.k = 9;
  CHECK_THROWS(lowest_eigenpairs(Operator(standard_driver(3)), o));
}
