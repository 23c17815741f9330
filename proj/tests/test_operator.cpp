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
#include "trianneal/error.hpp"
#include "trianneal/operator.hpp"

using namespace trianneal;

TEST_CASE("single Pauli actions") {
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(2);
  e0[0] = 1;
  Eigen::VectorXcd out;

  Operator(OperatorSpec(1).z(0, 1.0)).apply(e0, out);
  CHECK(out[0] == Complex(1, 0));

  Operator(OperatorSpec(1).x(0, 1.0)).apply(e0, out);
  CHECK(out[1] == Complex(1, 0));
  CHECK(out[0] == Complex(0, 0));

  OperatorSpec y(1);
  y.add({{0, Pauli::Y}}, 1.0);
  const Operator oy(y);
  CHECK_FALSE(oy.is_real());
  oy.apply(e0, out);
  CHECK(out[1] == Complex(0, 1));
  Eigen::VectorXd real_in = Eigen::VectorXd::Zero(2), real_out;
  CHECK_THROWS_AS(oy.apply(real_in, real_out), NumericalError);
}

TEST_CASE("matrix-free action matches Kronecker products") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto spec = oracle::random_spec(n, 1 + static_cast<int>(rng() % 12), rng);
    const Operator op(spec);
    const Eigen::MatrixXcd reference = oracle::kron_dense(spec);
    CHECK((op.dense() - reference).norm() <= 1e-12);

    Eigen::VectorXcd v = Eigen::VectorXcd::Random(reference.rows()), out;
    op.apply(v, out);
    CHECK((out - reference * v).norm() <= 1e-12);
    if (op.is_real()) {
      Eigen::VectorXd vr = v.real(), outr;
      op.apply(vr, outr);
      CHECK((outr - (reference * vr.cast<Complex>()).real()).norm() <= 1e-12);
    }
  }
}

TEST_CASE("Hermitian specs give Hermitian operators") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = oracle::random_spec(4, 10, rng);
    const Eigen::MatrixXcd m = Operator(spec).dense();
    CHECK((m - m.adjoint()).norm() <= 1e-12);
  }
}

TEST_CASE("Ising operator is diagonal with the classical energies") {
  const auto model = random_instance(5, Distribution::uniform(-1, 1), Distribution::uniform(-1, 1), 2);
  const Operator op(ising_operator(model));
  CHECK(op.is_diagonal());
  for (std::uint64_t s = 0; s < 32; ++s) {
    CHECK(op.diagonal()[s] == doctest::Approx(oracle::ising_energy(model, s)));
  }
}

TEST_CASE("combine and spec algebra") {
  std::mt19937_64 rng(5);
  const auto a = oracle::random_spec(4, 6, rng);
  const auto b = oracle::random_spec(4, 6, rng);
  const Operator c = Operator::combine(0.3, Operator(a), -1.7, Operator(b));
  const Eigen::MatrixXcd expected = 0.3 * oracle::kron_dense(a) - 1.7 * oracle::kron_dense(b);
  CHECK((c.dense() - expected).norm() <= 1e-12);
  CHECK((Operator(0.3 * a + (-1.7) * b).dense() - expected).norm() <= 1e-12);
  CHECK_THROWS_AS(a + OperatorSpec(3), DimensionError);
  CHECK_THROWS_AS(Operator::combine(1, Operator(a), 1, Operator(OperatorSpec(3).x(0, 1))), DimensionError);
}

TEST_CASE("drivers and strings") {
  const Operator d(standard_driver(3));
  Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(8, 1 / std::sqrt(8.0)), out;
  d.apply(plus, out);
  CHECK((out + 3 * plus).norm() <= 1e-12);

  const Operator s(x_string(3, {0, 2}));
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(8);
  e[0] = 1;
  s.apply(e, out);
  CHECK(out[5] == Complex(1, 0));
}

TEST_CASE("bounds and validation") {
  CHECK_THROWS_AS(Operator(OperatorSpec(0)), InputError);
  CHECK_THROWS_AS(Operator(OperatorSpec(2).x(2, 1.0)), InputError);
  CHECK_THROWS_AS(Operator(OperatorSpec(kMaxMatrixFreeQubits + 1)), ResourceError);
  CHECK_THROWS_AS(Operator(standard_driver(kMaxDenseQubits + 1)).dense(), ResourceError);
  Eigen::VectorXcd wrong = Eigen::VectorXcd::Zero(3), out;
  CHECK_THROWS_AS(Operator(standard_driver(2)).apply(wrong, out), DimensionError);
}
