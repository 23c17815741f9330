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

#include <cmath>

#include "trianneal/drivers.hpp"
#include "trianneal/eigensolver.hpp"
#include "trianneal/error.hpp"
#include "trianneal/fit.hpp"

using namespace trianneal;

TEST_CASE("projection decay recovers exact data") {
  std::vector<FitPoint> baseline, slow;
  for (int l = 4; l <= 16; l += 2) {
    baseline.push_back({double(l), std::pow(2.0, -l + 1.0)});
    slow.push_back({double(l), std::pow(2.0, -l / 2.0 + 1.0)});
  }
  const auto b = fit_projection_decay(baseline);
  CHECK(b.value("zeta") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.value("c") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(b.derived.at("beta")) <= 1e-12);
  CHECK(b.residual_norm <= 1e-12);
  CHECK(b.sigma("zeta") <= 1e-9);

  const auto s = fit_projection_decay(slow);
  CHECK(s.value("zeta") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.derived.at("beta") == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("projection decay covariance from noisy data") {
  std::vector<FitPoint> pts = {{4, 0.30}, {6, 0.12}, {8, 0.05}, {10, 0.018}};
  const auto r = fit_projection_decay(pts);
  CHECK(r.covariance.rows() == 2);
  CHECK((r.covariance - r.covariance.transpose()).norm() <= 1e-15);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.covariance);
  CHECK(es.eigenvalues().minCoeff() >= -1e-15);
  CHECK(r.sigma("zeta") > 0);
  CHECK(r.derived.at("sigma_beta") == doctest::Approx(r.sigma("zeta")));
}

TEST_CASE("projection decay preconditions") {
  CHECK_THROWS_AS(fit_projection_decay({{1, 0.5}, {2, 0.25}}), InputError);
  CHECK_THROWS_AS(fit_projection_decay({{1, 0.5}, {2, 0.0}, {3, 0.1}}), InputError);
  CHECK_THROWS_AS(fit_projection_decay({{1, 0.5}, {2, 1.5}, {3, 0.1}}), InputError);
}

TEST_CASE("gap extrapolation recovers exact data") {
  std::vector<FitPoint> pts;
  for (int l = 6; l <= 16; l += 2) pts.push_back({double(l), 2.0 * std::pow(l, -1.5) + 0.3});
  const auto r = fit_gap_extrapolation(pts);
  CHECK(r.converged);
  CHECK(r.value("A") == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(r.value("Omega") == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(r.value("delta_inf") == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(r.covariance.rows() == 3);
  CHECK_FALSE(r.has_flag("delta_inf_negative"));
}

TEST_CASE("negative asymptote is flagged, not clamped") {
  std::vector<FitPoint> pts;
  for (int l = 4; l <= 14; l += 2) pts.push_back({double(l), 3.0 * std::pow(l, -0.5) - 0.2});
  const auto r = fit_gap_extrapolation(pts);
  CHECK(r.value("delta_inf") == doctest::Approx(-0.2).epsilon(1e-5));
  CHECK(r.has_flag("delta_inf_negative"));
}

TEST_CASE("gap extrapolation preconditions") {
  CHECK_THROWS_AS(fit_gap_extrapolation({{1, 1}, {2, 0.5}, {3, 0.4}}), InputError);
  CHECK_THROWS_AS(fit_gap_extrapolation({{1, 1}, {2, 0.5}, {3, 0.4}, {4, -0.1}}), InputError);
}

TEST_CASE("TFIM ground states are biased toward the logical subspace") {
  std::vector<FitPoint> pts;
  for (int l = 4; l <= 16; l += 2) {
    EigenOptions o;
    o.vectors = true;
    o.sector = Sector::even(l);
    const auto r = lowest_eigenpairs(Operator(chain_driver(DriverSpec::tfim(0.9), l)), o);
    pts.push_back({double(l), logical_projection(r.vectors[0], l)});
  }
  const auto fit = fit_projection_decay(pts);
  CHECK(fit.value("zeta") > 1.0);
  CHECK(fit.derived.at("beta") > 0.0);
}

TEST_CASE("unknown parameter names") {
  std::vector<FitPoint> pts = {{4, 0.3}, {6, 0.1}, {8, 0.04}};
  const auto r = fit_projection_decay(pts);
  CHECK_THROWS_AS(r.value("Omega"), InputError);
}
