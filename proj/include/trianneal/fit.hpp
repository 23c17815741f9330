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

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace trianneal {

struct FitPoint {
  double x = 0.0;  ///< chain length l
  double y = 0.0;  ///< projection or gap
};

struct FitResult {
  std::vector<std::string> names;
  Eigen::VectorXd values;
  Eigen::MatrixXd covariance;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<std::string> flags;
  /// Quantities derived from the parameters, e.g. beta and its sigma.
  std::map<std::string, double> derived;

  double value(const std::string& name) const;
  double sigma(const std::string& name) const;
  bool has_flag(const std::string& flag) const;
};

/// log2(p) = -l / zeta + c by linear least squares. Parameters zeta and c;
/// derived beta = zeta - 1 and sigma_beta. Needs >= 3 points with p in (0, 1].
FitResult fit_projection_decay(const std::vector<FitPoint>& points);

/// gap(l) = A l^-Omega + delta_inf by Levenberg-Marquardt (Eigen's MINPACK port),
/// relative step tolerance 1e-10, at most 200 evaluations.
/// Parameters A, Omega, delta_inf. A negative delta_inf is reported as is and
/// flagged "delta_inf_negative". Needs >= 4 points with positive gaps.
FitResult fit_gap_extrapolation(const std::vector<FitPoint>& points);

}  // namespace trianneal
