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

#include "trianneal/fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/LevenbergMarquardt>

#include "trianneal/error.hpp"

namespace trianneal {

namespace {

std::size_t index_of(const FitResult& fit, const std::string& name) {
  const auto it = std::find(fit.names.begin(), fit.names.end(), name);
  if (it == fit.names.end()) throw InputError("fit has no parameter '" + name + "'");
  return static_cast<std::size_t>(it - fit.names.begin());
}

// (J^T J)^+ scaled by the residual variance; zero when the data are exact.
Eigen::MatrixXd covariance_from(const Eigen::MatrixXd& jac, double rss) {
  const Eigen::Index n = jac.rows();
  const Eigen::Index p = jac.cols();
  const double variance = n > p ? rss / static_cast<double>(n - p) : 0.0;
  const Eigen::MatrixXd normal = jac.transpose() * jac;
  Eigen::MatrixXd inv = normal.completeOrthogonalDecomposition().pseudoInverse();
  Eigen::MatrixXd cov = variance * inv;
  return 0.5 * (cov + cov.transpose());
}

// Residuals A l^-Omega + delta_inf - y over p = (A, Omega, delta_inf).
struct PowerLawModel : Eigen::DenseFunctor<double> {
  PowerLawModel(const Eigen::VectorXd& l, const Eigen::VectorXd& y)
      : Eigen::DenseFunctor<double>(3, static_cast<int>(l.size())), l_(l), y_(y) {}

  int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& r) const {
    r = (p[0] * (-p[1] * l_.array().log()).exp() + p[2] - y_.array()).matrix();
    return 0;
  }

  int df(const Eigen::VectorXd& p, Eigen::MatrixXd& jac) const {
    const Eigen::ArrayXd power = (-p[1] * l_.array().log()).exp();
    jac.resize(l_.size(), 3);
    jac.col(0) = power.matrix();
    jac.col(1) = (-p[0] * l_.array().log() * power).matrix();
    jac.col(2).setOnes();
    return 0;
  }

  Eigen::VectorXd l_, y_;
};

}  // namespace

double FitResult::value(const std::string& name) const { return values[index_of(*this, name)]; }

double FitResult::sigma(const std::string& name) const {
  const auto i = static_cast<Eigen::Index>(index_of(*this, name));
  return std::sqrt(std::max(0.0, covariance(i, i)));
}

bool FitResult::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

FitResult fit_projection_decay(const std::vector<FitPoint>& points) {
  if (points.size() < 3) throw InputError("projection fit needs at least 3 points");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd x(n, 2);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& pt = points[i];
    if (!(pt.y > 0.0) || pt.y > 1.0 + 1e-12) {
      throw InputError("projection at l=" + std::to_string(pt.x) + " is outside (0, 1]");
    }
    x(i, 0) = pt.x;
    x(i, 1) = 1.0;
    y[i] = std::log2(pt.y);
  }
  const Eigen::Vector2d coef = x.colPivHouseholderQr().solve(y);
  const double rss = (x * coef - y).squaredNorm();
  const Eigen::Matrix2d cov_linear = covariance_from(x, rss);

  const double slope = coef[0];
  if (slope == 0.0) throw NumericalError("projection does not decay with l; zeta is unbounded");

  FitResult fit;
  fit.names = {"zeta", "c"};
  fit.values = Eigen::Vector2d(-1.0 / slope, coef[1]);
  // zeta = -1/slope, so d zeta / d slope = 1/slope^2.
  const double g = 1.0 / (slope * slope);
  fit.covariance.resize(2, 2);
  fit.covariance(0, 0) = g * g * cov_linear(0, 0);
  fit.covariance(0, 1) = fit.covariance(1, 0) = g * cov_linear(0, 1);
  fit.covariance(1, 1) = cov_linear(1, 1);
  fit.residual_norm = std::sqrt(rss);
  fit.iterations = 1;
  fit.converged = true;
  if (slope > 0.0) fit.flags.push_back("projection_growing");
  fit.derived["beta"] = fit.values[0] - 1.0;
  fit.derived["sigma_beta"] = fit.sigma("zeta");
  return fit;
}

FitResult fit_gap_extrapolation(const std::vector<FitPoint>& points) {
  if (points.size() < 4) throw InputError("gap extrapolation needs at least 4 points");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::VectorXd l(n), y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(points[i].y > 0.0)) {
      throw InputError("gap at l=" + std::to_string(points[i].x) + " is not positive");
    }
    if (!(points[i].x > 0.0)) throw InputError("chain lengths must be positive");
    l[i] = points[i].x;
    y[i] = points[i].y;
  }

  PowerLawModel model(l, y);
  Eigen::Index first = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (l[i] < l[first]) first = i;
  }
  Eigen::VectorXd p(3);
  p[2] = 0.9 * y.minCoeff();
  p[1] = 1.0;
  p[0] = (y[first] - p[2]) * l[first];

  Eigen::LevenbergMarquardt<PowerLawModel> solver(model);
  solver.setXtol(1e-10);
  solver.setMaxfev(200);
  const auto status = solver.minimize(p);
  Eigen::VectorXd r(n);
  model(p, r);
  const double cost = r.squaredNorm();
  const bool converged = status != Eigen::LevenbergMarquardtSpace::TooManyFunctionEvaluation &&
                         status != Eigen::LevenbergMarquardtSpace::ImproperInputParameters &&
                         p.allFinite();
  if (!converged) {
    std::ostringstream msg;
    msg << "gap extrapolation did not converge (status " << static_cast<int>(status) << ") after "
        << solver.iterations() << " iterations; last A=" << p[0] << " Omega=" << p[1]
        << " delta_inf=" << p[2] << " residual=" << std::sqrt(cost);
    throw NumericalError(msg.str());
  }
  Eigen::MatrixXd jac(n, 3);
  model.df(p, jac);

  FitResult fit;
  fit.names = {"A", "Omega", "delta_inf"};
  fit.values = p;
  fit.covariance = covariance_from(jac, cost);
  fit.residual_norm = std::sqrt(cost);
  fit.iterations = static_cast<int>(solver.iterations());
  fit.converged = true;
  if (p[2] < 0.0) fit.flags.push_back("delta_inf_negative");
  return fit;
}

}  // namespace trianneal
