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

#include "trianneal/eigensolver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "trianneal/error.hpp"

namespace trianneal {

namespace {

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
void project(Vec<Scalar>& v, const std::optional<Sector>& sector) {
  if (!sector || sector->flip_mask == 0) return;
  const std::uint64_t mask = sector->flip_mask;
  const double p = sector->parity >= 0 ? 1.0 : -1.0;
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    const auto partner = static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ mask);
    if (partner < b) continue;
    const Scalar x = v[b];
    const Scalar y = v[partner];
    v[b] = 0.5 * (x + p * y);
    v[partner] = 0.5 * (y + p * x);
  }
}

template <class Scalar>
Vec<Scalar> random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vec<Scalar> v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<Scalar, double>) {
      v[i] = normal(rng);
    } else {
      v[i] = Scalar(normal(rng), normal(rng));
    }
  }
  return v;
}

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Classical Gram-Schmidt against the first `cols` columns.
template <class Scalar>
void orthogonalize(Vec<Scalar>& w, const Mat<Scalar>& basis, Eigen::Index cols) {
  if (cols == 0) return;
  // A second pass is needed only after heavy cancellation (DGKS criterion).
  for (int pass = 0; pass < 2; ++pass) {
    const double before = w.norm();
    const Vec<Scalar> coeff = basis.leftCols(cols).adjoint() * w;
    w.noalias() -= basis.leftCols(cols) * coeff;
    if (w.norm() > 0.7071 * before) break;
  }
}

// Residual estimate |next_beta * y_last| of the lowest Ritz pair of the
// current tridiagonal matrix. Eigenvalues only, then inverse iteration for
// the eigenvector.
double ritz_residual_estimate(const std::vector<double>& alpha, const std::vector<double>& beta,
                              double next_beta) {
  const auto m = static_cast<Eigen::Index>(alpha.size());
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), m - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small;
  small.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, small.eigenvalues().cwiseAbs().maxCoeff());
  const double shift = small.eigenvalues()(0) - 1e-10 * scale;

  // Thomas algorithm on (T - shift) y = rhs, two sweeps from a flat start.
  Eigen::VectorXd y = Eigen::VectorXd::Ones(m);
  Eigen::VectorXd c(m), d(m);
  for (int sweep = 0; sweep < 2; ++sweep) {
    double denom = alpha[0] - shift;
    c[0] = m > 1 ? beta[0] / denom : 0.0;
    d[0] = y[0] / denom;
    for (Eigen::Index i = 1; i < m; ++i) {
      denom = alpha[i] - shift - beta[i - 1] * c[i - 1];
      if (denom == 0.0) denom = 1e-300;
      c[i] = i + 1 < m ? beta[i] / denom : 0.0;
      d[i] = (y[i] - beta[i - 1] * d[i - 1]) / denom;
    }
    y[m - 1] = d[m - 1];
    for (Eigen::Index i = m - 2; i >= 0; --i) y[i] = d[i] - c[i] * y[i + 1];
    const double norm = y.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) return std::numeric_limits<double>::infinity();
    y /= norm;
  }
  return next_beta * std::abs(y[m - 1]);
}

template <class Scalar>
Vec<Scalar> convert_start(const Eigen::VectorXcd& start) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return start.real();
  } else {
    return start;
  }
}

template <class Scalar>
EigenResult lanczos(const Operator& op, const EigenOptions& opt, std::size_t effective_dim) {
  const std::size_t dim = op.dimension();
  std::mt19937_64 rng(opt.seed);
  const auto n_rows = static_cast<Eigen::Index>(dim);
  Mat<Scalar> locked(n_rows, opt.k);
  Eigen::Index n_locked = 0;
  EigenResult result;
  result.method_used = EigenMethod::lanczos;

  auto apply = [&](const Vec<Scalar>& in, Vec<Scalar>& out) {
    op.apply(in, out);
    project(out, opt.sector);
  };

  bool first_pass = true;
  Vec<Scalar> next_seed;
  while (n_locked < opt.k) {
    // Later passes start from the next Ritz vector of the previous Krylov
    // space plus a random component, so copies of a degenerate level that
    // were invisible to that space are still reachable.
    Vec<Scalar> v;
    if (first_pass && opt.start && static_cast<std::size_t>(opt.start->size()) == dim) {
      v = convert_start<Scalar>(*opt.start);
    } else {
      v = random_vector<Scalar>(dim, rng);
      if (next_seed.size() == v.size()) {
        v = next_seed + (1e-2 / std::max(v.norm(), 1e-300)) * v;
      }
    }
    first_pass = false;
    project(v, opt.sector);
    orthogonalize(v, locked, n_locked);
    if (v.norm() < 1e-12) {
      v = random_vector<Scalar>(dim, rng);
      project(v, opt.sector);
      orthogonalize(v, locked, n_locked);
    }
    v.normalize();

    bool converged = false;
    double last_residual = 0.0;
    double last_theta = 0.0;
    for (int restart = 0; restart <= opt.max_restarts && !converged; ++restart) {
      const std::size_t remaining = effective_dim - static_cast<std::size_t>(n_locked);
      const std::size_t m_max = std::min<std::size_t>(opt.krylov_dimension, remaining);

      Mat<Scalar> basis(n_rows, static_cast<Eigen::Index>(m_max));
      basis.col(0) = v;
      std::vector<double> alpha, beta;
      Vec<Scalar> w;
      for (std::size_t j = 0; j < m_max; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        apply(basis.col(jj), w);
        const double a = std::real(basis.col(jj).dot(w));
        alpha.push_back(a);
        orthogonalize(w, locked, n_locked);
        orthogonalize(w, basis, jj + 1);
        const double b = w.norm();
        if (j + 1 == m_max || b < 1e-12 * std::max(1.0, std::abs(a))) break;
        // Stop early once the lowest Ritz pair's residual estimate
        // |beta_j y_j| is well inside tolerance.
        if (j >= 4 && j % 5 == 4 && ritz_residual_estimate(alpha, beta, b) <=
                                        0.1 * opt.tolerance * std::max(1.0, std::abs(a))) {
          break;
        }
        beta.push_back(b);
        basis.col(jj + 1) = w / b;
      }

      const auto m = static_cast<Eigen::Index>(alpha.size());
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (Eigen::Index i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
      const double theta = small.eigenvalues()(0);
      Vec<Scalar> u = basis.leftCols(m) * small.eigenvectors().col(0).template cast<Scalar>();
      orthogonalize(u, locked, n_locked);
      u.normalize();

      Vec<Scalar> hu;
      apply(u, hu);
      const double residual = (hu - theta * u).norm();
      last_residual = residual;
      last_theta = theta;
      if (residual <= opt.tolerance * std::max(1.0, std::abs(theta))) {
        next_seed.resize(0);
        if (m >= 2) {
          next_seed = basis.leftCols(m) * small.eigenvectors().col(1).template cast<Scalar>();
          const double norm = next_seed.norm();
          if (norm > 0.0) next_seed /= norm;
        }
        locked.col(n_locked++) = u;
        result.values.push_back(theta);
        result.residuals.push_back(residual);
        converged = true;
      } else {
        v = u;
      }
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "Lanczos did not converge for eigenpair " << n_locked << ": theta = "
          << last_theta << ", residual = " << last_residual << " after "
          << opt.max_restarts << " restarts";
      throw NumericalError(msg.str());
    }
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n_locked));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return result.values[a] < result.values[b]; });
  EigenResult sorted;
  sorted.method_used = EigenMethod::lanczos;
  for (std::size_t i : order) {
    sorted.values.push_back(result.values[i]);
    sorted.residuals.push_back(result.residuals[i]);
    if (opt.vectors) sorted.vectors.push_back(locked.col(static_cast<Eigen::Index>(i)).template cast<Complex>());
  }
  return sorted;
}

EigenResult dense_solve(const Operator& op, const EigenOptions& opt) {
  const Eigen::MatrixXcd h = op.dense();
  const auto dim = static_cast<Eigen::Index>(op.dimension());
  Eigen::MatrixXcd basis;
  if (opt.sector && opt.sector->flip_mask != 0) {
    const std::uint64_t mask = opt.sector->flip_mask;
    const std::uint64_t low = mask & (~mask + 1);
    const double p = opt.sector->parity >= 0 ? 1.0 : -1.0;
    basis = Eigen::MatrixXcd::Zero(dim, dim / 2);
    Eigen::Index col = 0;
    for (Eigen::Index b = 0; b < dim; ++b) {
      if (static_cast<std::uint64_t>(b) & low) continue;
      basis(b, col) = M_SQRT1_2;
      basis(static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ mask), col) = p * M_SQRT1_2;
      ++col;
    }
  } else {
    basis = Eigen::MatrixXcd::Identity(dim, dim);
  }
  const Eigen::MatrixXcd reduced = basis.adjoint() * h * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced);
  EigenResult result;
  result.method_used = EigenMethod::dense;
  const Eigen::Index k = std::min<Eigen::Index>(opt.k, reduced.rows());
  for (Eigen::Index i = 0; i < k; ++i) {
    result.values.push_back(solver.eigenvalues()(i));
    const Eigen::VectorXcd v = basis * solver.eigenvectors().col(i);
    result.residuals.push_back((h * v - solver.eigenvalues()(i) * v).norm());
    if (opt.vectors) result.vectors.push_back(v);
  }
  return result;
}

}  // namespace

void project_sector(Eigen::VectorXcd& v, const Sector& sector) {
  project<Complex>(v, sector);
}

std::size_t sector_dimension(std::size_t dim, const std::optional<Sector>& sector) {
  return (sector && sector->flip_mask != 0) ? dim / 2 : dim;
}

EigenResult lowest_eigenpairs(const Operator& op, const EigenOptions& options) {
  const std::size_t effective = sector_dimension(op.dimension(), options.sector);
  if (options.k < 1 || static_cast<std::size_t>(options.k) > effective) {
    throw InputError("requested " + std::to_string(options.k) +
                     " eigenvalues from a space of dimension " + std::to_string(effective));
  }
  if (options.sector && options.sector->flip_mask >> op.n_qubits() != 0) {
    throw InputError("sector mask touches qubits outside the operator");
  }

  EigenMethod method = options.method;
  if (method == EigenMethod::automatic) {
    method = op.n_qubits() <= 6 ? EigenMethod::dense : EigenMethod::lanczos;
  }
  if (method == EigenMethod::dense) return dense_solve(op, options);

  try {
    return op.is_real() ? lanczos<double>(op, options, effective)
                        : lanczos<Complex>(op, options, effective);
  } catch (const NumericalError&) {
    if (options.method == EigenMethod::automatic && op.n_qubits() <= kMaxDenseQubits) {
      return dense_solve(op, options);
    }
    throw;
  }
}

GapResult distinct_gap(const Operator& op, EigenOptions options) {
  const std::size_t effective = sector_dimension(op.dimension(), options.sector);
  options.vectors = true;
  int k = std::max(2, options.k);
  while (true) {
    options.k = static_cast<int>(std::min<std::size_t>(k, effective));
    const EigenResult r = lowest_eigenpairs(op, options);
    for (std::size_t i = 1; i < r.values.size(); ++i) {
      if (r.values[i] - r.values[0] > kEnergyTolerance) {
        return {r.values[0], r.values[i], r.values[i] - r.values[0], r.vectors[0]};
      }
    }
    if (static_cast<std::size_t>(options.k) >= effective) {
      throw NumericalError("spectrum has a single level; gap undefined");
    }
    k *= 2;
  }
}

}  // namespace trianneal
