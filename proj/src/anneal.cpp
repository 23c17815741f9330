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

#include "trianneal/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trianneal/drivers.hpp"
#include "trianneal/error.hpp"
#include "trianneal/parallel.hpp"

namespace trianneal {

void ScheduleSpec::validate() const {
  if (grid < 3) throw InputError("schedule grid must have at least 3 points");
  if (refinement < 0) throw InputError("schedule refinement must be >= 0");
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("lambda " + std::to_string(lambda) + " outside [0, 1]");
  }
}

void check_pair(const Operator& h0, const Operator& hf) {
  if (h0.n_qubits() != hf.n_qubits()) {
    throw DimensionError("initial and final Hamiltonians act on different qubit counts");
  }
}

double grid_point(int i, int grid) { return static_cast<double>(i) / (grid - 1); }

// Grid points per warm-started block. Fixed so results do not depend on the
// worker count.
constexpr int kBlock = 8;

double gap_at(const Operator& h0, const Operator& hf, double lambda,
              const std::optional<Sector>& sector, Eigen::VectorXcd* warm = nullptr) {
  EigenOptions opt;
  opt.sector = sector;
  if (warm && warm->size() > 0) opt.start = warm;
  GapResult r = distinct_gap(interpolate(h0, hf, lambda), opt);
  if (warm) *warm = std::move(r.ground_state);
  return r.gap;
}

}  // namespace

Operator interpolate(const Operator& h0, const Operator& hf, double lambda) {
  check_pair(h0, hf);
  check_lambda(lambda);
  return Operator::combine(1.0 - lambda, h0, lambda, hf);
}

EigenResult instantaneous_spectrum(const Operator& h0, const Operator& hf, double lambda, int k,
                                   bool vectors, const std::optional<Sector>& sector) {
  if (k < 1) throw InputError("k must be >= 1");
  EigenOptions opt;
  opt.k = k;
  opt.vectors = vectors;
  opt.sector = sector;
  return lowest_eigenpairs(interpolate(h0, hf, lambda), opt);
}

EigenResult instantaneous_spectrum(const OperatorSpec& h0, const OperatorSpec& hf,
                                   double lambda, int k, bool vectors,
                                   const std::optional<Sector>& sector) {
  return instantaneous_spectrum(Operator(h0), Operator(hf), lambda, k, vectors, sector);
}

std::optional<Sector> anneal_symmetry(const Operator& h0, const Operator& hf) {
  check_pair(h0, hf);
  if (!hf.is_diagonal()) return std::nullopt;
  const auto& diag = hf.diagonal();
  double scale = 1.0;
  for (double e : diag) scale = std::max(scale, std::abs(e));
  auto invariant = [&](std::uint64_t mask) {
    for (std::size_t b = 0; b < diag.size(); ++b) {
      if (std::abs(diag[b] - diag[b ^ mask]) > 1e-12 * scale) return false;
    }
    return true;
  };
  auto commutes = [&](std::uint64_t mask) {
    std::vector<int> sites;
    for (int q = 0; q < h0.n_qubits(); ++q) {
      if (mask >> q & 1u) sites.push_back(q);
    }
    return commutation_check(h0, Operator(x_string(h0.n_qubits(), sites))) <=
           kParityCommutatorBound;
  };
  const int n = hf.n_qubits();
  for (int q = 0; q < n; ++q) {
    const std::uint64_t mask = std::uint64_t{1} << q;
    if (invariant(mask) && commutes(mask)) return Sector{mask, 1};
  }
  const Sector global = Sector::even(n);
  if (invariant(global.flip_mask) && commutes(global.flip_mask)) return global;
  return std::nullopt;
}

MinimalGap minimal_gap(const Operator& h0, const Operator& hf, const ScheduleSpec& schedule,
                       const std::optional<Sector>& sector, unsigned workers) {
  schedule.validate();
  check_pair(h0, hf);

  MinimalGap out;
  out.lambdas.resize(schedule.grid);
  out.gaps.resize(schedule.grid);
  for (int i = 0; i < schedule.grid; ++i) out.lambdas[i] = grid_point(i, schedule.grid);
  const int blocks = (schedule.grid + kBlock - 1) / kBlock;
  parallel_for(
      blocks,
      [&](std::size_t b) {
        Eigen::VectorXcd warm;
        const int end = std::min<int>(schedule.grid, (static_cast<int>(b) + 1) * kBlock);
        for (int i = static_cast<int>(b) * kBlock; i < end; ++i) {
          out.gaps[i] = gap_at(h0, hf, out.lambdas[i], sector, &warm);
        }
      },
      workers);

  const auto best = std::min_element(out.gaps.begin(), out.gaps.end()) - out.gaps.begin();
  out.coarse_lambda = out.lambdas[best];
  out.coarse_gap = out.gaps[best];
  out.lambda_at_min = out.coarse_lambda;
  out.gap = out.coarse_gap;

  double lo = out.lambdas[std::max<long>(best - 1, 0)];
  double hi = out.lambdas[std::min<long>(best + 1, schedule.grid - 1)];
  constexpr double kInvPhi = 0.6180339887498949;
  auto consider = [&](double lambda, double gap) {
    if (gap < out.gap) {
      out.gap = gap;
      out.lambda_at_min = lambda;
    }
  };
  if (schedule.refinement > 0) {
    Eigen::VectorXcd warm;
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = gap_at(h0, hf, x1, sector, &warm);
    double f2 = gap_at(h0, hf, x2, sector, &warm);
    consider(x1, f1);
    consider(x2, f2);
    for (int it = 1; it < schedule.refinement; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kInvPhi * (hi - lo);
        f1 = gap_at(h0, hf, x1, sector, &warm);
        consider(x1, f1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kInvPhi * (hi - lo);
        f2 = gap_at(h0, hf, x2, sector, &warm);
        consider(x2, f2);
      }
    }
  }
  return out;
}

MinimalGap minimal_gap(const OperatorSpec& h0, const OperatorSpec& hf,
                       const ScheduleSpec& schedule, const std::optional<Sector>& sector,
                       unsigned workers) {
  return minimal_gap(Operator(h0), Operator(hf), schedule, sector, workers);
}

SpectrumTrace spectrum_trace(const Operator& h0, const Operator& hf, int grid, int k,
                             const std::optional<Sector>& sector, unsigned workers) {
  ScheduleSpec{grid, 0}.validate();
  check_pair(h0, hf);
  SpectrumTrace out;
  out.lambdas.resize(grid);
  out.levels.resize(grid);
  for (int i = 0; i < grid; ++i) out.lambdas[i] = grid_point(i, grid);
  parallel_for(
      grid,
      [&](std::size_t i) {
        out.levels[i] = instantaneous_spectrum(h0, hf, out.lambdas[i], k, false, sector).values;
      },
      workers);
  return out;
}

}  // namespace trianneal
