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

#include <optional>
#include <vector>

#include "trianneal/eigensolver.hpp"
#include "trianneal/operator.hpp"

namespace trianneal {

/// Linear schedule lambda(t) = t / t_f sampled on a uniform grid over [0, 1].
struct ScheduleSpec {
  int grid = 101;        ///< coarse lambda samples, >= 3
  int refinement = 30;   ///< golden-section iterations around the coarse minimum

  void validate() const;
};

/// (1 - lambda) h0 + lambda hf.
Operator interpolate(const Operator& h0, const Operator& hf, double lambda);

/// k lowest eigenvalues of the interpolated Hamiltonian, ascending.
EigenResult instantaneous_spectrum(const Operator& h0, const Operator& hf, double lambda, int k,
                                   bool vectors = false,
                                   const std::optional<Sector>& sector = std::nullopt);
EigenResult instantaneous_spectrum(const OperatorSpec& h0, const OperatorSpec& hf,
                                   double lambda, int k, bool vectors = false,
                                   const std::optional<Sector>& sector = std::nullopt);

/// X-string symmetry shared by a diagonal final Hamiltonian and the driver:
/// the flip of a single qubit the diagonal does not depend on, else the
/// global flip. Candidates are confirmed against h0 with commutation_check.
std::optional<Sector> anneal_symmetry(const Operator& h0, const Operator& hf);

struct MinimalGap {
  double lambda_at_min = 0.0;
  double gap = 0.0;
  double coarse_lambda = 0.0;
  double coarse_gap = 0.0;
  std::vector<double> lambdas;  ///< coarse grid
  std::vector<double> gaps;     ///< distinct-level gap at each grid point
};

/// Smallest E1 - E0 along the schedule: coarse scan, then golden-section
/// search on the bracket around the coarse minimum. The returned gap is the
/// smallest value evaluated, so it never exceeds the coarse minimum.
MinimalGap minimal_gap(const Operator& h0, const Operator& hf, const ScheduleSpec& schedule,
                       const std::optional<Sector>& sector = std::nullopt,
                       unsigned workers = 0);
MinimalGap minimal_gap(const OperatorSpec& h0, const OperatorSpec& hf,
                       const ScheduleSpec& schedule,
                       const std::optional<Sector>& sector = std::nullopt,
                       unsigned workers = 0);

/// The k lowest levels at every grid point, for plotting (lambda, E0..Ek-1).
struct SpectrumTrace {
  std::vector<double> lambdas;
  std::vector<std::vector<double>> levels;
};

SpectrumTrace spectrum_trace(const Operator& h0, const Operator& hf, int grid, int k,
                             const std::optional<Sector>& sector = std::nullopt,
                             unsigned workers = 0);

}  // namespace trianneal
