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

#include "trianneal/driver_scan.hpp"

#include <cmath>
#include <limits>

#include "trianneal/eigensolver.hpp"
#include "trianneal/error.hpp"
#include "trianneal/parallel.hpp"

namespace trianneal {

std::string to_string(GapSector sector) {
  return sector == GapSector::even ? "even" : "any";
}

GapSector parse_gap_sector(const std::string& text) {
  if (text == "even") return GapSector::even;
  if (text == "any") return GapSector::any;
  throw InputError("unknown gap sector '" + text + "' (even | any)");
}

ChainPoint chain_point(const DriverSpec& driver, int l, GapSector sector) {
  if (l < 2 || l > kMaxChainLength) {
    throw InputError("chain length " + std::to_string(l) + " outside [2, " +
                     std::to_string(kMaxChainLength) + "]");
  }
  const Operator h(chain_driver(driver, l));
  EigenOptions opt;
  opt.sector = Sector::even(l);
  const GapResult even = distinct_gap(h, opt);

  ChainPoint out;
  out.l = l;
  out.ground_energy = even.ground_energy;
  out.projection = logical_projection(even.ground_state.normalized(), l);
  out.gap = even.gap;
  if (sector == GapSector::any) {
    EigenOptions odd_opt;
    odd_opt.sector = Sector{opt.sector->flip_mask, -1};
    const double odd_ground = lowest_eigenpairs(h, odd_opt).values.front();
    const double odd_gap = odd_ground - even.ground_energy;
    if (odd_gap > kEnergyTolerance && odd_gap < out.gap) out.gap = odd_gap;
  }
  return out;
}

void DriverScanConfig::validate() const {
  if (j_zz.empty() || alpha.empty()) throw InputError("driver scan grid is empty");
  if (lengths.size() < 4) throw InputError("driver scan needs at least 4 chain lengths");
  for (double j : j_zz) DriverSpec::xyz(j, 0.0).validate();
  for (double a : alpha) DriverSpec::xyz(0.0, a).validate();
  for (int l : lengths) {
    if (l < 2 || l > kMaxChainLength) {
      throw InputError("chain length " + std::to_string(l) + " outside [2, " +
                       std::to_string(kMaxChainLength) + "]");
    }
  }
}

double DriverScanRow::beta() const {
  return projection_fit ? projection_fit->derived.at("beta")
                        : std::numeric_limits<double>::quiet_NaN();
}

double DriverScanRow::delta_inf() const {
  return gap_fit ? gap_fit->value("delta_inf") : std::numeric_limits<double>::quiet_NaN();
}

double DriverScanRow::gap_at_lmax() const {
  const ChainPoint* best = nullptr;
  for (const auto& p : points) {
    if (!best || p.l > best->l) best = &p;
  }
  return best ? best->gap : std::numeric_limits<double>::quiet_NaN();
}

std::vector<DriverScanRow> driver_scan(const DriverScanConfig& config) {
  config.validate();
  std::vector<DriverScanRow> rows;
  for (double j : config.j_zz) {
    for (double a : config.alpha) {
      DriverScanRow row;
      row.j_zz = j;
      row.alpha = a;
      rows.push_back(row);
    }
  }

  parallel_for(
      rows.size(),
      [&](std::size_t i) {
        DriverScanRow& row = rows[i];
        const DriverSpec driver = DriverSpec::xyz(row.j_zz, row.alpha);
        std::vector<FitPoint> projections, gaps;
        for (int l : config.lengths) {
          row.points.push_back(chain_point(driver, l, config.gap_sector));
          projections.push_back({static_cast<double>(l), row.points.back().projection});
          gaps.push_back({static_cast<double>(l), row.points.back().gap});
        }
        try {
          row.projection_fit = fit_projection_decay(projections);
          for (const auto& f : row.projection_fit->flags) row.flags.push_back(f);
        } catch (const Error&) {
          row.flags.push_back("projection_fit_failed");
        }
        try {
          row.gap_fit = fit_gap_extrapolation(gaps);
          for (const auto& f : row.gap_fit->flags) row.flags.push_back(f);
        } catch (const Error&) {
          row.flags.push_back("gap_fit_failed");
        }
      },
      config.workers);
  return rows;
}

}  // namespace trianneal
