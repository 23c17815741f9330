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
#include <string>
#include <vector>

#include "trianneal/drivers.hpp"
#include "trianneal/fit.hpp"

namespace trianneal {

/// Which levels define the chain gap.
enum class GapSector {
  even,  ///< even ground state to the first even excited state
  any,   ///< even ground state to the lowest other level in either parity sector
};

std::string to_string(GapSector sector);
GapSector parse_gap_sector(const std::string& text);

struct ChainPoint {
  int l = 0;
  double projection = 0.0;  ///< logical projection of the even ground state
  double gap = 0.0;
  double ground_energy = 0.0;
};

/// Even-sector ground state, its logical projection, and the chain gap.
ChainPoint chain_point(const DriverSpec& driver, int l, GapSector sector = GapSector::even);

struct DriverScanConfig {
  std::vector<double> j_zz;
  std::vector<double> alpha;
  std::vector<int> lengths;  ///< chain lengths l, each in [2, 20]
  GapSector gap_sector = GapSector::even;
  unsigned workers = 0;

  void validate() const;
};

struct DriverScanRow {
  double j_zz = 0.0;
  double alpha = 0.0;
  std::vector<ChainPoint> points;
  std::optional<FitResult> projection_fit;
  std::optional<FitResult> gap_fit;
  std::vector<std::string> flags;  ///< fit failures and fit flags

  double beta() const;       ///< NaN without a projection fit
  double delta_inf() const;  ///< NaN without a gap fit
  double gap_at_lmax() const;
};

/// One row per (J_zz, alpha) pair, J_zz-major. Grid points run in parallel.
/// A failing fit is recorded in the row flags instead of aborting the scan.
std::vector<DriverScanRow> driver_scan(const DriverScanConfig& config);

}  // namespace trianneal
