// Copyright 2026 The gwf Authors.
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

#ifndef GWF_ORACLE_HPP_
#define GWF_ORACLE_HPP_

#include <span>
#include <vector>

#include "gwf/types.hpp"

// Brute-force references, deliberately written with their own plain loops
// (no shared solver code) so they stay an independent check on the
// analytic paths. Desk scale only.

namespace gwf {

struct OracleAllocation {
  std::vector<double> powers;
  double eta = 0.0;
  double total_power = 0.0;
  double objective = 0.0;  // sum of c_i * log2(1 + q_i * P_i)
};

/// Scans the eta grid for the cap-clamped power vector whose total is
/// closest to the budget, with one 10x refinement pass around the best
/// point. Underloaded instances resolve to the caps directly.
OracleAllocation grid_allocation_oracle(std::span<const UserProfile> users,
                                        std::span<const double> bids,
                                        Budget budget, const GridSpec& grid);

/// Argmax over the price grid of the believed utility
/// (v - c) * min(b, max(0, log2(q*c/eta(c)))), with one 10x refinement
/// pass around the incumbent.
double grid_bid_oracle(const UserProfile& user, const BeliefParams& bp,
                       const GridSpec& grid);

}  // namespace gwf

#endif  // GWF_ORACLE_HPP_
