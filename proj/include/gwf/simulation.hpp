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

#ifndef GWF_SIMULATION_HPP_
#define GWF_SIMULATION_HPP_

#include <cstdint>
#include <vector>

#include "gwf/types.hpp"

namespace gwf {

/// Belief aggregates the base station announces to each user:
/// C_i = half the sum of the other users' valuations, B_i = the sum of
/// their inverse channel qualities.
std::vector<BeliefParams> announce_beliefs(const Scenario& scenario);

/// One full slot of the two-stage game: announce, bid, allocate, settle.
/// Abstaining users bid zero. Utilities, revenue, and social welfare use
/// realized throughputs, not believed ones.
RoundOutcome run_round(const Scenario& scenario);

/// Baseline slot: conventional water-filling allocation with every user
/// charged the uniform rate c_flat. Utilities may be negative; users
/// cannot opt out.
RoundOutcome flat_rate_round(const Scenario& scenario, double c_flat);

struct SweepConfig {
  int n_users = 10;
  double b = 1.5;
  double q = 2.0;
  std::vector<double> R_grid = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  int reps = 50;
  std::uint64_t seed = 42;
  FocMode foc_mode = FocMode::paper_foc;
  // Worker threads over (R, rep) tasks. Results are identical for any
  // thread count: substreams are per-task and the averaging is reduced
  // in task order.
  int threads = 1;
};

/// Social-welfare comparison of differential pricing against the
/// flat-rate baseline over a grid of valuation ranges R, with v_i drawn
/// Uniform(0, R) per repetition. The flat rate of a repetition is the
/// mean of that repetition's differential bids (abstainers count as zero
/// bids).
SweepResult welfare_sweep(const SweepConfig& config);

}  // namespace gwf

#endif  // GWF_SIMULATION_HPP_
