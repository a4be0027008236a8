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

#ifndef GWF_TYPES_HPP_
#define GWF_TYPES_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gwf {

/// One downlink user: valuation per bit, channel quality h/N, demanded
/// throughput. All three must be strictly positive and finite.
struct UserProfile {
  int id = 0;
  double v = 0.0;  // valuation per bit (price units/bit)
  double q = 0.0;  // channel quality h/N (1/power units)
  double b = 0.0;  // demanded throughput (bits/s)

  bool valid() const;
};

/// Total downlink power of the base station, normalized to 1 by default.
struct Budget {
  double phi = 1.0;
};

/// Result of the base station's revenue-maximizing power split.
///
/// `eta_star` is the dual of the power-budget constraint (the cell
/// condition); `gammas` are the duals of the per-user throughput caps.
/// The slack duals lambda_i are implied by stationarity and recomputed in
/// verify_kkt rather than stored here.
struct Allocation {
  std::vector<double> powers;
  double eta_star = 0.0;
  std::vector<double> gammas;
  std::vector<double> throughputs;
  bool overloaded = false;
  // Set when the cell is overloaded but every bid is zero: no user funds
  // the objective, so the all-zero power vector is returned instead of an
  // error.
  bool all_bids_zero = false;
};

/// Announced aggregates that define a user's simple belief about the cell
/// condition: C sums the believed other-user prices, B the believed
/// inverse channel qualities.
struct BeliefParams {
  double C = 0.0;
  double B = 0.0;
  double q_self = 0.0;
};

/// Which first-order condition the bid solver roots.
///
/// `paper_foc` reproduces the published bid vectors; `exact_log2` is the
/// calculus-exact derivative of the believed utility (the two differ by a
/// 1/ln2 factor on the marginal-utility term).
enum class FocMode {
  paper_foc,
  exact_log2,
};

enum class BidKind {
  interior_foc,
  boundary_cbar,
  boundary_valuation,
  abstain,
};

struct BidResult {
  double c_star = 0.0;
  BidKind kind = BidKind::abstain;
  double believed_throughput = 0.0;
  double believed_utility = 0.0;
  // Set when the belief has C == 0, making the believed throughput
  // constant in the price; the solver then bids an arbitrarily small
  // positive price instead of rooting the (degenerate) FOC.
  bool degenerate_belief = false;
};

struct Scenario {
  std::vector<UserProfile> users;
  Budget budget;
  FocMode foc_mode = FocMode::paper_foc;
};

/// One simulated time slot: bids, the resulting allocation, and the
/// realized (not believed) utilities, revenue, and social welfare.
struct RoundOutcome {
  std::vector<double> bids;
  Allocation allocation;
  std::vector<double> utilities;
  double revenue = 0.0;
  double social_welfare = 0.0;
};

struct SweepResult {
  std::vector<double> R_grid;
  std::vector<double> mean_sw_differential;
  std::vector<double> mean_sw_flat;
  int reps = 0;
  std::uint64_t seed = 0;
};

/// Evaluation grid for the brute-force oracles.
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;  // >= 2
};

std::string to_string(FocMode mode);
std::string to_string(BidKind kind);

}  // namespace gwf

#endif  // GWF_TYPES_HPP_
