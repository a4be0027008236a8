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

#ifndef GWF_BIDDING_HPP_
#define GWF_BIDDING_HPP_

#include <functional>
#include <span>
#include <vector>

#include "gwf/types.hpp"

namespace gwf {

/// The affine-ratio belief about the cell condition:
/// (c + C)/(1 + 1/q_self + B). Strictly increasing in c whenever C or the
/// denominator terms are positive; its derivative is the constant
/// 1/(1 + 1/q_self + B).
double simple_belief(double c, const BeliefParams& bp);

/// Throughput the user expects at price c: log2(q*c/belief(c)) clamped to
/// [0, b]. Zero at and below the threshold price, saturated at b.
double believed_throughput(double c, const BeliefParams& bp, double b);

/// Price interval a rational user considers.
///
/// c_zero is where the believed throughput turns positive, c_bar the
/// cheapest price believed to saturate the demand (+inf when the demand
/// can never be met under the belief), c_upper = min(c_bar, v).
struct FeasibleInterval {
  double c_zero = 0.0;
  double c_bar = 0.0;
  double c_upper = 0.0;
};

FeasibleInterval feasible_interval(const BeliefParams& bp, double v, double b);

/// First-order condition residual of the believed utility at price c.
/// Positive where raising the bid helps, strictly decreasing on the
/// interior. Throws std::domain_error outside (c_zero, c_upper].
double foc_residual(double c, const BeliefParams& bp, double v, FocMode mode);

/// Optimal bid under the belief: the unique FOC root on the interior when
/// the residual changes sign, otherwise the upper boundary min(c_bar, v);
/// abstains when no price below the valuation buys positive believed
/// throughput.
BidResult solve_bid(const UserProfile& user, const BeliefParams& bp,
                    FocMode mode);

/// One adjacent grid pair breaking belief consistency.
struct ConsistencyViolation {
  enum class Reason {
    decreased,               // eta(c2) < eta(c1)
    not_strictly_increasing  // interior regime but eta(c2) <= eta(c1)
  };
  std::size_t index = 0;  // left point of the offending pair
  Reason reason = Reason::decreased;
};

/// Checks a belief function sampled on a strictly increasing price grid:
/// it must never decrease, and must strictly increase wherever the user
/// believes an interior power quota (0 < believed power < demand cap).
std::vector<ConsistencyViolation> check_belief_consistency(
    const std::function<double(double)>& belief, std::span<const double> grid,
    double q_self, double b);

}  // namespace gwf

#endif  // GWF_BIDDING_HPP_
