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

#ifndef GWF_ALLOCATION_HPP_
#define GWF_ALLOCATION_HPP_

#include <span>
#include <string>
#include <vector>

#include "gwf/types.hpp"

namespace gwf {

/// Power at which the user's throughput saturates at its demand:
/// (2^b - 1)/q.
double demand_cap(const UserProfile& user);

/// Shannon throughput log2(1 + q*p) at unit bandwidth.
double throughput(double p, double q);

/// Total power the price-weighted water-filling rule hands out at dual
/// value eta: sum of clamp(c_i/eta - 1/q_i, 0, demand_cap_i). Continuous
/// and non-increasing in eta.
double aggregate_power(double eta, std::span<const UserProfile> users,
                       std::span<const double> bids);

/// Revenue-maximizing power split for the given bids.
///
/// Overloaded cells (total demand caps exceed the budget) are solved by
/// bisecting aggregate_power(eta) to the budget and applying the
/// per-user closed form; underloaded cells get every user its cap with
/// eta_star = 0 and overloaded = false. An overloaded cell where every
/// bid is zero returns all-zero powers with the all_bids_zero flag set.
Allocation solve_allocation(std::span<const UserProfile> users,
                            std::span<const double> bids, Budget budget);

/// Conventional water-filling baseline: solve_allocation with every bid
/// fixed at 1. Demand caps stay enforced.
Allocation flat_rate_allocation(std::span<const UserProfile> users,
                                Budget budget);

/// Residuals of the four KKT condition groups for an allocation, checked
/// against the inputs that produced it. Reports, never throws.
struct KktReport {
  struct Condition {
    std::string name;
    double max_residual = 0.0;
    bool pass = true;
  };

  Condition stationarity;
  Condition primal_feasibility;
  Condition dual_feasibility;
  Condition complementary_slackness;

  bool all_pass() const {
    return stationarity.pass && primal_feasibility.pass &&
           dual_feasibility.pass && complementary_slackness.pass;
  }
  std::vector<const Condition*> conditions() const {
    return {&stationarity, &primal_feasibility, &dual_feasibility,
            &complementary_slackness};
  }
};

KktReport verify_kkt(const Allocation& alloc,
                     std::span<const UserProfile> users,
                     std::span<const double> bids, Budget budget);

}  // namespace gwf

#endif  // GWF_ALLOCATION_HPP_
