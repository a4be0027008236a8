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

#include "gwf/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace gwf {

namespace {

constexpr int kRefineFactor = 10;

void check_grid(const GridSpec& grid) {
  if (!(grid.lo < grid.hi) || grid.steps < 2) {
    throw std::invalid_argument("oracle: grid needs lo < hi and steps >= 2");
  }
}

}  // namespace

OracleAllocation grid_allocation_oracle(std::span<const UserProfile> users,
                                        std::span<const double> bids,
                                        Budget budget, const GridSpec& grid) {
  check_grid(grid);
  if (users.size() > 8) {
    throw std::invalid_argument("grid_allocation_oracle: more than 8 users");
  }
  if (bids.size() != users.size()) {
    throw std::invalid_argument("grid_allocation_oracle: size mismatch");
  }

  const std::size_t n = users.size();
  std::vector<double> caps(n);
  double total_caps = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    caps[i] = (std::exp2(users[i].b) - 1.0) / users[i].q;
    total_caps += caps[i];
  }

  OracleAllocation best;
  best.powers.resize(n);

  if (total_caps <= budget.phi) {
    best.powers = caps;
    best.eta = 0.0;
  } else {
    const auto total_at = [&](double eta) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double p = bids[i] / eta - 1.0 / users[i].q;
        if (p < 0.0) p = 0.0;
        if (p > caps[i]) p = caps[i];
        total += p;
      }
      return total;
    };
    const auto scan = [&](double lo, double hi, int steps) {
      double best_eta = lo;
      double best_miss = std::abs(total_at(lo) - budget.phi);
      for (int s = 1; s <= steps; ++s) {
        const double eta = lo + (hi - lo) * s / steps;
        if (!(eta > 0.0)) continue;
        const double miss = std::abs(total_at(eta) - budget.phi);
        if (miss < best_miss) {
          best_miss = miss;
          best_eta = eta;
        }
      }
      return best_eta;
    };

    const double step = (grid.hi - grid.lo) / grid.steps;
    double eta = scan(std::max(grid.lo, step * 1e-6), grid.hi, grid.steps);
    eta = scan(std::max(eta - step, step * 1e-6), eta + step,
               2 * kRefineFactor);
    best.eta = eta;
    for (std::size_t i = 0; i < n; ++i) {
      double p = bids[i] / eta - 1.0 / users[i].q;
      if (p < 0.0) p = 0.0;
      if (p > caps[i]) p = caps[i];
      best.powers[i] = p;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    best.total_power += best.powers[i];
    best.objective += bids[i] * std::log2(1.0 + users[i].q * best.powers[i]);
  }
  return best;
}

double grid_bid_oracle(const UserProfile& user, const BeliefParams& bp,
                       const GridSpec& grid) {
  check_grid(grid);
  const double denom = 1.0 + 1.0 / bp.q_self + bp.B;
  const auto utility = [&](double c) {
    if (!(c > 0.0)) return 0.0;
    const double eta = (c + bp.C) / denom;
    if (!(eta > 0.0)) return 0.0;
    double t = std::log2(bp.q_self * c / eta);
    if (t < 0.0) t = 0.0;
    if (t > user.b) t = user.b;
    return (user.v - c) * t;
  };

  const auto scan = [&](double lo, double hi, int steps) {
    double best_c = lo;
    double best_u = utility(lo);
    for (int s = 1; s <= steps; ++s) {
      const double c = lo + (hi - lo) * s / steps;
      const double u = utility(c);
      if (u > best_u) {
        best_u = u;
        best_c = c;
      }
    }
    return best_c;
  };

  const double step = (grid.hi - grid.lo) / grid.steps;
  double c = scan(grid.lo, grid.hi, grid.steps);
  return scan(std::max(c - step, grid.lo), std::min(c + step, grid.hi),
              2 * kRefineFactor);
}

}  // namespace gwf
