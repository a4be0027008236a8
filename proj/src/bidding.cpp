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

#include "gwf/bidding.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gwf {

namespace {

constexpr double kBidTol = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

double belief_denominator(const BeliefParams& bp) {
  return 1.0 + 1.0 / bp.q_self + bp.B;
}

// Shared core of both FOC modes. The believed throughput at an interior
// price is log2(q*c*D/(c + C)) and the geometric factor
// 1/c - eta'/eta collapses to C/(c*(c + C)) under the affine belief.
double foc_core(double c, const BeliefParams& bp, double v, FocMode mode) {
  const double ratio = bp.q_self * c * belief_denominator(bp) / (c + bp.C);
  const double geometry = bp.C / (c * (c + bp.C));
  double marginal = (v - c) * geometry;
  if (mode == FocMode::exact_log2) marginal /= std::numbers::ln2;
  return -std::log2(ratio) + marginal;
}

}  // namespace

double simple_belief(double c, const BeliefParams& bp) {
  return (c + bp.C) / belief_denominator(bp);
}

double believed_throughput(double c, const BeliefParams& bp, double b) {
  if (c <= 0.0) return 0.0;
  // q*c/eta(c) with the affine belief collapses to q*c*D/(c + C).
  const double ratio = bp.q_self * c * belief_denominator(bp) / (c + bp.C);
  if (ratio <= 1.0) return 0.0;
  return std::min(std::log2(ratio), b);
}

FeasibleInterval feasible_interval(const BeliefParams& bp, double v,
                                   double b) {
  const double qd = bp.q_self * belief_denominator(bp);
  FeasibleInterval iv;
  iv.c_zero = qd > 1.0 ? bp.C / (qd - 1.0) : kInf;
  const double two_b = std::exp2(b);
  iv.c_bar = qd > two_b ? two_b * bp.C / (qd - two_b) : kInf;
  iv.c_upper = std::min(iv.c_bar, v);
  return iv;
}

double foc_residual(double c, const BeliefParams& bp, double v, FocMode mode) {
  // The demand cap does not enter the derivative, so the domain check here
  // is the b-independent part of the interior: above the zero-throughput
  // price and at most the valuation.
  const double qd = bp.q_self * belief_denominator(bp);
  const double c_zero = qd > 1.0 ? bp.C / (qd - 1.0) : kInf;
  if (!(c > c_zero) || c > v * (1.0 + 1e-12)) {
    throw std::domain_error("foc_residual: price outside feasible interior");
  }
  return foc_core(c, bp, v, mode);
}

BidResult solve_bid(const UserProfile& user, const BeliefParams& bp,
                    FocMode mode) {
  BidResult result;

  if (bp.C == 0.0) {
    // Degenerate belief: q*c/eta(c) = q*D for every price, so the believed
    // throughput is flat in c. Bid a token positive price if that constant
    // throughput is positive, else abstain.
    if (bp.q_self * belief_denominator(bp) <= 1.0) {
      return result;  // abstain
    }
    result.c_star = 1e-6 * user.v;
    result.kind = BidKind::interior_foc;
    result.degenerate_belief = true;
    result.believed_throughput =
        believed_throughput(result.c_star, bp, user.b);
    result.believed_utility =
        (user.v - result.c_star) * result.believed_throughput;
    return result;
  }

  const FeasibleInterval iv = feasible_interval(bp, user.v, user.b);
  if (!(iv.c_upper > iv.c_zero)) {
    return result;  // abstain: no price below v buys positive throughput
  }

  if (foc_core(iv.c_upper, bp, user.v, mode) >= 0.0) {
    // Residual is strictly decreasing and still non-negative at the upper
    // boundary, so there is no interior root: bid the boundary.
    result.c_star = iv.c_upper;
    result.kind = iv.c_bar <= user.v ? BidKind::boundary_cbar
                                     : BidKind::boundary_valuation;
  } else {
    // Sign change on (c_zero, c_upper): the residual is positive just
    // above c_zero (throughput term vanishes, marginal term is positive).
    double lo = iv.c_zero * (1.0 + 1e-9);
    double hi = iv.c_upper;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (foc_core(mid, bp, user.v, mode) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
      if (hi - lo <= kBidTol) break;
    }
    result.c_star = 0.5 * (lo + hi);
    result.kind = BidKind::interior_foc;
  }

  result.believed_throughput = believed_throughput(result.c_star, bp, user.b);
  result.believed_utility =
      (user.v - result.c_star) * result.believed_throughput;
  return result;
}

std::vector<ConsistencyViolation> check_belief_consistency(
    const std::function<double(double)>& belief, std::span<const double> grid,
    double q_self, double b) {
  if (grid.size() < 2) {
    throw std::invalid_argument(
        "check_belief_consistency: need at least two grid points");
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) {
      throw std::invalid_argument(
          "check_belief_consistency: grid must be strictly increasing");
    }
  }

  const double cap = (std::exp2(b) - 1.0) / q_self;
  const auto interior = [&](double c, double eta) {
    if (!(eta > 0.0)) return false;
    const double p = c / eta - 1.0 / q_self;
    return p > 0.0 && p < cap;
  };

  std::vector<ConsistencyViolation> violations;
  double eta_prev = belief(grid[0]);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double eta_next = belief(grid[i + 1]);
    if (eta_next < eta_prev) {
      violations.push_back({i, ConsistencyViolation::Reason::decreased});
    } else if (eta_next == eta_prev && interior(grid[i], eta_prev) &&
               interior(grid[i + 1], eta_next)) {
      violations.push_back(
          {i, ConsistencyViolation::Reason::not_strictly_increasing});
    }
    eta_prev = eta_next;
  }
  return violations;
}

}  // namespace gwf
