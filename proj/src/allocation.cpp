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

#include "gwf/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwf/kernels.hpp"

namespace gwf {

namespace {

// Bisection stops once the handed-out power matches the budget this
// closely; keeps the budget-exactness invariant (1e-9) with headroom.
constexpr double kBudgetResidualTol = 1e-10;
// Fallback stop on the eta bracket, relative to the bracket location.
// Tighter than strictly needed so steep g(eta) instances (tiny eta*)
// still land inside the budget tolerance.
constexpr double kBracketRelTol = 1e-13;
constexpr int kMaxBisectIters = 200;

struct SoaView {
  std::vector<double> bids;
  std::vector<double> inv_q;
  std::vector<double> caps;
};

SoaView build_soa(std::span<const UserProfile> users,
                  std::span<const double> bids) {
  SoaView soa;
  const std::size_t n = users.size();
  soa.bids.assign(bids.begin(), bids.end());
  soa.inv_q.resize(n);
  soa.caps.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    soa.inv_q[i] = 1.0 / users[i].q;
    soa.caps[i] = demand_cap(users[i]);
  }
  return soa;
}

void check_inputs(std::span<const UserProfile> users,
                  std::span<const double> bids, Budget budget) {
  if (users.empty()) {
    throw std::invalid_argument("solve_allocation: no users");
  }
  if (bids.size() != users.size()) {
    throw std::invalid_argument("solve_allocation: bids/users size mismatch");
  }
  if (!(budget.phi > 0.0)) {
    throw std::invalid_argument("solve_allocation: budget must be positive");
  }
  for (const UserProfile& u : users) {
    if (!u.valid()) {
      throw std::invalid_argument("solve_allocation: invalid user profile");
    }
  }
  for (double c : bids) {
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw std::invalid_argument("solve_allocation: bids must be >= 0");
    }
  }
}

// Root of g(eta) = phi on (0, hi0]. g is continuous and non-increasing;
// g(0+) = sum of caps > phi and g(hi0) = 0 < phi, so the bracket is valid.
// On a plateau the power vector is constant, so returning the upper end of
// the final bracket keeps the result deterministic.
double bisect_eta(const SoaView& soa, double phi, double hi0) {
  const kernels::Kernels& k = kernels::active();
  const std::size_t n = soa.bids.size();
  double lo = 0.0;
  double hi = hi0;
  for (int iter = 0; iter < kMaxBisectIters; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at machine resolution
    const double g = k.clamped_power_sum(mid, soa.bids.data(),
                                         soa.inv_q.data(), soa.caps.data(), n);
    if (std::abs(g - phi) <= kBudgetResidualTol) return mid;
    if (g > phi) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= kBracketRelTol * (lo + hi)) break;
  }
  return hi;
}

}  // namespace

bool UserProfile::valid() const {
  return std::isfinite(v) && v > 0.0 && std::isfinite(q) && q > 0.0 &&
         std::isfinite(b) && b > 0.0;
}

std::string to_string(FocMode mode) {
  return mode == FocMode::paper_foc ? "paper_foc" : "exact_log2";
}

std::string to_string(BidKind kind) {
  switch (kind) {
    case BidKind::interior_foc: return "interior_foc";
    case BidKind::boundary_cbar: return "boundary_cbar";
    case BidKind::boundary_valuation: return "boundary_valuation";
    case BidKind::abstain: return "abstain";
  }
  return "unknown";
}

double demand_cap(const UserProfile& user) {
  return (std::exp2(user.b) - 1.0) / user.q;
}

double throughput(double p, double q) { return std::log2(1.0 + q * p); }

double aggregate_power(double eta, std::span<const UserProfile> users,
                       std::span<const double> bids) {
  if (!(eta > 0.0)) {
    throw std::domain_error("aggregate_power: eta must be positive");
  }
  const SoaView soa = build_soa(users, bids);
  return kernels::active().clamped_power_sum(eta, soa.bids.data(),
                                             soa.inv_q.data(),
                                             soa.caps.data(), soa.bids.size());
}

Allocation solve_allocation(std::span<const UserProfile> users,
                            std::span<const double> bids, Budget budget) {
  check_inputs(users, bids, budget);
  const std::size_t n = users.size();
  const SoaView soa = build_soa(users, bids);

  Allocation alloc;
  alloc.powers.resize(n);
  alloc.gammas.assign(n, 0.0);
  alloc.throughputs.resize(n);

  double total_caps = 0.0;
  for (double cap : soa.caps) total_caps += cap;
  alloc.overloaded = total_caps > budget.phi;

  if (!alloc.overloaded) {
    // Demand fits in the budget: every user saturates. The cap dual soaks
    // the full marginal value c_i since eta* = 0.
    alloc.powers = soa.caps;
    alloc.eta_star = 0.0;
    alloc.gammas = soa.bids;
  } else {
    const double max_bid = *std::max_element(soa.bids.begin(), soa.bids.end());
    if (max_bid == 0.0) {
      alloc.all_bids_zero = true;
      std::fill(alloc.powers.begin(), alloc.powers.end(), 0.0);
      alloc.eta_star = 0.0;
    } else {
      double hi0 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        hi0 = std::max(hi0, soa.bids[i] * users[i].q);
      }
      alloc.eta_star = bisect_eta(soa, budget.phi, hi0);
      kernels::active().clamped_power_fill(alloc.eta_star, soa.bids.data(),
                                           soa.inv_q.data(), soa.caps.data(),
                                           alloc.powers.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        if (alloc.powers[i] == soa.caps[i]) {
          alloc.gammas[i] = std::max(
              0.0, soa.bids[i] -
                       alloc.eta_star * (soa.inv_q[i] + soa.caps[i]));
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    alloc.throughputs[i] = throughput(alloc.powers[i], users[i].q);
  }
  return alloc;
}

Allocation flat_rate_allocation(std::span<const UserProfile> users,
                                Budget budget) {
  const std::vector<double> unit_bids(users.size(), 1.0);
  return solve_allocation(users, unit_bids, budget);
}

KktReport verify_kkt(const Allocation& alloc,
                     std::span<const UserProfile> users,
                     std::span<const double> bids, Budget budget) {
  constexpr double kTol = 1e-7;
  constexpr double kBudgetTol = 1e-9;

  KktReport report;
  report.stationarity.name = "stationarity";
  report.primal_feasibility.name = "primal_feasibility";
  report.dual_feasibility.name = "dual_feasibility";
  report.complementary_slackness.name = "complementary_slackness";

  const std::size_t n = users.size();
  const double eta = alloc.eta_star;

  double total_power = 0.0;
  for (double p : alloc.powers) total_power += p;

  // (b) primal: budget (equality when overloaded), caps, non-negativity.
  double primal = 0.0;
  if (alloc.overloaded && !alloc.all_bids_zero) {
    primal = std::max(primal, std::abs(total_power - budget.phi));
  } else {
    primal = std::max(primal, total_power - budget.phi);
  }
  for (std::size_t i = 0; i < n; ++i) {
    primal = std::max(primal, -alloc.powers[i]);
    primal = std::max(primal, alloc.throughputs[i] - users[i].b);
  }
  report.primal_feasibility.max_residual = primal;
  report.primal_feasibility.pass = primal <= kBudgetTol;

  double stationarity = 0.0;
  double dual = std::max(0.0, -eta);
  double comp_slack = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double inv_q = 1.0 / users[i].q;
    const double cap = demand_cap(users[i]);
    const double p = alloc.powers[i];
    const double gamma = alloc.gammas[i];
    const bool capped = p >= cap - 1e-12 * std::max(1.0, cap);

    // (a) stationarity on interior users: the price-scaled flood level
    // c_i/(1/q_i + P_i) must sit at eta*.
    if (p > 0.0 && !capped) {
      const double level = bids[i] / (inv_q + p);
      stationarity =
          std::max(stationarity, std::abs(level - eta) /
                                     std::max(eta, 1e-300));
    }

    // (c) duals: gamma_i >= 0 and the implied slack dual
    // lambda_i = eta - (c_i - gamma_i)/(1/q_i + P_i) >= 0.
    const double lambda = eta - (bids[i] - gamma) / (inv_q + p);
    dual = std::max(dual, -gamma);
    dual = std::max(dual, -lambda);

    // (d) complementary slackness for both inequality constraints.
    comp_slack = std::max(comp_slack,
                          std::abs(gamma * (users[i].b - alloc.throughputs[i])));
    comp_slack = std::max(comp_slack, std::abs(lambda * p));
  }

  report.stationarity.max_residual = stationarity;
  report.stationarity.pass = stationarity <= kTol;
  report.dual_feasibility.max_residual = dual;
  report.dual_feasibility.pass = dual <= kTol;
  report.complementary_slackness.max_residual = comp_slack;
  report.complementary_slackness.pass = comp_slack <= kTol;
  return report;
}

}  // namespace gwf
