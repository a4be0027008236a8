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

#include "gwf/simulation.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "gwf/allocation.hpp"
#include "gwf/bidding.hpp"
#include "gwf/rng.hpp"

namespace gwf {

namespace {

void check_scenario(const Scenario& scenario) {
  if (scenario.users.empty()) {
    throw std::invalid_argument("scenario: no users");
  }
  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    if (scenario.users[i].id != static_cast<int>(i)) {
      throw std::invalid_argument("scenario: ids must be contiguous from 0");
    }
    if (!scenario.users[i].valid()) {
      throw std::invalid_argument("scenario: invalid user profile");
    }
  }
  if (!(scenario.budget.phi > 0.0)) {
    throw std::invalid_argument("scenario: budget must be positive");
  }
}

void settle(const Scenario& scenario, std::span<const double> paid,
            RoundOutcome& round) {
  const std::size_t n = scenario.users.size();
  round.utilities.resize(n);
  round.revenue = 0.0;
  round.social_welfare = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = round.allocation.throughputs[i];
    round.utilities[i] = (scenario.users[i].v - paid[i]) * t;
    round.revenue += paid[i] * t;
    round.social_welfare += round.utilities[i];
  }
}

}  // namespace

std::vector<BeliefParams> announce_beliefs(const Scenario& scenario) {
  check_scenario(scenario);
  const std::size_t n = scenario.users.size();
  double sum_v = 0.0;
  double sum_inv_q = 0.0;
  for (const UserProfile& u : scenario.users) {
    sum_v += u.v;
    sum_inv_q += 1.0 / u.q;
  }
  std::vector<BeliefParams> beliefs(n);
  for (std::size_t i = 0; i < n; ++i) {
    beliefs[i].C = 0.5 * (sum_v - scenario.users[i].v);
    beliefs[i].B = sum_inv_q - 1.0 / scenario.users[i].q;
    beliefs[i].q_self = scenario.users[i].q;
  }
  return beliefs;
}

RoundOutcome run_round(const Scenario& scenario) {
  const std::vector<BeliefParams> beliefs = announce_beliefs(scenario);
  const std::size_t n = scenario.users.size();

  RoundOutcome round;
  round.bids.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BidResult bid =
        solve_bid(scenario.users[i], beliefs[i], scenario.foc_mode);
    round.bids[i] = bid.kind == BidKind::abstain ? 0.0 : bid.c_star;
  }
  round.allocation =
      solve_allocation(scenario.users, round.bids, scenario.budget);
  settle(scenario, round.bids, round);
  return round;
}

RoundOutcome flat_rate_round(const Scenario& scenario, double c_flat) {
  check_scenario(scenario);
  if (!(c_flat >= 0.0)) {
    throw std::invalid_argument("flat_rate_round: c_flat must be >= 0");
  }
  RoundOutcome round;
  round.allocation = flat_rate_allocation(scenario.users, scenario.budget);
  round.bids.assign(scenario.users.size(), c_flat);
  settle(scenario, round.bids, round);
  return round;
}

SweepResult welfare_sweep(const SweepConfig& config) {
  if (config.n_users < 1 || config.reps < 1) {
    throw std::invalid_argument("welfare_sweep: need users >= 1, reps >= 1");
  }
  for (double r : config.R_grid) {
    if (!(r > 0.0)) {
      throw std::invalid_argument("welfare_sweep: R values must be positive");
    }
  }

  const std::size_t n_cells = config.R_grid.size();
  const std::size_t n_tasks = n_cells * static_cast<std::size_t>(config.reps);
  std::vector<double> sw_diff(n_tasks);
  std::vector<double> sw_flat(n_tasks);

  const auto run_task = [&](std::size_t task) {
    const std::size_t k = task / config.reps;
    const std::size_t r = task % config.reps;
    SplitMix64 rng(substream_seed(config.seed, k, r));

    Scenario scenario;
    scenario.foc_mode = config.foc_mode;
    scenario.users.resize(config.n_users);
    for (int i = 0; i < config.n_users; ++i) {
      scenario.users[i] = {i, rng.next_open(config.R_grid[k]), config.q,
                           config.b};
    }

    const RoundOutcome diff = run_round(scenario);
    double mean_bid = 0.0;
    for (double c : diff.bids) mean_bid += c;
    mean_bid /= static_cast<double>(diff.bids.size());
    const RoundOutcome flat = flat_rate_round(scenario, mean_bid);

    sw_diff[task] = diff.social_welfare;
    sw_flat[task] = flat.social_welfare;
  };

  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next.fetch_add(1); t < n_tasks;
             t = next.fetch_add(1)) {
          run_task(t);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  SweepResult result;
  result.R_grid = config.R_grid;
  result.reps = config.reps;
  result.seed = config.seed;
  result.mean_sw_differential.resize(n_cells);
  result.mean_sw_flat.resize(n_cells);
  // Reduce in task order so threaded runs average identically.
  for (std::size_t k = 0; k < n_cells; ++k) {
    double acc_d = 0.0;
    double acc_f = 0.0;
    for (int r = 0; r < config.reps; ++r) {
      acc_d += sw_diff[k * config.reps + r];
      acc_f += sw_flat[k * config.reps + r];
    }
    result.mean_sw_differential[k] = acc_d / config.reps;
    result.mean_sw_flat[k] = acc_f / config.reps;
  }
  return result;
}

}  // namespace gwf
