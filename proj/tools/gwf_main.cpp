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

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gwf/allocation.hpp"
#include "gwf/csvio.hpp"
#include "gwf/oracle.hpp"
#include "gwf/simulation.hpp"
#include "gwf/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDimensionMismatch = 3;

// Writes to the -o file when given, else stdout.
int with_output(const std::string& path,
                const std::function<int(std::ostream&)>& body) {
  if (path.empty()) return body(std::cout);
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitParseError;
  }
  return body(out);
}

gwf::RoundOutcome settle_round(const gwf::Scenario& scenario,
                               const std::vector<double>& bids,
                               gwf::Allocation alloc) {
  gwf::RoundOutcome round;
  round.bids = bids;
  round.allocation = std::move(alloc);
  const std::size_t n = scenario.users.size();
  round.utilities.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = round.allocation.throughputs[i];
    round.utilities[i] = (scenario.users[i].v - bids[i]) * t;
    round.revenue += bids[i] * t;
    round.social_welfare += round.utilities[i];
  }
  return round;
}

int cmd_allocate(const std::string& scenario_path, const std::string& bids_path,
                 const std::string& out_path) {
  const gwf::Scenario scenario = gwf::load_scenario(scenario_path);
  const std::vector<double> bids = gwf::load_bids(bids_path);
  if (bids.size() != scenario.users.size()) {
    std::cerr << "error: " << bids.size() << " bids for "
              << scenario.users.size() << " users\n";
    return kExitDimensionMismatch;
  }
  gwf::Allocation alloc =
      gwf::solve_allocation(scenario.users, bids, scenario.budget);
  if (alloc.all_bids_zero) {
    std::cerr << "warning: overloaded cell with all-zero bids; "
                 "no power allocated\n";
  }
  return with_output(out_path, [&](std::ostream& out) {
    gwf::write_outcome_csv(out, scenario,
                           settle_round(scenario, bids, std::move(alloc)));
    return kExitOk;
  });
}

int cmd_simulate(const std::string& scenario_path, const std::string& flat,
                 const std::string& out_path) {
  const gwf::Scenario scenario = gwf::load_scenario(scenario_path);
  const gwf::RoundOutcome round = gwf::run_round(scenario);
  std::optional<double> c_flat;
  if (!flat.empty()) {
    if (flat == "auto") {
      double mean = 0.0;
      for (double c : round.bids) mean += c;
      c_flat = mean / static_cast<double>(round.bids.size());
    } else {
      try {
        std::size_t used = 0;
        c_flat = std::stod(flat, &used);
        if (used != flat.size() || !(*c_flat >= 0.0)) throw std::exception();
      } catch (...) {
        std::cerr << "error: --flat expects a non-negative number or 'auto'\n";
        return kExitParseError;
      }
    }
  }
  return with_output(out_path, [&](std::ostream& out) {
    gwf::write_outcome_csv(out, scenario, round);
    if (c_flat) {
      out << "# flat_rate c=" << gwf::format_sig6(*c_flat) << "\n";
      gwf::write_outcome_csv(out, scenario,
                             gwf::flat_rate_round(scenario, *c_flat));
    }
    return kExitOk;
  });
}

int cmd_sweep(const gwf::SweepConfig& config, const std::string& out_path) {
  const gwf::SweepResult result = gwf::welfare_sweep(config);
  return with_output(out_path, [&](std::ostream& out) {
    gwf::write_sweep_csv(out, result);
    return kExitOk;
  });
}

int cmd_verify(const std::string& scenario_path, const std::string& bids_path,
               const std::vector<double>& power_override,
               const std::string& out_path) {
  const gwf::Scenario scenario = gwf::load_scenario(scenario_path);
  const std::vector<double> bids = gwf::load_bids(bids_path);
  const std::size_t n = scenario.users.size();
  if (bids.size() != n) {
    std::cerr << "error: " << bids.size() << " bids for " << n << " users\n";
    return kExitDimensionMismatch;
  }

  gwf::Allocation alloc =
      gwf::solve_allocation(scenario.users, bids, scenario.budget);
  if (!power_override.empty()) {
    if (power_override.size() != n) {
      std::cerr << "error: --powers needs one value per user\n";
      return kExitDimensionMismatch;
    }
    alloc.powers = power_override;
    for (std::size_t i = 0; i < n; ++i) {
      alloc.throughputs[i] =
          gwf::throughput(alloc.powers[i], scenario.users[i].q);
    }
  }

  const gwf::KktReport report =
      gwf::verify_kkt(alloc, scenario.users, bids, scenario.budget);

  double total_power = 0.0;
  for (double p : alloc.powers) total_power += p;
  const double budget_residual =
      alloc.overloaded && !alloc.all_bids_zero
          ? std::abs(total_power - scenario.budget.phi)
          : std::max(0.0, total_power - scenario.budget.phi);
  const bool budget_ok = budget_residual <= 1e-9;

  // Oracle cross-check (analytic objective vs. grid search), desk scale.
  bool oracle_ok = true;
  std::optional<double> oracle_gap;
  if (n <= 8) {
    double hi0 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      hi0 = std::max(hi0, bids[i] * scenario.users[i].q);
    }
    if (hi0 == 0.0) hi0 = 1.0;
    const gwf::GridSpec coarse{hi0 * 1e-6, hi0, 200000};
    gwf::OracleAllocation ref = gwf::grid_allocation_oracle(
        scenario.users, bids, scenario.budget, coarse);
    if (ref.eta > 0.0) {
      const double step = (coarse.hi - coarse.lo) / coarse.steps;
      const gwf::GridSpec fine{std::max(ref.eta - step, coarse.lo * 0.5),
                               ref.eta + step, 200000};
      ref = gwf::grid_allocation_oracle(scenario.users, bids, scenario.budget,
                                        fine);
    }
    double objective = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      objective += bids[i] * alloc.throughputs[i];
    }
    oracle_gap = std::abs(objective - ref.objective) /
                 std::max(std::abs(ref.objective), 1e-12);
    oracle_ok = *oracle_gap <= 1e-6;
  }

  const bool all_pass = report.all_pass() && budget_ok && oracle_ok;
  const int rc = with_output(out_path, [&](std::ostream& out) {
    out << "check,value,pass\n";
    for (const auto* cond : report.conditions()) {
      out << cond->name << ',' << gwf::format_sig6(cond->max_residual) << ','
          << (cond->pass ? "yes" : "no") << '\n';
    }
    out << "budget_residual," << gwf::format_sig6(budget_residual) << ','
        << (budget_ok ? "yes" : "no") << '\n';
    if (oracle_gap) {
      out << "oracle_objective_gap," << gwf::format_sig6(*oracle_gap) << ','
          << (oracle_ok ? "yes" : "no") << '\n';
    } else {
      out << "oracle_objective_gap,skipped(users>8),yes\n";
    }
    out << "verdict," << (all_pass ? "pass" : "fail") << ",\n";
    return kExitOk;
  });
  if (rc != kExitOk) return rc;
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential-pricing downlink power allocation"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string bids_path;
  std::string out_path;
  std::string flat;
  std::vector<double> power_override;
  gwf::SweepConfig sweep_config;

  CLI::App* allocate =
      app.add_subcommand("allocate", "Price-weighted allocation for fixed bids");
  allocate->add_option("scenario", scenario_path, "scenario CSV (id,v,q,b)")
      ->required();
  allocate->add_option("bids", bids_path, "bids CSV (id,c)")->required();
  allocate->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* simulate =
      app.add_subcommand("simulate", "Bid, allocate, and settle one round");
  simulate->add_option("scenario", scenario_path, "scenario CSV (id,v,q,b)")
      ->required();
  simulate->add_option("--flat", flat,
                       "also run the flat-rate baseline at rate <c|auto>");
  simulate->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Social-welfare sweep over valuation ranges");
  sweep->add_option("--users", sweep_config.n_users, "number of users")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--b", sweep_config.b, "common demanded throughput")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--q", sweep_config.q, "common channel quality")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--R", sweep_config.R_grid, "valuation range grid");
  sweep->add_option("--reps", sweep_config.reps, "repetitions per R")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_config.seed, "base random seed");
  sweep->add_option("--threads", sweep_config.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  sweep->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "KKT and brute-force oracle checks for an allocation");
  verify->add_option("scenario", scenario_path, "scenario CSV (id,v,q,b)")
      ->required();
  verify->add_option("bids", bids_path, "bids CSV (id,c)")->required();
  verify->add_option("--powers", power_override,
                     "replace the solved power vector (diagnostic)");
  verify->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (app.got_subcommand(allocate)) {
      return cmd_allocate(scenario_path, bids_path, out_path);
    }
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(scenario_path, flat, out_path);
    }
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(sweep_config, out_path);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(scenario_path, bids_path, power_override, out_path);
    }
  } catch (const gwf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
