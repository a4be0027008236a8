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

#ifndef GWF_CSVIO_HPP_
#define GWF_CSVIO_HPP_

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwf/types.hpp"

namespace gwf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario CSV: header `id,v,q,b`, one row per user, ids contiguous from
/// 0. `#`-prefixed comment lines may carry `budget=<float>` and
/// `foc_mode=<paper_foc|exact_log2>` overrides; other comments are
/// ignored. Throws ParseError.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

/// Bids CSV: header `id,c`, ids contiguous from 0, c >= 0.
std::vector<double> parse_bids(std::istream& in);
std::vector<double> load_bids(const std::string& path);

/// Inverse of parse_scenario / parse_bids; floats use shortest
/// round-trip formatting so parse(format(x)) == x exactly.
std::string format_scenario(const Scenario& scenario);
std::string format_bids(std::span<const double> bids);

/// Fixed 6-significant-digit float for result tables.
std::string format_sig6(double x);

/// Per-user table `id,bid,power,throughput,utility` followed by the
/// summary lines `eta_star,...`, `revenue,...`, `social_welfare,...`.
void write_outcome_csv(std::ostream& out, const Scenario& scenario,
                       const RoundOutcome& round);

/// `R,mean_sw_differential,mean_sw_flat,gap`, one row per R value.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace gwf

#endif  // GWF_CSVIO_HPP_
