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

#include "gwf/csvio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gwf {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    fields.push_back(
        trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string("bad ") + what + " value: '" + field + "'");
  }
  return value;
}

int parse_int(const std::string& field, const char* what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(std::string("bad ") + what + " value: '" + field + "'");
  }
  return value;
}

std::string shortest(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

// Applies `budget=` / `foc_mode=` overrides found in a comment line.
void apply_comment(const std::string& comment, Scenario& scenario) {
  const std::string body = trim(std::string_view(comment).substr(1));
  const std::size_t eq = body.find('=');
  if (eq == std::string::npos) return;
  const std::string key = trim(std::string_view(body).substr(0, eq));
  const std::string value = trim(std::string_view(body).substr(eq + 1));
  if (key == "budget") {
    scenario.budget.phi = parse_double(value, "budget");
    if (!(scenario.budget.phi > 0.0)) {
      throw ParseError("budget must be positive: '" + value + "'");
    }
  } else if (key == "foc_mode") {
    if (value == "paper_foc") {
      scenario.foc_mode = FocMode::paper_foc;
    } else if (value == "exact_log2") {
      scenario.foc_mode = FocMode::exact_log2;
    } else {
      throw ParseError("unknown foc_mode: '" + value + "'");
    }
  }
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  Scenario scenario;
  bool saw_header = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      apply_comment(line, scenario);
      continue;
    }
    if (!saw_header) {
      if (split_fields(line) != std::vector<std::string>{"id", "v", "q", "b"}) {
        throw ParseError("expected header 'id,v,q,b', got '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 4 fields");
    }
    UserProfile user;
    user.id = parse_int(fields[0], "id");
    user.v = parse_double(fields[1], "v");
    user.q = parse_double(fields[2], "q");
    user.b = parse_double(fields[3], "b");
    if (user.id != static_cast<int>(scenario.users.size())) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": ids must be contiguous from 0");
    }
    if (!user.valid()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": v, q, b must be positive and finite");
    }
    scenario.users.push_back(user);
  }
  if (!saw_header) throw ParseError("missing header 'id,v,q,b'");
  if (scenario.users.empty()) throw ParseError("scenario has no users");
  return scenario;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  return parse_scenario(in);
}

std::vector<double> parse_bids(std::istream& in) {
  std::vector<double> bids;
  bool saw_header = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (split_fields(line) != std::vector<std::string>{"id", "c"}) {
        throw ParseError("expected header 'id,c', got '" + line + "'");
      }
      saw_header = true;
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 2 fields");
    }
    const int id = parse_int(fields[0], "id");
    const double c = parse_double(fields[1], "c");
    if (id != static_cast<int>(bids.size())) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": ids must be contiguous from 0");
    }
    if (!(c >= 0.0)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": bids must be >= 0");
    }
    bids.push_back(c);
  }
  if (!saw_header) throw ParseError("missing header 'id,c'");
  if (bids.empty()) throw ParseError("bids file has no rows");
  return bids;
}

std::vector<double> load_bids(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bids file: " + path);
  return parse_bids(in);
}

std::string format_scenario(const Scenario& scenario) {
  std::ostringstream out;
  out << "# budget=" << shortest(scenario.budget.phi) << '\n';
  out << "# foc_mode=" << to_string(scenario.foc_mode) << '\n';
  out << "id,v,q,b\n";
  for (const UserProfile& u : scenario.users) {
    out << u.id << ',' << shortest(u.v) << ',' << shortest(u.q) << ','
        << shortest(u.b) << '\n';
  }
  return out.str();
}

std::string format_bids(std::span<const double> bids) {
  std::ostringstream out;
  out << "id,c\n";
  for (std::size_t i = 0; i < bids.size(); ++i) {
    out << i << ',' << shortest(bids[i]) << '\n';
  }
  return out.str();
}

std::string format_sig6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void write_outcome_csv(std::ostream& out, const Scenario& scenario,
                       const RoundOutcome& round) {
  out << "id,bid,power,throughput,utility\n";
  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    out << scenario.users[i].id << ',' << format_sig6(round.bids[i]) << ','
        << format_sig6(round.allocation.powers[i]) << ','
        << format_sig6(round.allocation.throughputs[i]) << ','
        << format_sig6(round.utilities[i]) << '\n';
  }
  out << "eta_star," << format_sig6(round.allocation.eta_star) << '\n';
  out << "revenue," << format_sig6(round.revenue) << '\n';
  out << "social_welfare," << format_sig6(round.social_welfare) << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  char buf[64];
  out << "R,mean_sw_differential,mean_sw_flat,gap\n";
  for (std::size_t k = 0; k < result.R_grid.size(); ++k) {
    const double diff = result.mean_sw_differential[k];
    const double flat = result.mean_sw_flat[k];
    std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%.10g\n",
                  result.R_grid[k], diff, flat, diff - flat);
    out << buf;
  }
}

}  // namespace gwf
