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

#include "gwf/kernels.hpp"

#include <algorithm>

namespace gwf::kernels {

namespace {

double clamped_power_sum_scalar(double eta, const double* bids,
                                const double* inv_q, const double* caps,
                                std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = std::min(std::max(bids[i] / eta - inv_q[i], 0.0), caps[i]);
    total += p;
  }
  return total;
}

void clamped_power_fill_scalar(double eta, const double* bids,
                               const double* inv_q, const double* caps,
                               double* powers, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    powers[i] = std::min(std::max(bids[i] / eta - inv_q[i], 0.0), caps[i]);
  }
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{"scalar", clamped_power_sum_scalar,
                         clamped_power_fill_scalar};
  return k;
}

}  // namespace gwf::kernels
