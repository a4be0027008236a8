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

// aarch64 only; NEON is baseline there, so no runtime feature check needed.

#include "gwf/kernels.hpp"

#include <arm_neon.h>

#include <algorithm>

namespace gwf::kernels {

namespace {

inline float64x2_t clamped_power_2(float64x2_t eta, float64x2_t c,
                                   float64x2_t iq, float64x2_t cap) {
  float64x2_t p = vsubq_f64(vdivq_f64(c, eta), iq);
  p = vmaxq_f64(p, vdupq_n_f64(0.0));
  return vminq_f64(p, cap);
}

double clamped_power_sum_neon(double eta, const double* bids,
                              const double* inv_q, const double* caps,
                              std::size_t n) {
  const float64x2_t veta = vdupq_n_f64(eta);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t p = clamped_power_2(veta, vld1q_f64(bids + i),
                                          vld1q_f64(inv_q + i),
                                          vld1q_f64(caps + i));
    acc = vaddq_f64(acc, p);
  }
  double total = vaddvq_f64(acc);
  for (; i < n; ++i) {
    total += std::min(std::max(bids[i] / eta - inv_q[i], 0.0), caps[i]);
  }
  return total;
}

void clamped_power_fill_neon(double eta, const double* bids,
                             const double* inv_q, const double* caps,
                             double* powers, std::size_t n) {
  const float64x2_t veta = vdupq_n_f64(eta);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t p = clamped_power_2(veta, vld1q_f64(bids + i),
                                          vld1q_f64(inv_q + i),
                                          vld1q_f64(caps + i));
    vst1q_f64(powers + i, p);
  }
  for (; i < n; ++i) {
    powers[i] = std::min(std::max(bids[i] / eta - inv_q[i], 0.0), caps[i]);
  }
}

}  // namespace

const Kernels* neon_impl();

const Kernels* neon_impl() {
  static const Kernels k{"neon", clamped_power_sum_neon,
                         clamped_power_fill_neon};
  return &k;
}

}  // namespace gwf::kernels
