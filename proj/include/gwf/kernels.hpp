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

#ifndef GWF_KERNELS_HPP_
#define GWF_KERNELS_HPP_

#include <cstddef>

namespace gwf::kernels {

// Inner-loop array kernels of the water-filling solver. Element i of each
// array holds bid c_i, inverse quality 1/q_i, and demand cap (2^b_i - 1)/q_i.
// The per-element operation is clamp(c_i/eta - 1/q_i, 0, cap_i); the sum
// kernel reduces it, the fill kernel stores it.
//
// SIMD variants are bit-identical to the scalar reference per element (the
// op set is div/sub/min/max only); the sum kernel may differ in the final
// ulps because the reduction order changes.
struct Kernels {
  const char* name;
  double (*clamped_power_sum)(double eta, const double* bids,
                              const double* inv_q, const double* caps,
                              std::size_t n);
  void (*clamped_power_fill)(double eta, const double* bids,
                             const double* inv_q, const double* caps,
                             double* powers, std::size_t n);
};

/// Portable reference implementation.
const Kernels& scalar();

/// AVX2 variant, or nullptr when the build or the CPU lacks it.
const Kernels* avx2();

/// NEON variant, or nullptr off aarch64.
const Kernels* neon();

/// Best variant for this process, resolved once at first use.
const Kernels& active();

}  // namespace gwf::kernels

#endif  // GWF_KERNELS_HPP_
