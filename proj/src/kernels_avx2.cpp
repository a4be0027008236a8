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

// Compiled with -mavx2. Must only be reached through the runtime dispatch
// in kernels.cpp, which checks CPU support first.

#include "gwf/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace gwf::kernels {

namespace {

inline __m256d clamped_power_4(__m256d eta, __m256d c, __m256d iq,
                               __m256d cap) {
  __m256d p = _mm256_sub_pd(_mm256_div_pd(c, eta), iq);
  p = _mm256_max_pd(p, _mm256_setzero_pd());
  return _mm256_min_pd(p, cap);
}

double clamped_power_sum_avx2(double eta, const double* bids,
                              const double* inv_q, const double* caps,
                              std::size_t n) {
  const __m256d veta = _mm256_set1_pd(eta);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p =
        clamped_power_4(veta, _mm256_loadu_pd(bids + i),
                        _mm256_loadu_pd(inv_q + i), _mm256_loadu_pd(caps + i));
    acc = _mm256_add_pd(acc, p);
  }
  const __m128d lo = _mm256_castpd256_pd128(acc);
  const __m128d hi = _mm256_extractf128_pd(acc, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  double total = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
  for (; i < n; ++i) {
    total += std::min(std::max(bids[i] / eta - inv_q[i], 0.0), caps[i]);
  }
  return total;
}

void clamped_power_fill_avx2(double eta, const double* bids,
                             const double* inv_q, const double* caps,
                             double* powers, std::size_t n) {
  const __m256d veta = _mm256_set1_pd(eta);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p =
        clamped_power_4(veta, _mm256_loadu_pd(bids + i),
                        _mm256_loadu_pd(inv_q + i), _mm256_loadu_pd(caps + i));
    _mm256_storeu_pd(powers + i, p);
  }
  for (; i < n; ++i) {
    powers[i] = std::min(std::max(bids[i] / eta - inv_q[i], 0.0), caps[i]);
  }
}

}  // namespace

const Kernels* avx2_impl();

const Kernels* avx2_impl() {
  static const Kernels k{"avx2", clamped_power_sum_avx2,
                         clamped_power_fill_avx2};
  return &k;
}

}  // namespace gwf::kernels
