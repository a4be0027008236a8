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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "gwf/kernels.hpp"

namespace {

struct Arrays {
  std::vector<double> bids, inv_q, caps;
};

Arrays random_arrays(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> bid(0.0, 8.0);
  std::uniform_real_distribution<double> q(0.25, 8.0);
  std::uniform_real_distribution<double> cap(0.01, 4.0);
  Arrays a;
  a.bids.resize(n);
  a.inv_q.resize(n);
  a.caps.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.bids[i] = bid(gen);
    a.inv_q[i] = 1.0 / q(gen);
    a.caps[i] = cap(gen);
  }
  return a;
}

const std::size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 13, 16, 33, 100, 1023};

}  // namespace

TEST_CASE("scalar reference clamps at zero and at the cap") {
  const double bids[] = {1.0, 0.1, 4.0};
  const double inv_q[] = {0.5, 2.0, 0.25};
  const double caps[] = {10.0, 10.0, 0.5};
  const auto& k = gwf::kernels::scalar();
  // eta = 1: powers are (0.5, 0 after clamp, 0.5 capped from 3.75)
  double p[3];
  k.clamped_power_fill(1.0, bids, inv_q, caps, p, 3);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == 0.0);
  CHECK(p[2] == 0.5);
  CHECK(k.clamped_power_sum(1.0, bids, inv_q, caps, 3) ==
        doctest::Approx(1.0));
}

TEST_CASE("scalar sum equals the sequential sum of the fill") {
  for (std::size_t n : kSizes) {
    const Arrays a = random_arrays(n, 1000 + n);
    std::vector<double> p(n);
    const auto& k = gwf::kernels::scalar();
    for (double eta : {0.05, 0.5, 1.0, 7.0}) {
      k.clamped_power_fill(eta, a.bids.data(), a.inv_q.data(), a.caps.data(),
                           p.data(), n);
      double total = 0.0;
      for (double x : p) total += x;
      CHECK(k.clamped_power_sum(eta, a.bids.data(), a.inv_q.data(),
                                a.caps.data(), n) == total);
    }
  }
}

TEST_CASE("active kernels are one of the known variants") {
  const auto& k = gwf::kernels::active();
  const bool known = &k == &gwf::kernels::scalar() ||
                     &k == gwf::kernels::avx2() || &k == gwf::kernels::neon();
  CHECK(known);
  CHECK(k.name != nullptr);
}

TEST_CASE("simd variants match the scalar reference") {
  const gwf::kernels::Kernels* variants[] = {gwf::kernels::avx2(),
                                             gwf::kernels::neon()};
  for (const auto* simd : variants) {
    if (simd == nullptr) continue;
    CAPTURE(simd->name);
    for (std::size_t n : kSizes) {
      const Arrays a = random_arrays(n, 77 + n);
      std::vector<double> ps(n), pv(n);
      for (double eta : {0.01, 0.3, 1.0, 2.5, 50.0}) {
        gwf::kernels::scalar().clamped_power_fill(
            eta, a.bids.data(), a.inv_q.data(), a.caps.data(), ps.data(), n);
        simd->clamped_power_fill(eta, a.bids.data(), a.inv_q.data(),
                                 a.caps.data(), pv.data(), n);
        // The per-element op set is identical, so the fill must agree
        // bit for bit.
        CHECK((n == 0 ||
               std::memcmp(ps.data(), pv.data(), n * sizeof(double)) == 0));

        const double sum_s = gwf::kernels::scalar().clamped_power_sum(
            eta, a.bids.data(), a.inv_q.data(), a.caps.data(), n);
        const double sum_v = simd->clamped_power_sum(
            eta, a.bids.data(), a.inv_q.data(), a.caps.data(), n);
        // The reduction order differs, so allow rounding slack only.
        CHECK(sum_v ==
              doctest::Approx(sum_s).epsilon(1e-13).scale(sum_s + 1.0));
      }
    }
  }
}

TEST_CASE("sum kernel is non-increasing in eta") {
  const Arrays a = random_arrays(12, 4242);
  const auto& k = gwf::kernels::active();
  double prev = k.clamped_power_sum(1e-3, a.bids.data(), a.inv_q.data(),
                                    a.caps.data(), 12);
  for (double eta = 2e-3; eta < 100.0; eta *= 1.37) {
    const double g = k.clamped_power_sum(eta, a.bids.data(), a.inv_q.data(),
                                         a.caps.data(), 12);
    CHECK(g <= prev + 1e-12);
    prev = g;
  }
}
