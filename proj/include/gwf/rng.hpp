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

#ifndef GWF_RNG_HPP_
#define GWF_RNG_HPP_

#include <cstdint>

namespace gwf {

/// SplitMix64 step. Fully specified, so streams are identical on every
/// platform and standard library.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Tiny deterministic stream built on repeated SplitMix64 steps.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = splitmix64(state_);
    return state_;
  }

  /// Uniform draw on the open interval (0, 1).
  double next_unit_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform draw on (0, hi).
  double next_open(double hi) { return hi * next_unit_open(); }

 private:
  std::uint64_t state_;
};

/// Independent substream seed for repetition r of grid cell k. Derived
/// only from (base, k, r) so parallel evaluation order cannot change any
/// draw.
inline std::uint64_t substream_seed(std::uint64_t base, std::uint64_t k,
                                    std::uint64_t r) {
  return splitmix64(splitmix64(base ^ splitmix64(k + 1)) ^ splitmix64(r + 1));
}

}  // namespace gwf

#endif  // GWF_RNG_HPP_
