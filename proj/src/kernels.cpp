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

namespace gwf::kernels {

#if defined(GWF_BUILD_AVX2)
const Kernels* avx2_impl();
#endif
#if defined(GWF_BUILD_NEON)
const Kernels* neon_impl();
#endif

const Kernels* avx2() {
#if defined(GWF_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2")) {
    return avx2_impl();
  }
#endif
  return nullptr;
}

const Kernels* neon() {
#if defined(GWF_BUILD_NEON)
  return neon_impl();
#else
  return nullptr;
#endif
}

const Kernels& active() {
  static const Kernels* chosen = [] {
    if (const Kernels* k = avx2()) return k;
    if (const Kernels* k = neon()) return k;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace gwf::kernels
