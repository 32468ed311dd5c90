//
// Copyright 2026 The Posibot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cstdlib>
#include <string_view>

#include "kernels/kernels_internal.hpp"
#include "posibot/kernels.hpp"

namespace posibot::kernels {
namespace {

constexpr KernelTable kScalar{
    "scalar",       scalar::dot,        scalar::axpy,    scalar::scale,
    scalar::max,    scalar::sum,        scalar::sparse_dot, scalar::softmax,
};

#if defined(POSIBOT_HAVE_AVX2)
constexpr KernelTable kAvx2{
    "avx2",      avx2::dot,        avx2::axpy,    avx2::scale,
    avx2::max,   avx2::sum,        avx2::sparse_dot, avx2::softmax,
};
#endif

bool cpu_has_avx2() {
#if defined(POSIBOT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& choose() {
  if (const char* forced = std::getenv("POSIBOT_KERNELS")) {
    if (std::string_view(forced) == "scalar") return kScalar;
  }
  if (const KernelTable* simd = avx2_table()) return *simd;
  return kScalar;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(POSIBOT_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& table = choose();
  return table;
}

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> out{&kScalar};
  if (const KernelTable* simd = avx2_table()) out.push_back(simd);
  return out;
}

}  // namespace posibot::kernels
