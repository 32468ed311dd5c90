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

#ifndef POSIBOT_KERNELS_HPP_
#define POSIBOT_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Dense and sparse double-precision kernels behind the softmax classifier.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2+FMA
// variant is compiled separately and chosen at runtime when the CPU supports
// it. Set POSIBOT_KERNELS=scalar to force the reference path. Variants agree
// to rounding (summation order differs), not bit-for-bit, so a single
// process always uses one table for reproducible training.

namespace posibot::kernels {

struct KernelTable {
  std::string_view name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x *= alpha
  void (*scale)(double alpha, double* x, std::size_t n);
  double (*max)(const double* x, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  // sum_k row[index[k]] * value[k]
  double (*sparse_dot)(const double* row, const std::uint32_t* index,
                       const double* value, std::size_t nnz);
  // In-place numerically stable softmax (max subtraction); n >= 1.
  void (*softmax)(double* x, std::size_t n);
};

const KernelTable& scalar_table();

// nullptr when not compiled in or unsupported by this CPU.
const KernelTable* avx2_table();

// Table used by the library; chosen once per process.
const KernelTable& active();

// All tables usable on this machine, scalar first.
std::vector<const KernelTable*> available_tables();

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

inline void scale(double alpha, std::span<double> x) {
  active().scale(alpha, x.data(), x.size());
}

inline double sparse_dot(std::span<const double> row,
                         std::span<const std::uint32_t> index,
                         std::span<const double> value) {
  return active().sparse_dot(row.data(), index.data(), value.data(),
                             index.size());
}

inline void softmax(std::span<double> x) {
  if (!x.empty()) active().softmax(x.data(), x.size());
}

}  // namespace posibot::kernels

#endif  // POSIBOT_KERNELS_HPP_
