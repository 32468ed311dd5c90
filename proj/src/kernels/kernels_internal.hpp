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

#ifndef POSIBOT_SRC_KERNELS_KERNELS_INTERNAL_HPP_
#define POSIBOT_SRC_KERNELS_KERNELS_INTERNAL_HPP_

#include <cstddef>
#include <cstdint>

namespace posibot::kernels {

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
double max(const double* x, std::size_t n);
double sum(const double* x, std::size_t n);
double sparse_dot(const double* row, const std::uint32_t* index,
                  const double* value, std::size_t nnz);
void softmax(double* x, std::size_t n);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
double max(const double* x, std::size_t n);
double sum(const double* x, std::size_t n);
double sparse_dot(const double* row, const std::uint32_t* index,
                  const double* value, std::size_t nnz);
void softmax(double* x, std::size_t n);
}  // namespace avx2

}  // namespace posibot::kernels

#endif  // POSIBOT_SRC_KERNELS_KERNELS_INTERNAL_HPP_
