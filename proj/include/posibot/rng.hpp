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

#ifndef POSIBOT_RNG_HPP_
#define POSIBOT_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace posibot {

struct RandomSeed {
  std::uint64_t value = 0;

  friend bool operator==(const RandomSeed&, const RandomSeed&) = default;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Child seed for stream (a, b) of `parent`. Distinct (a, b) pairs give
// statistically independent streams; the mapping is stable across builds.
RandomSeed derive_seed(RandomSeed parent, std::uint64_t a, std::uint64_t b = 0);

// Platform-stable generator: mt19937_64 output is fully specified, and the
// distributions below avoid the implementation-defined std:: ones.
class Rng {
 public:
  explicit Rng(RandomSeed seed) : engine_(mix64(seed.value)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, n); n must be > 0.
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace posibot

#endif  // POSIBOT_RNG_HPP_
