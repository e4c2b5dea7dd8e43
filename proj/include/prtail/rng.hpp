// Copyright 2026 The prtail Authors.
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

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace prtail {

// Named, splittable seed. Two streams derived with different labels (or
// indices) from the same parent are statistically independent; the same
// derivation path always yields the same seed.
class SeedStream {
 public:
  constexpr explicit SeedStream(std::uint64_t master) : state_(master) {}

  SeedStream split(std::string_view label) const;
  SeedStream split(std::uint64_t index) const;

  std::uint64_t seed() const { return state_; }

  friend bool operator==(const SeedStream&, const SeedStream&) = default;

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t x);

class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(SeedStream stream) : engine_(stream.seed()) {}
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform on (0, 1); never returns 0, so safe under log and negative powers.
  double uniform_open();
  // Unbiased integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  double gamma(double shape);
  std::uint64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

}  // namespace prtail
