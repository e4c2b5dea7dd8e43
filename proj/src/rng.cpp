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

#include "prtail/rng.hpp"

#include <cmath>
#include <limits>

#include "prtail/error.hpp"

namespace prtail {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotConverged: return "NotConverged";
    case ErrorCode::kDanglingVertex: return "DanglingVertex";
    case ErrorCode::kOddStubCount: return "OddStubCount";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kUnreachableSchedule: return "UnreachableSchedule";
    case ErrorCode::kInfiniteMean: return "InfiniteMean";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kInsufficientSample: return "InsufficientSample";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeedStream SeedStream::split(std::string_view label) const {
  // FNV-1a over the label, then mixed with the parent state.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return SeedStream(mix64(state_ ^ mix64(h)));
}

SeedStream SeedStream::split(std::uint64_t index) const {
  return SeedStream(mix64(mix64(state_) + 0x632be59bd9b4e019ULL * (index + 1)));
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() {
  return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw Error(ErrorCode::kBadParameters, "Rng::below requires a positive bound");
  }
  // Lemire's multiply-shift rejection method.
  __extension__ using u128 = unsigned __int128;
  std::uint64_t x = engine_();
  u128 product = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = engine_();
      product = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double Rng::gamma(double shape) {
  std::gamma_distribution<double> dist(shape, 1.0);
  return dist(engine_);
}

std::uint64_t Rng::poisson(double mean) {
  if (mean <= 0.0) return 0;
  if (!std::isfinite(mean) ||
      mean > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) {
    throw Error(ErrorCode::kBadParameters, "Poisson mean out of range");
  }
  std::poisson_distribution<std::int64_t> dist(mean);
  return static_cast<std::uint64_t>(dist(engine_));
}

}  // namespace prtail
