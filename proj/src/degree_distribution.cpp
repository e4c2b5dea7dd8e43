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

#include "prtail/degree_distribution.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "prtail/error.hpp"

namespace prtail {

IntegerPmf IntegerPmf::from_weights(std::map<std::uint64_t, double> weights) {
  IntegerPmf out;
  double total = 0.0;
  for (const auto& [k, w] : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kBadParameters, fmt::format("invalid weight {} at k={}", w, k));
    }
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::kBadParameters, "pmf has zero total mass");
  double running = 0.0;
  for (const auto& [k, w] : weights) {
    if (w == 0.0) continue;
    out.support_.push_back(k);
    out.prob_.push_back(w / total);
    running += w / total;
    out.cumulative_.push_back(running);
  }
  out.cumulative_.back() = 1.0;
  return out;
}

double IntegerPmf::pmf(std::uint64_t k) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), k);
  if (it == support_.end() || *it != k) return 0.0;
  return prob_[static_cast<std::size_t>(it - support_.begin())];
}

double IntegerPmf::tail(std::uint64_t k) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), k);
  double s = 0.0;
  for (auto i = static_cast<std::size_t>(it - support_.begin()); i < support_.size(); ++i) {
    s += prob_[i];
  }
  return s;
}

double IntegerPmf::mean() const {
  double s = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) s += static_cast<double>(support_[i]) * prob_[i];
  return s;
}

double IntegerPmf::second_moment() const {
  double s = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const auto k = static_cast<double>(support_[i]);
    s += k * k * prob_[i];
  }
  return s;
}

std::uint64_t IntegerPmf::sample(Rng& rng) const {
  const double u = rng.uniform01();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

IntegerPmf IntegerPmf::size_biased() const {
  const double mu = mean();
  if (!(mu > 0.0)) {
    throw Error(ErrorCode::kInfiniteMean, "size-biasing needs a positive finite mean");
  }
  std::map<std::uint64_t, double> w;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i] == 0) continue;
    w[support_[i] - 1] = static_cast<double>(support_[i]) * prob_[i] / mu;
  }
  return from_weights(std::move(w));
}

DegreeDistribution DegreeDistribution::explicit_pmf(const std::map<std::uint64_t, double>& pmf) {
  double total = 0.0;
  for (const auto& [k, p] : pmf) {
    if (k == 0 && p > 0.0) {
      throw Error(ErrorCode::kBadParameters, "degree pmf must be supported on k >= 1");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("degree pmf sums to {:.15g}, expected 1", total));
  }
  return DegreeDistribution(Kind::kExplicit, IntegerPmf::from_weights(pmf), 0.0);
}

DegreeDistribution DegreeDistribution::power_law(double tau, std::uint64_t k_min,
                                                 std::uint64_t k_max, bool even_only) {
  if (!(tau > 1.0)) throw Error(ErrorCode::kBadParameters, "power-law exponent must exceed 1");
  if (k_min < 1 || k_max < k_min) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("power-law support [{}, {}] is empty or contains 0", k_min, k_max));
  }
  std::map<std::uint64_t, double> w;
  for (std::uint64_t k = k_min; k <= k_max; ++k) {
    if (even_only && k % 2 != 0) continue;
    w.emplace_hint(w.end(), k, std::pow(static_cast<double>(k), -tau));
  }
  if (w.empty()) throw Error(ErrorCode::kBadParameters, "power-law support has no even value");
  return DegreeDistribution(Kind::kPowerLaw, IntegerPmf::from_weights(std::move(w)), tau);
}

bool DegreeDistribution::even_support() const {
  return std::all_of(law_.support().begin(), law_.support().end(),
                     [](std::uint64_t k) { return k % 2 == 0; });
}

std::string DegreeDistribution::describe() const {
  if (kind_ == Kind::kPowerLaw) {
    return fmt::format("power_law(tau={}, k=[{}, {}])", tau_, law_.min_value(),
                       law_.max_value());
  }
  return fmt::format("explicit({} atoms)", law_.support().size());
}

}  // namespace prtail
