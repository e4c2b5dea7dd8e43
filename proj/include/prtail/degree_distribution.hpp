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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "prtail/rng.hpp"

namespace prtail {

// Probability mass function on a finite subset of the nonnegative integers,
// with an inverse-CDF sampler.
class IntegerPmf {
 public:
  IntegerPmf() = default;
  // `weights` need not be normalized; zero weights are dropped. Throws
  // kBadParameters for negative/non-finite weights or zero total mass.
  static IntegerPmf from_weights(std::map<std::uint64_t, double> weights);

  double pmf(std::uint64_t k) const;
  // P(X >= k).
  double tail(std::uint64_t k) const;
  double mean() const;
  double second_moment() const;

  std::span<const std::uint64_t> support() const { return support_; }
  std::span<const double> probabilities() const { return prob_; }
  std::uint64_t min_value() const { return support_.front(); }
  std::uint64_t max_value() const { return support_.back(); }

  std::uint64_t sample(Rng& rng) const;

  // p*_k = (k + 1) p_{k+1} / E[X]: the number of further neighbors seen from
  // a vertex reached along a uniformly chosen edge.
  IntegerPmf size_biased() const;

 private:
  std::vector<std::uint64_t> support_;
  std::vector<double> prob_;
  std::vector<double> cumulative_;
};

// Degree law: an IntegerPmf with support in the positive integers, tagged with
// how it was built.
class DegreeDistribution {
 public:
  enum class Kind { kExplicit, kPowerLaw };

  // Probabilities must sum to 1 within 1e-12 (the explicit pmf is taken as
  // given, not renormalized).
  static DegreeDistribution explicit_pmf(const std::map<std::uint64_t, double>& pmf);

  // p_k proportional to k^{-tau} on [k_min, k_max], restricted to even k when
  // `even_only`. The slowly varying factor is constant.
  static DegreeDistribution power_law(double tau, std::uint64_t k_min, std::uint64_t k_max,
                                      bool even_only = false);

  Kind kind() const { return kind_; }
  double tau() const { return tau_; }
  bool even_support() const;

  double pmf(std::uint64_t k) const { return law_.pmf(k); }
  double mean() const { return law_.mean(); }
  const IntegerPmf& law() const { return law_; }
  // Size-biased law of k - 1; computed once at construction.
  const IntegerPmf& offspring_law() const { return offspring_; }
  std::uint64_t sample(Rng& rng) const { return law_.sample(rng); }

  std::string describe() const;

 private:
  DegreeDistribution(Kind kind, IntegerPmf law, double tau)
      : kind_(kind), law_(std::move(law)), offspring_(law_.size_biased()), tau_(tau) {}

  Kind kind_;
  IntegerPmf law_;
  IntegerPmf offspring_;
  double tau_ = 0.0;
};

}  // namespace prtail
