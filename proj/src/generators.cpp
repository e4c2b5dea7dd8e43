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

#include "prtail/generators.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "prtail/error.hpp"

namespace prtail {
namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

std::vector<Vertex> stubs_of(std::span<const std::uint64_t> degrees) {
  std::vector<Vertex> stubs;
  stubs.reserve(std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0}));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    stubs.insert(stubs.end(), degrees[i], static_cast<Vertex>(i));
  }
  return stubs;
}

}  // namespace

std::uint64_t DegreeSequence::total() const {
  return std::accumulate(degrees.begin(), degrees.end(), std::uint64_t{0});
}

DegreeSequence sample_degrees(const DegreeDistribution& dist, std::size_t n, SeedStream seed) {
  if (n == 0) throw Error(ErrorCode::kBadParameters, "sample_degrees needs n >= 1");
  Rng rng(seed);
  DegreeSequence seq;
  seq.degrees.resize(n);
  for (auto& d : seq.degrees) d = dist.sample(rng);
  if (seq.total() % 2 != 0) ++seq.degrees.back();
  return seq;
}

DegreeSequence sample_degrees_with_total(const DegreeDistribution& dist, std::size_t n,
                                         std::uint64_t total, SeedStream seed) {
  if (n == 0) throw Error(ErrorCode::kBadParameters, "sample_degrees needs n >= 1");
  const std::uint64_t lo = dist.law().min_value();
  const std::uint64_t hi = dist.law().max_value();
  if (total < lo * n || total > hi * n) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("degree total {} unreachable with {} values in [{}, {}]", total, n,
                            lo, hi));
  }
  Rng rng(seed);
  DegreeSequence seq;
  seq.degrees.resize(n);
  for (auto& d : seq.degrees) d = dist.sample(rng);
  std::uint64_t sum = seq.total();
  while (sum != total) {
    auto& d = seq.degrees[rng.below(n)];
    if (sum < total && d < hi) {
      ++d;
      ++sum;
    } else if (sum > total && d > lo) {
      --d;
      --sum;
    }
  }
  return seq;
}

Graph configuration_model(const DegreeSequence& degrees, SeedStream seed) {
  if (degrees.total() % 2 != 0) {
    throw Error(ErrorCode::kOddStubCount,
                fmt::format("degree sum {} is odd", degrees.total()));
  }
  auto stubs = stubs_of(degrees.degrees);
  Rng rng(seed);
  shuffle(stubs, rng);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return Graph::from_edge_list(degrees.degrees.size(), edges);
}

Graph preferential_attachment(std::size_t n, std::uint32_t m, double delta, SeedStream seed) {
  if (n < 2 || m < 1 || !(delta > -static_cast<double>(m))) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("preferential attachment needs n >= 2, m >= 1, delta > -m "
                            "(got n={}, m={}, delta={})",
                            n, m, delta));
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (n - 1));
  for (std::uint32_t j = 0; j < m; ++j) edges.push_back({0, 1});

  // Weight of an existing vertex i is (D_i - m) + (m + delta) with D_i >= m.
  // `excess` holds vertex i exactly D_i - m times, so a uniform draw from it
  // realizes the first part and a uniform existing vertex the second.
  std::vector<Vertex> excess;
  excess.reserve(static_cast<std::size_t>(m) * (n - 1));
  const double base = static_cast<double>(m) + delta;
  for (std::size_t t = 2; t < n; ++t) {
    const auto newcomer = static_cast<Vertex>(t);
    const double uniform_mass = base * static_cast<double>(t);
    for (std::uint32_t j = 0; j < m; ++j) {
      const double total = static_cast<double>(excess.size()) + uniform_mass;
      const double u = rng.uniform01() * total;
      Vertex target;
      if (u < static_cast<double>(excess.size())) {
        target = excess[std::min(static_cast<std::size_t>(u), excess.size() - 1)];
      } else {
        target = static_cast<Vertex>(rng.below(t));
      }
      edges.push_back({newcomer, target});
      excess.push_back(target);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph circulant(std::uint32_t k, std::size_t n) {
  if (k < 2 || k % 2 != 0 || k >= n) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("circulant graph needs even k with 2 <= k < n (got k={}, n={})", k, n));
  }
  std::vector<Edge> edges;
  edges.reserve(n * k / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t step = 1; step <= k / 2; ++step) {
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + step) % n)});
    }
  }
  return Graph::from_edge_list(n, edges);
}

namespace {

std::size_t component_size(double p, std::size_t n) {
  // The small offset absorbs representation error in products such as 25 * 0.28.
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * p + 1e-9));
}

}  // namespace

std::uint32_t counterexample_max_degree(const DegreeDistribution& p, std::size_t n) {
  const double cap = 2.0 * std::log2(static_cast<double>(n));
  std::uint32_t best = 0;
  const auto support = p.law().support();
  const auto probs = p.law().probabilities();
  for (std::size_t i = 0; i < support.size(); ++i) {
    const std::uint64_t k = support[i];
    if (static_cast<double>(k) > cap) break;
    if (component_size(probs[i], n) < k + 1) break;
    best = static_cast<std::uint32_t>(k);
  }
  return best;
}

CounterexampleGraph counterexample_graph(const DegreeDistribution& p, std::size_t n,
                                         bool connect) {
  if (!p.even_support()) {
    throw Error(ErrorCode::kBadParameters, "counterexample needs p_k = 0 for every odd k");
  }
  const std::uint32_t max_degree = counterexample_max_degree(p, n);
  if (max_degree < 2) {
    throw Error(ErrorCode::kUnreachableSchedule,
                fmt::format("no component schedule with M_n >= 2 exists at n={}", n));
  }
  std::vector<CirculantComponent> components;
  std::vector<Edge> bridges;
  std::vector<Edge> edges;
  std::size_t offset = 0;
  const auto support = p.law().support();
  const auto probs = p.law().probabilities();
  for (std::size_t i = 0; i < support.size() && support[i] <= max_degree; ++i) {
    const auto k = static_cast<std::uint32_t>(support[i]);
    const std::size_t size = component_size(probs[i], n);
    components.push_back({k, size, static_cast<Vertex>(offset)});
    for (std::size_t v = 0; v < size; ++v) {
      for (std::uint32_t step = 1; step <= k / 2; ++step) {
        edges.push_back({static_cast<Vertex>(offset + v),
                         static_cast<Vertex>(offset + (v + step) % size)});
      }
    }
    offset += size;
  }
  if (connect) {
    for (std::size_t c = 0; c + 1 < components.size(); ++c) {
      const auto& a = components[c];
      const auto& b = components[c + 1];
      const Edge bridge{static_cast<Vertex>(a.first_vertex + a.size - 1), b.first_vertex};
      bridges.push_back(bridge);
      edges.push_back(bridge);
    }
  }
  return {Graph::from_edge_list(offset, edges), max_degree, std::move(components),
          std::move(bridges)};
}

Digraph directed_configuration_model(std::span<const std::uint64_t> out_degrees,
                                     std::span<const std::uint64_t> in_degrees,
                                     SeedStream seed) {
  if (out_degrees.size() != in_degrees.size()) {
    throw Error(ErrorCode::kBadParameters, "in- and out-degree sequences differ in length");
  }
  auto out_stubs = stubs_of(out_degrees);
  auto in_stubs = stubs_of(in_degrees);
  if (out_stubs.size() != in_stubs.size()) {
    throw Error(ErrorCode::kOddStubCount,
                fmt::format("out-stub total {} differs from in-stub total {}", out_stubs.size(),
                            in_stubs.size()));
  }
  Rng rng(seed);
  shuffle(in_stubs, rng);
  std::vector<Arc> arcs(out_stubs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i] = {out_stubs[i], in_stubs[i]};
  return Digraph::from_arc_list(out_degrees.size(), arcs);
}

Digraph eulerian_configuration_model(const DegreeSequence& degrees, SeedStream seed) {
  return directed_configuration_model(degrees.degrees, degrees.degrees, seed);
}

}  // namespace prtail
