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
#include <span>
#include <vector>

#include "prtail/degree_distribution.hpp"
#include "prtail/digraph.hpp"
#include "prtail/graph.hpp"
#include "prtail/rng.hpp"

namespace prtail {

struct DegreeSequence {
  std::vector<std::uint64_t> degrees;

  std::uint64_t total() const;
};

// n i.i.d. draws from `dist`; an odd total is made even by adding one to the
// last entry.
DegreeSequence sample_degrees(const DegreeDistribution& dist, std::size_t n, SeedStream seed);

// n i.i.d. draws from `dist`, then unit moves on uniformly chosen vertices
// (kept inside [min, max] of the support) until the sum equals `total`.
// Throws kBadParameters when `total` is out of reach.
DegreeSequence sample_degrees_with_total(const DegreeDistribution& dist, std::size_t n,
                                         std::uint64_t total, SeedStream seed);

// Uniform perfect matching of the half-edges (Fisher-Yates shuffle, then
// consecutive pairs). Degrees of the output equal the input exactly, with
// self-loops counted twice. Throws kOddStubCount and kIsolatedVertex (d_i = 0).
Graph configuration_model(const DegreeSequence& degrees, SeedStream seed);

// Preferential attachment without self-loops, intermediate degree updates.
// Vertices 0 and 1 start joined by m parallel edges; every later vertex sends
// m edges one at a time, the (j+1)-th to an existing vertex i with probability
// (D_i + delta) / (2m(t - 1) + j + delta t) where t is the number of existing
// vertices. Requires n >= 2, m >= 1, delta > -m.
Graph preferential_attachment(std::size_t n, std::uint32_t m, double delta, SeedStream seed);

// Circulant graph on Z_n: i ~ i +- 1, ..., i +- k/2. Requires even k with
// 2 <= k < n.
Graph circulant(std::uint32_t k, std::size_t n);

struct CirculantComponent {
  std::uint32_t degree;
  std::size_t size;
  Vertex first_vertex;
};

struct CounterexampleGraph {
  Graph graph;
  // Largest component degree M_n.
  std::uint32_t max_component_degree;
  // Components in increasing degree order; vertices are contiguous per
  // component.
  std::vector<CirculantComponent> components;
  // One bridge between consecutive components: last vertex of component i to
  // the first vertex of component i + 1.
  std::vector<Edge> bridges;
};

// M_n: the largest support element M of p with floor(n p_k) >= k + 1 for every
// support element k <= M, capped at 2 log2 n. Returns 0 when no support
// element qualifies.
std::uint32_t counterexample_max_degree(const DegreeDistribution& p, std::size_t n);

// Disjoint union of circulant(k, floor(n p_k)) over support elements k <= M_n,
// chained into a connected graph by bridges when `connect` is set. Requires an
// even support; throws kUnreachableSchedule when M_n < 2.
CounterexampleGraph counterexample_graph(const DegreeDistribution& p, std::size_t n,
                                         bool connect = true);

// Directed configuration model: out-stubs matched uniformly to in-stubs.
// Requires equal totals.
Digraph directed_configuration_model(std::span<const std::uint64_t> out_degrees,
                                     std::span<const std::uint64_t> in_degrees,
                                     SeedStream seed);

// d+ = d- = d at every vertex (directed Eulerian in the degree sense).
Digraph eulerian_configuration_model(const DegreeSequence& degrees, SeedStream seed);

}  // namespace prtail
