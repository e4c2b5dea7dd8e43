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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "prtail/rng.hpp"

namespace prtail {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable undirected multigraph in compressed adjacency form.
//
// Parallel edges and self-loops are allowed. A self-loop at v contributes 2 to
// deg(v) and appears twice in neighbors(v), so a_vv = 2 and every row of the
// transition matrix a_ij / d_i sums to one. Every vertex has degree >= 1.
class Graph {
 public:
  // Throws kOutOfRange for an endpoint >= n and kIsolatedVertex when some
  // vertex ends with degree zero.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Sorted neighbor multiset of v.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }

  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;

  // Each undirected edge once (self-loops once per loop), u <= v, in
  // lexicographic order.
  std::vector<Edge> edges() const;

  // Multiset symmetry of the adjacency: mult(j in adj(i)) == mult(i in adj(j)),
  // with self-loops occupying an even number of slots.
  bool is_symmetric() const;

 private:
  Graph() = default;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

// Number of adjacency slots of v whose endpoint has degree >= alpha. Parallel
// edges count once per slot and a self-loop counts twice.
std::size_t degree_at_least(const Graph& graph, Vertex v, double alpha);

struct RootSample {
  Vertex vertex;
  SeedStream seed;
};

// Uniformly random vertex, deterministic in `seed`.
RootSample uniform_root(const Graph& graph, SeedStream seed);

}  // namespace prtail
