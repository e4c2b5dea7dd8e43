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

#include "prtail/graph.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "prtail/error.hpp"

namespace prtail {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) {
    throw Error(ErrorCode::kBadParameters, "graph must have at least one vertex");
  }
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  fmt::format("edge ({}, {}) has an endpoint outside [0, {})", e.u, e.v, n));
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 0) {
      throw Error(ErrorCode::kIsolatedVertex, fmt::format("vertex {} is isolated", i));
    }
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.neighbors_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.neighbors_[cursor[e.u]++] = e.v;
    g.neighbors_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  return g;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(num_vertices());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = degree(static_cast<Vertex>(i));
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    best = std::max(best, degree(static_cast<Vertex>(i)));
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    const auto u = static_cast<Vertex>(i);
    bool skip_loop_slot = false;
    for (Vertex v : neighbors(u)) {
      if (v < u) continue;
      if (v == u) {
        // A loop occupies two consecutive slots of the sorted list.
        skip_loop_slot = !skip_loop_slot;
        if (!skip_loop_slot) continue;
      }
      out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_symmetric() const {
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    const auto u = static_cast<Vertex>(i);
    auto adj = neighbors(u);
    for (std::size_t pos = 0; pos < adj.size();) {
      const Vertex v = adj[pos];
      std::size_t run = 1;
      while (pos + run < adj.size() && adj[pos + run] == v) ++run;
      if (v == u) {
        if (run % 2 != 0) return false;
      } else {
        auto back = neighbors(v);
        auto range = std::equal_range(back.begin(), back.end(), u);
        if (static_cast<std::size_t>(range.second - range.first) != run) return false;
      }
      pos += run;
    }
  }
  return true;
}

std::size_t degree_at_least(const Graph& graph, Vertex v, double alpha) {
  std::size_t count = 0;
  for (Vertex j : graph.neighbors(v)) {
    if (static_cast<double>(graph.degree(j)) >= alpha) ++count;
  }
  return count;
}

RootSample uniform_root(const Graph& graph, SeedStream seed) {
  Rng rng(seed);
  return {static_cast<Vertex>(rng.below(graph.num_vertices())), seed};
}

}  // namespace prtail
