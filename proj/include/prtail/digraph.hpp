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
#include <span>
#include <vector>

#include "prtail/graph.hpp"

namespace prtail {

// Directed edge u -> v.
struct Arc {
  Vertex from;
  Vertex to;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable directed multigraph with both out- and in-adjacency.
//
// Construction only checks endpoint ranges; dangling vertices (d+ = 0) are
// representable so that solve_directed can report them precisely.
class Digraph {
 public:
  static Digraph from_arc_list(std::size_t n, std::span<const Arc> arcs);

  std::size_t num_vertices() const { return out_offsets_.size() - 1; }
  std::size_t num_arcs() const { return out_targets_.size(); }

  std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v], out_degree(v)};
  }
  std::span<const Vertex> in_neighbors(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v], in_degree(v)};
  }

  std::vector<Arc> arcs() const;

  // mult(j in out(i)) == mult(i in in(j)) for all i, j.
  bool is_consistent() const;

 private:
  Digraph() = default;

  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
};

}  // namespace prtail
