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

#include "prtail/digraph.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "prtail/error.hpp"

namespace prtail {
namespace {

void build_csr(std::size_t n, const std::vector<std::size_t>& degree,
               std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  offsets.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + degree[i];
  targets.resize(offsets[n]);
}

void sort_rows(const std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
    std::sort(targets.begin() + static_cast<std::ptrdiff_t>(offsets[i]),
              targets.begin() + static_cast<std::ptrdiff_t>(offsets[i + 1]));
  }
}

}  // namespace

Digraph Digraph::from_arc_list(std::size_t n, std::span<const Arc> arcs) {
  if (n == 0) {
    throw Error(ErrorCode::kBadParameters, "digraph must have at least one vertex");
  }
  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  fmt::format("arc {} -> {} has an endpoint outside [0, {})", a.from, a.to, n));
    }
    ++out_deg[a.from];
    ++in_deg[a.to];
  }
  Digraph g;
  build_csr(n, out_deg, g.out_offsets_, g.out_targets_);
  build_csr(n, in_deg, g.in_offsets_, g.in_sources_);
  std::vector<std::size_t> out_cur(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_cur(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (const Arc& a : arcs) {
    g.out_targets_[out_cur[a.from]++] = a.to;
    g.in_sources_[in_cur[a.to]++] = a.from;
  }
  sort_rows(g.out_offsets_, g.out_targets_);
  sort_rows(g.in_offsets_, g.in_sources_);
  return g;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs());
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    for (Vertex v : out_neighbors(static_cast<Vertex>(i))) out.push_back({static_cast<Vertex>(i), v});
  }
  return out;
}

bool Digraph::is_consistent() const {
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    const auto u = static_cast<Vertex>(i);
    auto out = out_neighbors(u);
    for (std::size_t pos = 0; pos < out.size();) {
      const Vertex v = out[pos];
      std::size_t run = 1;
      while (pos + run < out.size() && out[pos + run] == v) ++run;
      auto in = in_neighbors(v);
      auto range = std::equal_range(in.begin(), in.end(), u);
      if (static_cast<std::size_t>(range.second - range.first) != run) return false;
      pos += run;
    }
  }
  return true;
}

}  // namespace prtail
