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

#include "prtail/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "prtail/error.hpp"

namespace prtail {
namespace {

bool next_record(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::pair<std::size_t, std::vector<std::pair<Vertex, Vertex>>> parse(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_record(in, line, line_no)) {
    throw Error(ErrorCode::kParse, "edge list is empty (missing `n m` header)");
  }
  std::size_t n = 0, m = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m)) {
      throw Error(ErrorCode::kParse, fmt::format("line {}: expected `n m` header", line_no));
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_record(in, line, line_no)) {
      throw Error(ErrorCode::kParse,
                  fmt::format("expected {} edges, found {}", m, i));
    }
    std::istringstream rec(line);
    long long u = -1, v = -1;
    if (!(rec >> u >> v)) {
      throw Error(ErrorCode::kParse, fmt::format("line {}: expected `u v`", line_no));
    }
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  fmt::format("line {}: endpoint outside [0, {})", line_no, n));
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return {n, std::move(pairs)};
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot open {} for writing", path.string()));
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open {}", path.string()));
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto [n, pairs] = parse(in);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

Digraph read_digraph(std::istream& in) {
  auto [n, pairs] = parse(in);
  std::vector<Arc> arcs;
  arcs.reserve(pairs.size());
  for (auto [u, v] : pairs) arcs.push_back({u, v});
  return Digraph::from_arc_list(n, arcs);
}

void write_graph(std::ostream& out, const Graph& graph) {
  const auto edges = graph.edges();
  fmt::print(out, "{} {}\n", graph.num_vertices(), edges.size());
  for (const Edge& e : edges) fmt::print(out, "{} {}\n", e.u, e.v);
}

void write_digraph(std::ostream& out, const Digraph& digraph) {
  const auto arcs = digraph.arcs();
  fmt::print(out, "{} {}\n", digraph.num_vertices(), arcs.size());
  for (const Arc& a : arcs) fmt::print(out, "{} {}\n", a.from, a.to);
}

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_graph(in);
}

Digraph load_digraph(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_digraph(in);
}

void save_graph(const std::filesystem::path& path, const Graph& graph) {
  auto out = open_for_write(path);
  write_graph(out, graph);
}

void save_digraph(const std::filesystem::path& path, const Digraph& digraph) {
  auto out = open_for_write(path);
  write_digraph(out, digraph);
}

}  // namespace prtail
