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

#include <filesystem>
#include <iosfwd>

#include "prtail/digraph.hpp"
#include "prtail/graph.hpp"

namespace prtail {

// Edge-list text format: a header line `n m`, then m lines `u v` with 0-based
// whitespace-separated endpoints. In the directed reading each line is u -> v.
// Blank lines and lines starting with '#' are ignored.

Graph read_graph(std::istream& in);
Digraph read_digraph(std::istream& in);
void write_graph(std::ostream& out, const Graph& graph);
void write_digraph(std::ostream& out, const Digraph& digraph);

Graph load_graph(const std::filesystem::path& path);
Digraph load_digraph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& graph);
void save_digraph(const std::filesystem::path& path, const Digraph& digraph);

}  // namespace prtail
