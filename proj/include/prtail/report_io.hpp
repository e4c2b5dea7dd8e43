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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "prtail/digraph.hpp"
#include "prtail/graph.hpp"
#include "prtail/limit_trees.hpp"
#include "prtail/pagerank.hpp"
#include "prtail/tail_analysis.hpp"

namespace prtail {

// CSV writers. Reals use the shortest round-trip-safe 17 significant digits.
std::string ccdf_csv(const TailReport& report);
std::string degree_csv(const Graph& graph);
std::string pagerank_csv(const Graph& graph, const PageRankVector& pagerank);
// `degree` is d+ + d-.
std::string pagerank_csv(const Digraph& digraph, const PageRankVector& pagerank);
std::string root_statistics_csv(std::span<const RootStatistic> stats);
std::string ratio_csv(const RatioBoundReport& report);
std::string condition_csv(const ConditionProbe& probe);

nlohmann::json to_json(const HillEstimate& hill);
nlohmann::json to_json(const TailReport& report);
nlohmann::json to_json(const RatioBoundReport& report);
nlohmann::json to_json(const ConditionProbe& probe);
nlohmann::json to_json(const DegreeBoundReport& report);
nlohmann::json to_json(const DirectedRatioReport& report);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

// Throws kIo on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace prtail
