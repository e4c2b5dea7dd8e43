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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prtail/degree_distribution.hpp"
#include "prtail/digraph.hpp"
#include "prtail/graph.hpp"
#include "prtail/pagerank.hpp"
#include "prtail/rng.hpp"

namespace prtail {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ExperimentKind { kCm, kPa, kCounterexample, kPolyaTree, kUnimodularTree, kDirectedRatio };

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);

struct DistributionConfig {
  enum class Type { kPowerLaw, kExplicit };
  Type type = Type::kPowerLaw;
  double tau = 2.5;
  std::uint64_t k_min = 1;
  // Defaults to n.
  std::optional<std::uint64_t> k_max;
  bool even_only = false;
  std::map<std::uint64_t, double> pmf;

  // Throws kBadParameters on invalid parameters.
  DegreeDistribution build(std::size_t n) const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kCm;
  std::size_t n = 1000;
  std::uint32_t m = 1;
  double delta = 0.0;
  DistributionConfig degrees;

  double damping = 0.85;
  PageRankMethod method = PageRankMethod::kPowerIteration;
  double tol = kDefaultTolerance;
  std::size_t max_iter = kDefaultMaxIterations;
  // Neumann depth; derived from tol when absent.
  std::optional<std::size_t> neumann_depth;

  // Limit-tree Monte Carlo.
  std::size_t samples = 10000;
  std::uint32_t depth = 8;

  // Analysis. Absent alpha / beta mean the defaults derived from the tail bounds.
  std::optional<double> alpha;
  double epsilon = 0.4;
  std::optional<double> beta;
  double min_count = 100.0;

  // directed_ratio: "eulerian" pairs d+ = d- drawn from `degrees`;
  // "fixed_out" gives every vertex out-degree m and in-degrees from `degrees`
  // with total m n.
  std::string directed_model = "eulerian";

  std::uint64_t seed = 1;
  std::size_t replications = 1;
  unsigned threads = 1;
  std::filesystem::path output = "prtail_out";
};

// Throws kBadParameters with the offending field in the message.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const ExperimentConfig& config);

struct Violation {
  enum class Severity { kError, kWarning };
  Severity severity = Severity::kError;
  std::string field;
  std::string message;
};

// Every parameter constraint of the modules a run would touch, plus warnings
// when an explicit beta sits below the bound threshold.
std::vector<Violation> validate(const ExperimentConfig& config);
bool has_errors(const std::vector<Violation>& violations);

// 1.05 times the bound threshold: 4 mean / (c (1 - c)) for configuration
// graphs and 2 ceil(2m + delta) / (c (1 - c)) for preferential attachment.
double auto_beta_cm(double mean_degree, double c);
double auto_beta_pa(std::uint32_t m, double delta, double c);

struct Artifact {
  std::string name;
  std::filesystem::path path;
  std::uint64_t hash = 0;
};

struct SeedRecord {
  std::string label;
  std::uint64_t seed = 0;
};

struct RunManifest {
  std::string version{kVersion};
  ExperimentConfig config;
  std::vector<Artifact> artifacts;
  std::vector<SeedRecord> seeds;
  nlohmann::json summary;
  double wall_seconds = 0.0;
  // False when any configured check failed.
  bool checks_passed = true;
};

nlohmann::json to_json(const RunManifest& manifest);

// Validates, runs, writes artifacts plus manifest.json into config.output.
// Throws kBadParameters on validation errors and propagates module errors.
RunManifest run(const ExperimentConfig& config);

// Graph generation used by `run` and the CLI `generate` subcommand. Kinds
// without a graph (the tree samplers) throw kBadParameters.
struct GeneratedGraph {
  std::optional<Graph> graph;
  std::optional<Digraph> digraph;
};
GeneratedGraph generate_graph(const ExperimentConfig& config, SeedStream seed);

}  // namespace prtail
