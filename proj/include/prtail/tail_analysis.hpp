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
#include <optional>
#include <span>
#include <vector>

#include "prtail/digraph.hpp"
#include "prtail/graph.hpp"
#include "prtail/limit_trees.hpp"

namespace prtail {

struct HillEstimate {
  double tail_index = 0.0;
  double std_error = 0.0;
  std::size_t k_top = 0;
};

// Empirical complementary distribution P(X > k), strict inequality.
struct TailReport {
  std::vector<double> grid;
  std::vector<double> ccdf;
  std::vector<std::size_t> counts;
  std::size_t sample_size = 0;
  std::vector<HillEstimate> hill;
};

// Throws kEmptySample on an empty input.
TailReport empirical_ccdf(std::span<const double> values, std::span<const double> grid);

// Integer grid lo, lo + 1, ..., hi.
std::vector<double> integer_grid(std::uint64_t lo, std::uint64_t hi);
// Evenly spaced grid with `points` entries on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

// Hill estimate of the tail index from the top k_top order statistics.
// Throws kInsufficientSample unless 2 <= k_top < N, all values are positive
// and the top order statistics are not all equal to the threshold.
HillEstimate hill_estimator(std::span<const double> values, std::size_t k_top);

struct RatioRow {
  double k = 0.0;
  double pagerank_ccdf = 0.0;       // P(R > k)
  double scaled_degree_ccdf = 0.0;  // P(D > beta k)
  double degree_ccdf = 0.0;         // P(D > k)
  std::optional<double> ratio;      // absent when the denominator is zero
  bool populated = false;
};

struct RatioBoundReport {
  double beta = 0.0;
  double min_ccdf = 0.0;
  double tolerance = 0.0;
  std::vector<RatioRow> rows;
  // Grid points where P(R > k) > P(D > k).
  std::size_t upper_violations = 0;
  // Longest run of consecutive grid points with ratio >= 1 - tolerance.
  std::optional<std::pair<double, double>> window;
  // Over rows where both ccdfs are at least min_ccdf.
  std::size_t populated = 0;
  std::optional<double> min_populated_ratio;
};

// Compares P(R > k) against P(D > beta k) on `grid`. Rows count as populated
// when both P(R > k) and P(D > beta k) reach `min_count` / N.
RatioBoundReport ratio_bound_report(std::span<const double> pagerank,
                                    std::span<const double> degrees, double beta,
                                    std::span<const double> grid, double min_count = 100.0,
                                    double tolerance = 0.1);

struct RootNeighborhood {
  std::uint64_t degree = 0;
  // One entry per edge slot at the root.
  std::vector<std::uint64_t> neighbor_degrees;
};

// Every vertex of the graph as a root.
std::vector<RootNeighborhood> graph_neighborhoods(const Graph& graph);
// Directed variant: the root degree is the in-degree and each in-arc j -> v
// contributes the out-degree of j.
std::vector<RootNeighborhood> digraph_neighborhoods(const Digraph& digraph);
// Root of a sampled tree; needs depth >= 1.
RootNeighborhood tree_root_neighborhood(const TruncatedRootedTree& tree);

struct ConditionRow {
  double k = 0.0;
  std::size_t marginal = 0;  // #{d > k}
  std::size_t joint = 0;     // #{d > k, d^(>= alpha) >= (1 - eps) d}
  std::optional<double> ratio;
  bool populated = false;
};

struct ConditionProbe {
  double alpha = 0.0;
  double epsilon = 0.0;
  std::size_t samples = 0;
  std::vector<ConditionRow> rows;
  bool joint_le_marginal = true;
  std::optional<double> first_populated_ratio;
  std::optional<double> last_populated_ratio;
  // first / last over the populated rows; infinite when the last ratio is 0.
  std::optional<double> decay_factor;
  // Populated ratios never increase along the grid.
  bool nonincreasing = true;
};

ConditionProbe condition_probe(std::span<const RootNeighborhood> roots, double alpha,
                               double epsilon, std::span<const double> grid,
                               std::size_t min_count = 100);

// Threshold 2 ceil(E[d~]) for neighbor degrees bounded by an i.i.d. family
// with mean `mean`.
double default_alpha_mean(double mean);
// Threshold ceil(2m + delta) used for preferential attachment.
double default_alpha_pa(std::uint32_t m, double delta);

}  // namespace prtail
