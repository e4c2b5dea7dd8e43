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

#include "prtail/tail_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "prtail/error.hpp"

namespace prtail {
namespace {

std::vector<double> sorted_copy(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

// #{x > k} over an ascending sample.
std::size_t count_above(const std::vector<double>& sorted, double k) {
  return static_cast<std::size_t>(sorted.end() -
                                  std::upper_bound(sorted.begin(), sorted.end(), k));
}

}  // namespace

TailReport empirical_ccdf(std::span<const double> values, std::span<const double> grid) {
  if (values.empty()) throw Error(ErrorCode::kEmptySample, "ccdf of an empty sample");
  const auto sorted = sorted_copy(values);
  TailReport report;
  report.sample_size = sorted.size();
  report.grid.assign(grid.begin(), grid.end());
  const double n = static_cast<double>(sorted.size());
  for (double k : grid) {
    const std::size_t c = count_above(sorted, k);
    report.counts.push_back(c);
    report.ccdf.push_back(static_cast<double>(c) / n);
  }
  return report;
}

std::vector<double> integer_grid(std::uint64_t lo, std::uint64_t hi) {
  std::vector<double> grid;
  for (std::uint64_t k = lo; k <= hi; ++k) grid.push_back(static_cast<double>(k));
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  std::vector<double> grid;
  if (points == 0) return grid;
  if (points == 1) return {lo};
  for (std::size_t i = 0; i < points; ++i) {
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  return grid;
}

HillEstimate hill_estimator(std::span<const double> values, std::size_t k_top) {
  if (k_top < 2 || k_top >= values.size()) {
    throw Error(ErrorCode::kInsufficientSample,
                fmt::format("Hill estimator needs 2 <= k_top < N (k_top={}, N={})", k_top,
                            values.size()));
  }
  std::vector<double> top(values.begin(), values.end());
  if (std::any_of(top.begin(), top.end(), [](double x) { return !(x > 0.0); })) {
    throw Error(ErrorCode::kInsufficientSample, "Hill estimator needs positive values");
  }
  std::nth_element(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(k_top), top.end(),
                   std::greater<>());
  const double threshold = top[k_top];
  double sum = 0.0;
  for (std::size_t i = 0; i < k_top; ++i) sum += std::log(top[i] / threshold);
  const double mean = sum / static_cast<double>(k_top);
  if (!(mean > 0.0)) {
    throw Error(ErrorCode::kInsufficientSample, "top order statistics are all equal");
  }
  HillEstimate est;
  est.tail_index = 1.0 / mean;
  est.std_error = est.tail_index / std::sqrt(static_cast<double>(k_top));
  est.k_top = k_top;
  return est;
}

RatioBoundReport ratio_bound_report(std::span<const double> pagerank,
                                    std::span<const double> degrees, double beta,
                                    std::span<const double> grid, double min_count,
                                    double tolerance) {
  if (pagerank.empty() || degrees.empty()) {
    throw Error(ErrorCode::kEmptySample, "ratio report needs nonempty samples");
  }
  const auto r = sorted_copy(pagerank);
  const auto d = sorted_copy(degrees);
  const double nr = static_cast<double>(r.size());
  const double nd = static_cast<double>(d.size());
  const double floor_r = min_count / nr;
  const double floor_d = min_count / nd;

  RatioBoundReport report;
  report.beta = beta;
  report.min_ccdf = std::max(floor_r, floor_d);
  report.tolerance = tolerance;
  std::size_t run = 0, best = 0, best_end = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    RatioRow row;
    row.k = grid[i];
    row.pagerank_ccdf = static_cast<double>(count_above(r, row.k)) / nr;
    row.scaled_degree_ccdf = static_cast<double>(count_above(d, beta * row.k)) / nd;
    row.degree_ccdf = static_cast<double>(count_above(d, row.k)) / nd;
    if (row.scaled_degree_ccdf > 0.0) row.ratio = row.pagerank_ccdf / row.scaled_degree_ccdf;
    if (row.pagerank_ccdf > row.degree_ccdf) ++report.upper_violations;
    row.populated = row.pagerank_ccdf >= floor_r && row.scaled_degree_ccdf >= floor_d;
    if (row.populated) {
      ++report.populated;
      report.min_populated_ratio = std::min(report.min_populated_ratio.value_or(*row.ratio),
                                            *row.ratio);
    }
    if (row.ratio && *row.ratio >= 1.0 - tolerance) {
      if (++run > best) {
        best = run;
        best_end = i;
      }
    } else {
      run = 0;
    }
    report.rows.push_back(row);
  }
  if (best > 0) report.window = {{grid[best_end + 1 - best], grid[best_end]}};
  return report;
}

std::vector<RootNeighborhood> graph_neighborhoods(const Graph& graph) {
  std::vector<RootNeighborhood> out(graph.num_vertices());
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    out[v].degree = graph.degree(v);
    for (Vertex u : graph.neighbors(v)) out[v].neighbor_degrees.push_back(graph.degree(u));
  }
  return out;
}

std::vector<RootNeighborhood> digraph_neighborhoods(const Digraph& digraph) {
  std::vector<RootNeighborhood> out(digraph.num_vertices());
  for (Vertex v = 0; v < digraph.num_vertices(); ++v) {
    out[v].degree = digraph.in_degree(v);
    for (Vertex u : digraph.in_neighbors(v)) {
      out[v].neighbor_degrees.push_back(digraph.out_degree(u));
    }
  }
  return out;
}

RootNeighborhood tree_root_neighborhood(const TruncatedRootedTree& tree) {
  if (tree.max_depth() < 1) {
    throw Error(ErrorCode::kBadParameters, "root neighborhood needs tree depth >= 1");
  }
  RootNeighborhood out;
  out.degree = tree.root().degree;
  for (const TreeNode& child : tree.children(0)) out.neighbor_degrees.push_back(child.degree);
  return out;
}

ConditionProbe condition_probe(std::span<const RootNeighborhood> roots, double alpha,
                               double epsilon, std::span<const double> grid,
                               std::size_t min_count) {
  ConditionProbe probe;
  probe.alpha = alpha;
  probe.epsilon = epsilon;
  probe.samples = roots.size();

  // Per root: degree and whether d^(>= alpha) >= (1 - eps) d.
  std::vector<double> all, hit;
  all.reserve(roots.size());
  for (const RootNeighborhood& r : roots) {
    const auto heavy = std::count_if(r.neighbor_degrees.begin(), r.neighbor_degrees.end(),
                                     [&](std::uint64_t d) { return static_cast<double>(d) >= alpha; });
    const double d = static_cast<double>(r.degree);
    all.push_back(d);
    if (static_cast<double>(heavy) >= (1.0 - epsilon) * d) hit.push_back(d);
  }
  std::sort(all.begin(), all.end());
  std::sort(hit.begin(), hit.end());

  std::optional<double> previous;
  for (double k : grid) {
    ConditionRow row;
    row.k = k;
    row.marginal = count_above(all, k);
    row.joint = count_above(hit, k);
    if (row.joint > row.marginal) probe.joint_le_marginal = false;
    if (row.marginal > 0) {
      row.ratio = static_cast<double>(row.joint) / static_cast<double>(row.marginal);
    }
    row.populated = row.marginal >= min_count && row.marginal > 0;
    if (row.populated) {
      if (!probe.first_populated_ratio) probe.first_populated_ratio = row.ratio;
      probe.last_populated_ratio = row.ratio;
      if (previous && *row.ratio > *previous) probe.nonincreasing = false;
      previous = row.ratio;
    }
    probe.rows.push_back(row);
  }
  if (probe.first_populated_ratio) {
    const double first = *probe.first_populated_ratio;
    const double last = *probe.last_populated_ratio;
    if (last > 0.0) {
      probe.decay_factor = first / last;
    } else {
      probe.decay_factor = first > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    }
  }
  return probe;
}

double default_alpha_mean(double mean) { return 2.0 * std::ceil(mean); }

double default_alpha_pa(std::uint32_t m, double delta) { return std::ceil(2.0 * m + delta); }

}  // namespace prtail
