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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "prtail/digraph.hpp"
#include "prtail/graph.hpp"

namespace prtail {

// Damping factor c, strictly inside (0, 1).
class Damping {
 public:
  explicit Damping(double c);
  double value() const { return c_; }

 private:
  double c_;
};

enum class PageRankMethod { kPowerIteration, kNeumann, kUndirectedClosedForm };

std::string_view to_string(PageRankMethod method);
std::optional<PageRankMethod> parse_pagerank_method(std::string_view name);

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 100000;

// Graph-normalized PageRank: R = c R P + (1 - c) 1, so sum_i R_i = n.
struct PageRankVector {
  std::vector<double> values;
  Damping damping;
  PageRankMethod method;
  // Neumann truncation depth S (only meaningful for kNeumann).
  std::size_t neumann_depth = 0;
  std::size_t iterations = 0;
  // || R - (c R P + (1 - c) 1) ||_1 evaluated on `values`, whatever the method.
  double residual = 0.0;

  double total_mass() const;
};

// Iteration count after which the contraction R^t -> R (rate c, start at 1)
// has L1 error below tol: ceil(log(tol / n) / log c).
std::size_t iterations_for_tolerance(double tol, std::size_t n, Damping c);

// R^{t+1} = c R^t P + (1 - c) 1 from R^0 = 1; stops once the L1 step (the
// fixed-point residual of the iterate) is <= tol. Throws kNotConverged.
PageRankVector solve_power_iteration(const Graph& graph, Damping c,
                                     double tol = kDefaultTolerance,
                                     std::size_t max_iter = kDefaultMaxIterations);

// Partial Neumann sum R_S = (1 - c) sum_{s <= S} c^s 1^T P^s. Its mass is
// exactly n (1 - c^{S+1}).
PageRankVector solve_neumann(const Graph& graph, Damping c, std::size_t depth);

// Solves v = c P v + (1 - c) Q 1 with Q = diag(1/d) and returns R = d * v.
// The stopping rule uses the residual of the R-equation, which equals
// sum_i d_i |(v - c P v - (1 - c) Q 1)_i|.
PageRankVector solve_undirected_closed(const Graph& graph, Damping c,
                                       double tol = kDefaultTolerance,
                                       std::size_t max_iter = kDefaultMaxIterations);

// Intermediate vector v = R / d of the closed form; every entry lies in
// (0, 1] on any graph without isolated vertices.
std::vector<double> undirected_scaled_solution(const Graph& graph, Damping c,
                                               double tol = kDefaultTolerance,
                                               std::size_t max_iter = kDefaultMaxIterations);

// Directed PageRank with p_ij = a_ij / d+_i. Throws kDanglingVertex when some
// out-degree is zero and kNotConverged on iteration exhaustion.
PageRankVector solve_directed(const Digraph& digraph, Damping c,
                              double tol = kDefaultTolerance,
                              std::size_t max_iter = kDefaultMaxIterations);

double pagerank_residual(const Graph& graph, Damping c, std::span<const double> values);
double pagerank_residual(const Digraph& digraph, Damping c, std::span<const double> values);

struct DegreeBoundReport {
  // max_i (R_i - d_i); negative when the bound holds with slack.
  double max_violation = 0.0;
  Vertex argmax = 0;
  // Vertices with R_i > d_i + tol.
  std::size_t violations = 0;
  std::optional<Vertex> first_violation;

  bool holds() const { return violations == 0; }
};

DegreeBoundReport check_degree_bound(const PageRankVector& pagerank, const Graph& graph,
                                     double tol = 1e-8);

struct DirectedRatioReport {
  // K_n = max_i d-_i / d+_i and m_n = min_i d-_i.
  double max_ratio = 0.0;
  std::size_t min_in_degree = 0;
  bool hypothesis_met = false;
  // max_i (R_i - (K_n / m_n) d-_i); only computed when the hypothesis holds.
  double max_violation = 0.0;
  std::size_t violations = 0;
  std::optional<Vertex> first_violation;

  bool holds() const { return !hypothesis_met || violations == 0; }
};

// Checks R_i <= (K_n / m_n) d-_i whenever K_n < m_n / c. Requires every
// out-degree positive; when m_n = 0 the hypothesis is reported as unmet.
DirectedRatioReport check_directed_ratio_bound(const Digraph& digraph,
                                               const PageRankVector& pagerank, Damping c,
                                               double tol = 1e-8);

}  // namespace prtail
