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

#include "prtail/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "prtail/error.hpp"

namespace prtail {
namespace {

// out = (1 - c) + c * (R P) for the undirected transition matrix. `scaled`
// is scratch space for R_j / d_j.
void undirected_step(const Graph& g, double c, std::span<const double> r,
                     std::vector<double>& scaled, std::vector<double>& out) {
  const std::size_t n = g.num_vertices();
  for (std::size_t j = 0; j < n; ++j) {
    scaled[j] = r[j] / static_cast<double>(g.degree(static_cast<Vertex>(j)));
  }
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (Vertex j : g.neighbors(static_cast<Vertex>(k))) acc += scaled[j];
    out[k] = (1.0 - c) + c * acc;
  }
}

void directed_step(const Digraph& g, double c, std::span<const double> r,
                   std::vector<double>& scaled, std::vector<double>& out) {
  const std::size_t n = g.num_vertices();
  for (std::size_t j = 0; j < n; ++j) {
    scaled[j] = r[j] / static_cast<double>(g.out_degree(static_cast<Vertex>(j)));
  }
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (Vertex j : g.in_neighbors(static_cast<Vertex>(k))) acc += scaled[j];
    out[k] = (1.0 - c) + c * acc;
  }
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

void check_tolerance(double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kBadParameters, "solver tolerance must be positive");
  }
}

[[noreturn]] void not_converged(std::string_view solver, std::size_t iters, double residual,
                                double tol) {
  throw Error(ErrorCode::kNotConverged,
              fmt::format("{}: residual {:.3e} > tol {:.3e} after {} iterations", solver,
                          residual, tol, iters));
}

}  // namespace

Damping::Damping(double c) : c_(c) {
  if (!(c > 0.0 && c < 1.0)) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("damping must lie in (0,1), got {}", c));
  }
}

std::string_view to_string(PageRankMethod method) {
  switch (method) {
    case PageRankMethod::kPowerIteration: return "power_iteration";
    case PageRankMethod::kNeumann: return "neumann";
    case PageRankMethod::kUndirectedClosedForm: return "undirected_closed_form";
  }
  return "unknown";
}

std::optional<PageRankMethod> parse_pagerank_method(std::string_view name) {
  if (name == "power_iteration" || name == "power") return PageRankMethod::kPowerIteration;
  if (name == "neumann") return PageRankMethod::kNeumann;
  if (name == "undirected_closed_form" || name == "closed_form" || name == "closed") {
    return PageRankMethod::kUndirectedClosedForm;
  }
  return std::nullopt;
}

double PageRankVector::total_mass() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

std::size_t iterations_for_tolerance(double tol, std::size_t n, Damping c) {
  check_tolerance(tol);
  const double ratio = tol / static_cast<double>(n);
  if (ratio >= 1.0) return 0;
  return static_cast<std::size_t>(std::ceil(std::log(ratio) / std::log(c.value())));
}

double pagerank_residual(const Graph& graph, Damping c, std::span<const double> values) {
  std::vector<double> scaled(values.size()), next(values.size());
  undirected_step(graph, c.value(), values, scaled, next);
  return l1_distance(values, next);
}

double pagerank_residual(const Digraph& digraph, Damping c, std::span<const double> values) {
  std::vector<double> scaled(values.size()), next(values.size());
  directed_step(digraph, c.value(), values, scaled, next);
  return l1_distance(values, next);
}

PageRankVector solve_power_iteration(const Graph& graph, Damping c, double tol,
                                     std::size_t max_iter) {
  check_tolerance(tol);
  const std::size_t n = graph.num_vertices();
  std::vector<double> r(n, 1.0), next(n), scaled(n);
  double step = 0.0;
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    undirected_step(graph, c.value(), r, scaled, next);
    step = l1_distance(r, next);
    r.swap(next);
    if (step <= tol) break;
  }
  if (step > tol) not_converged("power iteration", it, step, tol);
  PageRankVector out{std::move(r), c, PageRankMethod::kPowerIteration};
  out.iterations = it + 1;
  out.residual = pagerank_residual(graph, c, out.values);
  return out;
}

PageRankVector solve_neumann(const Graph& graph, Damping c, std::size_t depth) {
  const std::size_t n = graph.num_vertices();
  const double cv = c.value();
  // x_s = 1^T P^s as a row vector; x_s P is one undirected step without the
  // teleport term.
  std::vector<double> x(n, 1.0), next(n), scaled(n), r(n, 1.0 - cv);
  double weight = 1.0 - cv;
  for (std::size_t s = 1; s <= depth; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      scaled[j] = x[j] / static_cast<double>(graph.degree(static_cast<Vertex>(j)));
    }
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (Vertex j : graph.neighbors(static_cast<Vertex>(k))) acc += scaled[j];
      next[k] = acc;
    }
    x.swap(next);
    weight *= cv;
    for (std::size_t k = 0; k < n; ++k) r[k] += weight * x[k];
  }
  PageRankVector out{std::move(r), c, PageRankMethod::kNeumann};
  out.neumann_depth = depth;
  out.iterations = depth;
  out.residual = pagerank_residual(graph, c, out.values);
  return out;
}

std::vector<double> undirected_scaled_solution(const Graph& graph, Damping c, double tol,
                                               std::size_t max_iter) {
  check_tolerance(tol);
  const std::size_t n = graph.num_vertices();
  const double cv = c.value();
  std::vector<double> inv_deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv_deg[i] = 1.0 / static_cast<double>(graph.degree(static_cast<Vertex>(i)));
  }
  std::vector<double> v = inv_deg, next(n);
  double residual = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (Vertex j : graph.neighbors(static_cast<Vertex>(i))) acc += v[j];
      next[i] = cv * acc * inv_deg[i] + (1.0 - cv) * inv_deg[i];
      residual += std::abs(v[i] - next[i]) / inv_deg[i];
    }
    v.swap(next);
    if (residual <= tol) return v;
  }
  not_converged("undirected closed form", max_iter, residual, tol);
}

PageRankVector solve_undirected_closed(const Graph& graph, Damping c, double tol,
                                       std::size_t max_iter) {
  auto v = undirected_scaled_solution(graph, c, tol, max_iter);
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] *= static_cast<double>(graph.degree(static_cast<Vertex>(i)));
  }
  PageRankVector out{std::move(v), c, PageRankMethod::kUndirectedClosedForm};
  out.residual = pagerank_residual(graph, c, out.values);
  return out;
}

PageRankVector solve_directed(const Digraph& digraph, Damping c, double tol,
                              std::size_t max_iter) {
  check_tolerance(tol);
  const std::size_t n = digraph.num_vertices();
  for (std::size_t i = 0; i < n; ++i) {
    if (digraph.out_degree(static_cast<Vertex>(i)) == 0) {
      throw Error(ErrorCode::kDanglingVertex, fmt::format("vertex {} has out-degree 0", i));
    }
  }
  std::vector<double> r(n, 1.0), next(n), scaled(n);
  double step = 0.0;
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    directed_step(digraph, c.value(), r, scaled, next);
    step = l1_distance(r, next);
    r.swap(next);
    if (step <= tol) break;
  }
  if (step > tol) not_converged("directed power iteration", it, step, tol);
  PageRankVector out{std::move(r), c, PageRankMethod::kPowerIteration};
  out.iterations = it + 1;
  out.residual = pagerank_residual(digraph, c, out.values);
  return out;
}

DegreeBoundReport check_degree_bound(const PageRankVector& pagerank, const Graph& graph,
                                     double tol) {
  DegreeBoundReport report;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pagerank.values.size(); ++i) {
    const auto v = static_cast<Vertex>(i);
    const double gap = pagerank.values[i] - static_cast<double>(graph.degree(v));
    if (gap > report.max_violation) {
      report.max_violation = gap;
      report.argmax = v;
    }
    if (gap > tol) {
      ++report.violations;
      if (!report.first_violation) report.first_violation = v;
    }
  }
  return report;
}

DirectedRatioReport check_directed_ratio_bound(const Digraph& digraph,
                                               const PageRankVector& pagerank, Damping c,
                                               double tol) {
  DirectedRatioReport report;
  const std::size_t n = digraph.num_vertices();
  report.min_in_degree = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    const std::size_t out = digraph.out_degree(v);
    if (out == 0) {
      throw Error(ErrorCode::kDanglingVertex, fmt::format("vertex {} has out-degree 0", i));
    }
    report.max_ratio = std::max(report.max_ratio, static_cast<double>(digraph.in_degree(v)) /
                                                      static_cast<double>(out));
    report.min_in_degree = std::min(report.min_in_degree, digraph.in_degree(v));
  }
  const double m = static_cast<double>(report.min_in_degree);
  report.hypothesis_met = report.min_in_degree >= 1 && report.max_ratio < m / c.value();
  if (!report.hypothesis_met) return report;

  const double scale = report.max_ratio / m;
  report.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    const double gap = pagerank.values[i] - scale * static_cast<double>(digraph.in_degree(v));
    report.max_violation = std::max(report.max_violation, gap);
    if (gap > tol) {
      ++report.violations;
      if (!report.first_violation) report.first_violation = v;
    }
  }
  return report;
}

}  // namespace prtail
