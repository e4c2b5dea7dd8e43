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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracle.hpp"
#include "prtail/error.hpp"
#include "prtail/experiment.hpp"
#include "prtail/generators.hpp"
#include "prtail/limit_trees.hpp"
#include "prtail/pagerank.hpp"
#include "prtail/report_io.hpp"
#include "prtail/tail_analysis.hpp"

namespace prtail {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> as_doubles(const std::vector<std::size_t>& x) {
  return {x.begin(), x.end()};
}

double degree_bound_gap(const Graph& g, const PageRankVector& r) {
  double worst = -std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    worst = std::max(worst, r.values[v] - static_cast<double>(g.degree(v)));
  }
  return worst;
}

// 1. R_i <= d_i on 1000 graphs.
Outcome degree_bound() {
  const auto start = std::chrono::steady_clock::now();
  double worst = -std::numeric_limits<double>::infinity();
  std::size_t graphs = 0;
  const SeedStream root(1001);
  auto check = [&](const Graph& g, double c) {
    const auto r = solve_power_iteration(g, Damping(c), 1e-10);
    worst = std::max(worst, degree_bound_gap(g, r));
    ++graphs;
  };
  const std::array<double, 2> dampings{0.85, 0.5};
  // 300 configuration graphs.
  for (double tau : {2.2, 2.5, 3.5}) {
    for (std::size_t n : {std::size_t{1000}, std::size_t{10000}}) {
      const auto p = DegreeDistribution::power_law(tau, 1, n);
      for (std::uint64_t i = 0; i < 50; ++i) {
        const auto s = root.split("cm").split(graphs);
        check(configuration_model(sample_degrees(p, n, s.split("d")), s.split("g")),
              dampings[i % 2]);
      }
    }
  }
  // 540 preferential attachment graphs.
  for (std::uint32_t m : {1u, 2u, 4u}) {
    for (double delta : {-0.5, 0.0, 1.0}) {
      for (std::uint64_t i = 0; i < 60; ++i) {
        const std::size_t n = i % 2 == 0 ? 1000 : 10000;
        check(preferential_attachment(n, m, delta, root.split("pa").split(graphs)),
              dampings[i % 2]);
      }
    }
  }
  // 160 counterexample graphs.
  const auto even = DegreeDistribution::power_law(2.5, 2, 20000, true);
  for (std::uint64_t i = 0; i < 160; ++i) {
    const std::size_t n = 100 + 62 * i;
    check(counterexample_graph(even, n).graph, dampings[i % 2]);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {graphs == 1000 && worst <= 1e-8 && secs <= 300.0,
          fmt::format("{} graphs, max(R-d) = {:.3g}, {:.1f} s", graphs, worst, secs)};
}

// 2. Circulant PageRank is exactly one.
Outcome circulant_exactness() {
  double worst = 0.0;
  std::size_t graphs = 0;
  for (std::uint32_t k = 2; k <= 12; k += 2) {
    for (std::size_t n = k + 1; n <= 1000; ++n) {
      const auto g = circulant(k, n);
      for (const auto& r : {solve_power_iteration(g, Damping(0.85)),
                            solve_undirected_closed(g, Damping(0.85))}) {
        for (double x : r.values) worst = std::max(worst, std::abs(x - 1.0));
      }
      ++graphs;
    }
  }
  return {worst <= 1e-10, fmt::format("{} circulants, max |R-1| = {:.3g}", graphs, worst)};
}

// 3. Three undirected solvers agree; Neumann mass identity.
Outcome solver_agreement() {
  double worst = 0.0, worst_mass = 0.0;
  const SeedStream root(3003);
  const double c = 0.85;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto s = root.split(i);
    const std::size_t n = 200 + 29 * i;
    const Graph g = i % 2 == 0
                        ? configuration_model(
                              sample_degrees(DegreeDistribution::power_law(2.5, 1, n), n, s.split("d")),
                              s.split("g"))
                        : preferential_attachment(n, 1 + static_cast<std::uint32_t>(i % 3), 0.0,
                                                  s.split("g"));
    const Damping d(c);
    const std::size_t depth = static_cast<std::size_t>(
        std::ceil(std::log(1e-12 / static_cast<double>(n)) / std::log(c)));
    const auto p = solve_power_iteration(g, d);
    const auto nm = solve_neumann(g, d, depth);
    const auto u = solve_undirected_closed(g, d);
    worst = std::max({worst, max_abs_diff(p.values, nm.values), max_abs_diff(p.values, u.values),
                      max_abs_diff(nm.values, u.values)});
    const double expected = static_cast<double>(n) * (1.0 - std::pow(c, depth + 1.0));
    worst_mass = std::max(worst_mass, std::abs(nm.total_mass() - expected) / expected);
  }
  return {worst <= 1e-8 && worst_mass <= 1e-12,
          fmt::format("100 instances, max pairwise gap {:.3g}, Neumann mass rel. error {:.3g}",
                      worst, worst_mass)};
}

// 4. Every solver against a dense solve on graphs with n <= 50.
Outcome oracle_equivalence() {
  double worst = 0.0;
  std::size_t graphs = 0;
  for (const auto& [name, g] : oracle::small_corpus()) {
    if (g.num_vertices() > 50) continue;
    for (double c : {0.5, 0.85}) {
      const Damping d(c);
      const auto dense = oracle::dense_pagerank(g, c);
      const std::size_t depth = iterations_for_tolerance(1e-14, g.num_vertices(), d);
      for (const auto& r : {solve_power_iteration(g, d, 1e-12), solve_neumann(g, d, depth),
                            solve_undirected_closed(g, d, 1e-12)}) {
        worst = std::max(worst, max_abs_diff(r.values, dense));
      }
    }
    ++graphs;
  }
  // Directed corpus: cycle, star, Eulerian samples.
  std::vector<Digraph> directed;
  {
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < 12; ++i) arcs.push_back({i, (i + 1) % 12});
    directed.push_back(Digraph::from_arc_list(12, arcs));
    std::vector<Arc> star{{0, 1}};
    for (Vertex i = 1; i < 8; ++i) star.push_back({i, 0});
    directed.push_back(Digraph::from_arc_list(8, star));
  }
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto deg = sample_degrees(DegreeDistribution::power_law(2.5, 1, 10), 40,
                                    SeedStream(400 + s));
    directed.push_back(eulerian_configuration_model(deg, SeedStream(500 + s)));
  }
  for (const auto& g : directed) {
    for (double c : {0.5, 0.85}) {
      const auto dense = oracle::dense_pagerank(g, c);
      worst = std::max(worst, max_abs_diff(solve_directed(g, Damping(c), 1e-12).values, dense));
    }
    ++graphs;
  }
  return {worst <= 1e-9, fmt::format("{} graphs, max deviation {:.3g}", graphs, worst)};
}

struct CmInstance {
  Graph graph;
  PageRankVector pagerank;
};

const CmInstance& cm_instance() {
  static const CmInstance inst = [] {
    const std::size_t n = 100000;
    const SeedStream s(5005);
    const auto p = DegreeDistribution::power_law(2.5, 1, n);
    auto g = configuration_model(sample_degrees(p, n, s.split("d")), s.split("g"));
    auto r = solve_power_iteration(g, Damping(0.85));
    return CmInstance{std::move(g), std::move(r)};
  }();
  return inst;
}

// 5. P(R > k) <= P(D > k) at every integer k.
Outcome cm_upper_bound() {
  const auto& inst = cm_instance();
  const auto degrees = as_doubles(inst.graph.degrees());
  const auto grid = integer_grid(0, inst.graph.max_degree() + 1);
  const auto rep = ratio_bound_report(inst.pagerank.values, degrees, 1.0, grid);
  return {rep.upper_violations == 0,
          fmt::format("n = 1e5, {} integer thresholds, {} violations", grid.size(),
                      rep.upper_violations)};
}

// 6. Lower-bound ratio on the populated window.
Outcome cm_lower_bound() {
  const auto start = std::chrono::steady_clock::now();
  const auto& inst = cm_instance();
  const auto degrees = as_doubles(inst.graph.degrees());
  double mean = 0.0;
  for (double d : degrees) mean += d;
  mean /= static_cast<double>(degrees.size());
  const double beta = auto_beta_cm(mean, 0.85);
  const auto grid = linear_grid(0.0, 5.0, 5001);
  const auto rep = ratio_bound_report(inst.pagerank.values, degrees, beta, grid, 100.0);
  double lo = 0.0, hi = 0.0;
  for (const auto& row : rep.rows) {
    if (!row.populated) continue;
    if (lo == 0.0 && hi == 0.0) lo = row.k;
    hi = row.k;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = rep.populated > 0 && rep.min_populated_ratio.value_or(0.0) >= 0.9 && secs <= 120;
  return {pass, fmt::format("beta = {:.2f}, {} populated thresholds in [{:.3f}, {:.3f}], "
                            "min ratio {:.3g}",
                            beta, rep.populated, lo, hi, rep.min_populated_ratio.value_or(0.0))};
}

// 7. Hill estimate of the PA degree tail index.
Outcome pa_hill() {
  int votes = 0;
  std::string estimates;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto g = preferential_attachment(100000, 2, 0.0, SeedStream(7007).split(s));
    const auto h = hill_estimator(as_doubles(g.degrees()), 1000);
    votes += h.tail_index >= 1.7 && h.tail_index <= 2.3 ? 1 : 0;
    estimates += fmt::format("{}{:.3f}", s ? ", " : "", h.tail_index);
  }
  return {votes >= 3, fmt::format("estimates [{}], {}/5 in [1.7, 2.3]", estimates, votes)};
}

// 8. Younger-child degrees of the root against (m + delta) / (t + delta).
Outcome polya_dominating_pmf() {
  const PolyaParams params{1, 0.0};
  std::vector<std::uint64_t> degrees;
  const SeedStream root(8008);
  for (std::uint64_t i = 0; degrees.size() < 100000; ++i) {
    const auto tree = sample_polya_point_tree(params, 1, root.split(i));
    for (const auto& child : tree.children(0)) {
      if (child.label == AgeLabel::kYounger) degrees.push_back(child.degree);
    }
  }
  const double n = static_cast<double>(degrees.size());
  double worst = -1.0;
  bool pass = true;
  for (std::uint64_t t = 1; t <= 50; ++t) {
    const double bound = tilde_degree_tail(params, t);
    const double emp =
        static_cast<double>(std::count_if(degrees.begin(), degrees.end(),
                                          [&](std::uint64_t d) { return d >= t; })) / n;
    // One-sided 99% normal band for a binomial proportion at p = bound.
    const double tol = 2.326 * std::sqrt(bound * (1.0 - bound) / n);
    worst = std::max(worst, emp - bound);
    pass = pass && emp <= bound + tol;
  }
  double total = 0.0;
  const std::uint64_t cutoff = 10000000;
  for (std::uint64_t t = cutoff; t-- > params.m;) total += tilde_degree_pmf(params, t);
  total += tilde_degree_tail(params, cutoff);
  pass = pass && std::abs(total - 1.0) <= 1e-8;
  return {pass, fmt::format("{} younger children, max excess {:.3g}, pmf mass {:.12f}",
                            degrees.size(), worst, total)};
}

double ks_uniform(std::vector<double> u) {
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    d = std::max({d, (i + 1) / n - u[i], u[i] - i / n});
  }
  return d;
}

// 9. Younger-child ages per root-age bucket against F_{t,tau}.
Outcome younger_age_law() {
  const std::size_t per_bucket = 10000;
  const double threshold = 1.628 / std::sqrt(static_cast<double>(per_bucket));
  bool pass = true;
  std::string detail;
  for (const PolyaParams params : {PolyaParams{1, 0.0}, PolyaParams{2, -1.0}}) {
    const double tau = params.tau();
    constexpr int kBuckets = 4;
    std::array<std::vector<double>, kBuckets> u;
    const SeedStream root = SeedStream(9009).split(params.m);
    for (std::uint64_t i = 0;; ++i) {
      bool full = true;
      for (const auto& b : u) full = full && b.size() == per_bucket;
      if (full) break;
      const auto tree = sample_polya_point_tree(params, 1, root.split(i));
      const double t = *tree.root().age;
      auto& bucket = u[std::min(kBuckets - 1, static_cast<int>(t * kBuckets))];
      std::vector<double> ages;
      for (const auto& child : tree.children(0)) {
        if (child.label == AgeLabel::kYounger) ages.push_back(*child.age);
      }
      // Whole trees only; selecting on the count leaves the ages i.i.d.
      if (ages.empty() || bucket.size() + ages.size() > per_bucket) continue;
      for (double x : ages) bucket.push_back(younger_age_cdf(t, tau, x));
    }
    for (int b = 0; b < kBuckets; ++b) {
      const double d = ks_uniform(u[b]);
      pass = pass && d < threshold;
      detail += fmt::format("{}m={},delta={},bucket {}: D={:.4f}", detail.empty() ? "" : "; ",
                            params.m, params.delta, b, d);
    }
  }
  return {pass, fmt::format("threshold {:.4f}; {}", threshold, detail)};
}

// 10. Mean truncated root-PageRank on Polya trees is at most 1 + 3 se.
Outcome root_pagerank_mean() {
  bool pass = true;
  std::string detail;
  for (auto [params, depth] : {std::pair{PolyaParams{1, 0.0}, 8u}, {PolyaParams{2, 0.0}, 5u}}) {
    const auto stats = polya_root_statistics(params, 100000, depth, Damping(0.85),
                                             SeedStream(10010).split(params.m));
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& s : stats) {
      sum += s.root_pagerank_lower;
      sum_sq += s.root_pagerank_lower * s.root_pagerank_lower;
    }
    const double n = static_cast<double>(stats.size());
    const double mean = sum / n;
    const double se = std::sqrt((sum_sq / n - mean * mean) * n / (n - 1.0) / n);
    pass = pass && mean <= 1.0 + 3.0 * se;
    detail += fmt::format("{}m={} S={}: mean {:.4f} (se {:.4f})", detail.empty() ? "" : "; ",
                          params.m, depth, mean, se);
  }
  return {pass, detail};
}

struct FarStats {
  double fraction = 0.0;
  bool histogram_ok = false;
};

FarStats counterexample_far(std::size_t n) {
  const auto p = DegreeDistribution::power_law(2.5, 2, n, true);
  const auto ce = counterexample_graph(p, n);
  const auto r = solve_power_iteration(ce.graph, Damping(0.85));
  std::size_t far = 0;
  for (double x : r.values) far += std::abs(x - 1.0) > 0.1 ? 1 : 0;
  // Component sizes are floor(n p_k), and bridging moves exactly one degree
  // per bridge endpoint.
  bool ok = true;
  std::map<std::uint64_t, std::int64_t> hist;
  for (auto d : ce.graph.degrees()) ++hist[d];
  std::map<std::uint64_t, std::int64_t> expected;
  std::size_t total = 0;
  for (const auto& comp : ce.components) {
    ok = ok && comp.size == static_cast<std::size_t>(std::floor(n * p.pmf(comp.degree) + 1e-9));
    expected[comp.degree] += static_cast<std::int64_t>(comp.size);
    total += comp.size;
  }
  std::int64_t moved = 0;
  for (const auto& [k, count] : expected) moved += std::abs(hist[k] - count);
  ok = ok && total == ce.graph.num_vertices() &&
       moved <= static_cast<std::int64_t>(2 * ce.bridges.size());
  return {static_cast<double>(far) / static_cast<double>(r.values.size()), ok};
}

// 11. Counterexample PageRank concentrates at one.
Outcome counterexample_concentration() {
  const auto small = counterexample_far(10000);
  const auto large = counterexample_far(100000);
  return {small.fraction <= 0.02 && large.fraction < small.fraction && small.histogram_ok &&
              large.histogram_ok,
          fmt::format("far fraction {:.5f} at n=1e4, {:.5f} at n=1e5; histograms {}",
                      small.fraction, large.fraction,
                      small.histogram_ok && large.histogram_ok ? "match" : "MISMATCH")};
}

// 12. Condition probe: decays on Polya samples, stays at one on the
// counterexample.
Outcome condition_contrast() {
  const PolyaParams params{1, 0.0};
  const std::size_t samples = 1000000;
  std::vector<RootNeighborhood> roots(samples);
  std::uint64_t max_degree = 0;
  const SeedStream root(12012);
  for (std::size_t i = 0; i < samples; ++i) {
    roots[i] = tree_root_neighborhood(sample_polya_point_tree(params, 1, root.split(i)));
    max_degree = std::max(max_degree, roots[i].degree);
  }
  const double alpha = default_alpha_pa(params.m, params.delta);
  const auto probe = condition_probe(roots, alpha, 0.4, integer_grid(0, max_degree), 100);

  const auto ce = counterexample_graph(DegreeDistribution::power_law(2.5, 2, 10000, true), 10000);
  const auto ce_probe = condition_probe(graph_neighborhoods(ce.graph), alpha, 0.4,
                                        integer_grid(0, ce.max_component_degree - 1), 1);
  double ce_min = 1.0;
  for (const auto& row : ce_probe.rows) {
    if (row.ratio) ce_min = std::min(ce_min, *row.ratio);
  }
  const double decay = probe.decay_factor.value_or(0.0);
  return {decay >= 5.0 && ce_min >= 0.99 && probe.joint_le_marginal && ce_probe.joint_le_marginal,
          fmt::format("Polya alpha={} ratio {:.4f} -> {:.4f} (decay {:.3g}); counterexample min "
                      "ratio {:.4f} over k < {}",
                      alpha, probe.first_populated_ratio.value_or(0.0),
                      probe.last_populated_ratio.value_or(0.0), decay, ce_min,
                      ce.max_component_degree)};
}

// 13. Directed ratio bound on Eulerian and 2-out digraphs.
Outcome directed_ratio() {
  double worst = -std::numeric_limits<double>::infinity();
  bool k_one = true;
  const SeedStream root(13013);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 2000;
    const auto s = root.split("eulerian").split(i);
    const auto deg = sample_degrees(DegreeDistribution::power_law(2.5, 1, n), n, s.split("d"));
    const auto g = eulerian_configuration_model(deg, s.split("g"));
    const auto r = solve_directed(g, Damping(0.85));
    const auto rep = check_directed_ratio_bound(g, r, Damping(0.85));
    k_one = k_one && rep.max_ratio == 1.0;
    for (Vertex v = 0; v < n; ++v) {
      worst = std::max(worst, r.values[v] - static_cast<double>(g.in_degree(v)));
    }
  }
  // Out-degree 2, in-degrees in {1, 2, 3}: K = 3/2 < m / c = 2 at c = 1/2.
  bool ratio_ok = true;
  std::size_t met = 0;
  const auto in_law = DegreeDistribution::explicit_pmf({{1, 0.25}, {2, 0.5}, {3, 0.25}});
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::size_t n = 5000;
    const auto s = root.split("two_out").split(i);
    const auto in = sample_degrees_with_total(in_law, n, 2 * n, s.split("d"));
    const std::vector<std::uint64_t> out(n, 2);
    const auto g = directed_configuration_model(out, in.degrees, s.split("g"));
    const Damping c(0.5);
    const auto r = solve_directed(g, c);
    const auto rep = check_directed_ratio_bound(g, r, c);
    met += rep.hypothesis_met ? 1 : 0;
    ratio_ok = ratio_ok && rep.hypothesis_met && rep.violations == 0 && rep.max_violation <= 1e-8;
  }
  return {k_one && worst <= 1e-8 && ratio_ok,
          fmt::format("Eulerian: K=1 {}, max(R-d-) = {:.3g}; 2-out: hypothesis met {}/20, "
                      "bound {}",
                      k_one ? "on all 100" : "not on all", worst, met, ratio_ok ? "holds" : "VIOLATED")};
}

// 14. Byte-identical CSV artifacts across repeated runs.
Outcome determinism() {
  namespace fs = std::filesystem;
  const auto base = fs::temp_directory_path() / "prtail_acceptance_determinism";
  fs::remove_all(base);
  std::size_t compared = 0;
  bool same = true;
  for (const char* kind :
       {"cm", "pa", "counterexample", "polya_tree", "unimodular_tree", "directed_ratio"}) {
    ExperimentConfig cfg;
    cfg.kind = *parse_experiment_kind(kind);
    cfg.n = 3000;
    cfg.m = 2;
    cfg.samples = 2000;
    cfg.depth = 4;
    cfg.degrees.k_max = 100;
    cfg.replications = 2;
    cfg.seed = 14014;
    if (cfg.kind == ExperimentKind::kCounterexample) cfg.degrees.even_only = true;
    cfg.output = base / fmt::format("{}_1", kind);
    cfg.threads = 1;
    const auto a = run(cfg);
    cfg.output = base / fmt::format("{}_2", kind);
    cfg.threads = 2;
    const auto b = run(cfg);
    for (std::size_t i = 0; i < a.artifacts.size(); ++i) {
      if (a.artifacts[i].path.extension() != ".csv") continue;
      same = same && i < b.artifacts.size() &&
             read_file(a.artifacts[i].path) == read_file(b.artifacts[i].path);
      ++compared;
    }
    same = same && a.artifacts.size() == b.artifacts.size();
  }
  return {same && compared > 0, fmt::format("{} CSV artifacts compared byte for byte", compared)};
}

}  // namespace
}  // namespace prtail

int main() {
  using prtail::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"degree bound on 1000 graphs", prtail::degree_bound},
      {"circulant PageRank is exactly one", prtail::circulant_exactness},
      {"solver agreement and Neumann mass", prtail::solver_agreement},
      {"dense oracle equivalence", prtail::oracle_equivalence},
      {"configuration model upper bound", prtail::cm_upper_bound},
      {"configuration model lower-bound window", prtail::cm_lower_bound},
      {"preferential attachment tail index", prtail::pa_hill},
      {"Polya dominating degree law", prtail::polya_dominating_pmf},
      {"younger-child age law", prtail::younger_age_law},
      {"root-PageRank mean bound", prtail::root_pagerank_mean},
      {"counterexample concentration", prtail::counterexample_concentration},
      {"condition probe contrast", prtail::condition_contrast},
      {"directed ratio bound", prtail::directed_ratio},
      {"determinism", prtail::determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    fmt::print("criterion {:2d} [{}] {}: {} ({:.1f} s)\n", i + 1, out.pass ? "PASS" : "FAIL",
               criteria[i].first, out.detail, secs);
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
