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

#include "prtail/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "prtail/error.hpp"
#include "prtail/generators.hpp"
#include "prtail/limit_trees.hpp"
#include "prtail/parallel.hpp"
#include "prtail/report_io.hpp"
#include "prtail/tail_analysis.hpp"

namespace prtail {

using nlohmann::json;

namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::kCm, "cm"},
    {ExperimentKind::kPa, "pa"},
    {ExperimentKind::kCounterexample, "counterexample"},
    {ExperimentKind::kPolyaTree, "polya_tree"},
    {ExperimentKind::kUnimodularTree, "unimodular_tree"},
    {ExperimentKind::kDirectedRatio, "directed_ratio"},
};

[[noreturn]] void field_error(std::string_view field, std::string_view what) {
  throw Error(ErrorCode::kBadParameters, fmt::format("config field '{}': {}", field, what));
}

void reject_unknown(const json& obj, std::string_view where, std::set<std::string> allowed) {
  if (!obj.is_object()) field_error(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      field_error(where.empty() ? key : fmt::format("{}.{}", where, key), "unknown field");
    }
  }
}

double get_real(const json& j, std::string_view field) {
  if (!j.is_number()) field_error(field, "expected a number");
  return j.get<double>();
}

std::uint64_t get_unsigned(const json& j, std::string_view field) {
  if (!j.is_number_unsigned()) field_error(field, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::string get_string(const json& j, std::string_view field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

bool get_bool(const json& j, std::string_view field) {
  if (!j.is_boolean()) field_error(field, "expected true or false");
  return j.get<bool>();
}

DistributionConfig parse_distribution(const json& j) {
  reject_unknown(j, "degrees", {"type", "tau", "k_min", "k_max", "even_only", "pmf"});
  DistributionConfig d;
  if (j.contains("type")) {
    const auto type = get_string(j["type"], "degrees.type");
    if (type == "power_law") {
      d.type = DistributionConfig::Type::kPowerLaw;
    } else if (type == "explicit") {
      d.type = DistributionConfig::Type::kExplicit;
    } else {
      field_error("degrees.type", "expected power_law or explicit");
    }
  }
  if (j.contains("tau")) d.tau = get_real(j["tau"], "degrees.tau");
  if (j.contains("k_min")) d.k_min = get_unsigned(j["k_min"], "degrees.k_min");
  if (j.contains("k_max") && !j["k_max"].is_null()) {
    d.k_max = get_unsigned(j["k_max"], "degrees.k_max");
  }
  if (j.contains("even_only")) d.even_only = get_bool(j["even_only"], "degrees.even_only");
  if (j.contains("pmf")) {
    if (!j["pmf"].is_object()) field_error("degrees.pmf", "expected an object of k: p");
    for (const auto& [key, value] : j["pmf"].items()) {
      std::uint64_t k = 0;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
      if (ec != std::errc() || ptr != key.data() + key.size()) {
        field_error("degrees.pmf", fmt::format("key '{}' is not a nonnegative integer", key));
      }
      d.pmf[k] = get_real(value, fmt::format("degrees.pmf.{}", key));
    }
    if (!j.contains("type")) d.type = DistributionConfig::Type::kExplicit;
  }
  return d;
}

json distribution_json(const DistributionConfig& d) {
  if (d.type == DistributionConfig::Type::kExplicit) {
    json pmf = json::object();
    for (const auto& [k, p] : d.pmf) pmf[std::to_string(k)] = p;
    return {{"type", "explicit"}, {"pmf", pmf}};
  }
  return {{"type", "power_law"},
          {"tau", d.tau},
          {"k_min", d.k_min},
          {"k_max", d.k_max ? json(*d.k_max) : json(nullptr)},
          {"even_only", d.even_only}};
}

bool is_graph_kind(ExperimentKind kind) {
  return kind == ExperimentKind::kCm || kind == ExperimentKind::kPa ||
         kind == ExperimentKind::kCounterexample || kind == ExperimentKind::kDirectedRatio;
}

bool uses_distribution(ExperimentKind kind) {
  return kind == ExperimentKind::kCm || kind == ExperimentKind::kCounterexample ||
         kind == ExperimentKind::kUnimodularTree || kind == ExperimentKind::kDirectedRatio;
}

bool uses_pa_params(ExperimentKind kind) {
  return kind == ExperimentKind::kPa || kind == ExperimentKind::kPolyaTree;
}

double bound_threshold_cm(double mean, double c) { return 4.0 * mean / (c * (1.0 - c)); }

double bound_threshold_pa(std::uint32_t m, double delta, double c) {
  return 2.0 * std::ceil(2.0 * m + delta) / (c * (1.0 - c));
}

// Fine steps near zero, where beta-scaled degree tails still carry mass, then
// every integer up to the largest value.
std::vector<double> ratio_grid(double max_value) {
  std::vector<double> grid;
  for (int i = 0; i <= 1000; ++i) grid.push_back(i * 0.01);
  for (double k = 11.0; k <= std::ceil(max_value); k += 1.0) grid.push_back(k);
  return grid;
}

PageRankVector solve(const Graph& graph, const ExperimentConfig& cfg) {
  const Damping c(cfg.damping);
  switch (cfg.method) {
    case PageRankMethod::kPowerIteration:
      return solve_power_iteration(graph, c, cfg.tol, cfg.max_iter);
    case PageRankMethod::kNeumann:
      return solve_neumann(graph, c,
                           cfg.neumann_depth.value_or(
                               iterations_for_tolerance(cfg.tol, graph.num_vertices(), c)));
    case PageRankMethod::kUndirectedClosedForm:
      return solve_undirected_closed(graph, c, cfg.tol, cfg.max_iter);
  }
  throw Error(ErrorCode::kBadParameters, "unknown PageRank method");
}

json strip_rows(json j) {
  j.erase("rows");
  return j;
}

struct Output {
  std::string name;
  std::string contents;
};

struct RepResult {
  std::vector<Output> outputs;
  std::vector<SeedRecord> seeds;
  json summary;
  bool passed = true;
};

double mean_of(const std::vector<double>& x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// Checks shared by every undirected graph experiment.
PageRankVector analyze_undirected(const Graph& graph, const ExperimentConfig& cfg,
                                  double beta, double alpha, RepResult& rep) {
  const PageRankVector pr = solve(graph, cfg);
  const auto bound = check_degree_bound(pr, graph);
  const std::size_t n = graph.num_vertices();

  std::vector<double> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = static_cast<double>(graph.degree(v));
  const double max_pr = *std::max_element(pr.values.begin(), pr.values.end());

  const auto int_grid = integer_grid(0, graph.max_degree());
  const TailReport degree_tail = empirical_ccdf(degrees, int_grid);
  const TailReport pr_tail = empirical_ccdf(pr.values, int_grid);
  const auto ratio = ratio_bound_report(pr.values, degrees, beta, ratio_grid(max_pr),
                                        cfg.min_count);
  const auto hoods = graph_neighborhoods(graph);
  const auto probe = condition_probe(hoods, alpha, cfg.epsilon, int_grid,
                                     static_cast<std::size_t>(cfg.min_count));

  json hill = nullptr;
  const auto k_top = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  try {
    hill = to_json(hill_estimator(degrees, k_top));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientSample) throw;
  }

  rep.outputs.push_back({"pagerank.csv", pagerank_csv(graph, pr)});
  rep.outputs.push_back({"degree_ccdf.csv", ccdf_csv(degree_tail)});
  rep.outputs.push_back({"pagerank_ccdf.csv", ccdf_csv(pr_tail)});
  rep.outputs.push_back({"ratio.csv", ratio_csv(ratio)});
  rep.outputs.push_back({"condition.csv", condition_csv(probe)});

  rep.summary["vertices"] = n;
  rep.summary["edges"] = graph.num_edges();
  rep.summary["mean_degree"] = mean_of(degrees);
  rep.summary["max_degree"] = graph.max_degree();
  rep.summary["solver"] = {{"method", to_string(pr.method)},
                           {"iterations", pr.iterations},
                           {"neumann_depth", pr.neumann_depth},
                           {"residual", pr.residual},
                           {"mass_error", std::abs(pr.total_mass() - static_cast<double>(n))}};
  rep.summary["degree_bound"] = to_json(bound);
  rep.summary["ratio"] = strip_rows(to_json(ratio));
  rep.summary["hill_degree"] = hill;
  rep.summary["condition"] = strip_rows(to_json(probe));
  rep.passed = bound.holds() && ratio.upper_violations == 0;
  return pr;
}

RepResult run_graph_rep(const ExperimentConfig& cfg, SeedStream seed) {
  RepResult rep;
  const double c = cfg.damping;

  if (cfg.kind == ExperimentKind::kCounterexample) {
    const auto dist = cfg.degrees.build(cfg.n);
    const auto ce = counterexample_graph(dist, cfg.n);
    const double beta = cfg.beta.value_or(auto_beta_cm(dist.mean(), c));
    const PageRankVector pr =
        analyze_undirected(ce.graph, cfg, beta, cfg.alpha.value_or(2.0), rep);
    std::size_t far = 0;
    for (double r : pr.values) far += std::abs(r - 1.0) > 0.1 ? 1 : 0;
    json components = json::array();
    for (const auto& comp : ce.components) {
      components.push_back(
          {{"degree", comp.degree}, {"size", comp.size}, {"first_vertex", comp.first_vertex}});
    }
    json bridges = json::array();
    for (const auto& e : ce.bridges) bridges.push_back({e.u, e.v});
    rep.summary["max_component_degree"] = ce.max_component_degree;
    rep.summary["components"] = components;
    rep.summary["bridges"] = bridges;
    rep.summary["fraction_far_from_one"] =
        static_cast<double>(far) / static_cast<double>(pr.values.size());
    rep.summary["pagerank_range"] = {*std::min_element(pr.values.begin(), pr.values.end()),
                                     *std::max_element(pr.values.begin(), pr.values.end())};
    return rep;
  }

  rep.seeds.push_back({"degrees", seed.split("degrees").seed()});
  rep.seeds.push_back({"graph", seed.split("graph").seed()});
  const GeneratedGraph g = generate_graph(cfg, seed);
  if (cfg.kind == ExperimentKind::kDirectedRatio) {
    const Digraph& dg = *g.digraph;
    const Damping damping(c);
    const PageRankVector pr = solve_directed(dg, damping, cfg.tol, cfg.max_iter);
    const auto report = check_directed_ratio_bound(dg, pr, damping);
    std::vector<double> in(dg.num_vertices());
    std::uint64_t max_in = 0;
    for (Vertex v = 0; v < dg.num_vertices(); ++v) {
      in[v] = static_cast<double>(dg.in_degree(v));
      max_in = std::max<std::uint64_t>(max_in, dg.in_degree(v));
    }
    const auto grid = integer_grid(0, max_in);
    rep.outputs.push_back({"pagerank.csv", pagerank_csv(dg, pr)});
    rep.outputs.push_back({"in_degree_ccdf.csv", ccdf_csv(empirical_ccdf(in, grid))});
    rep.outputs.push_back({"pagerank_ccdf.csv", ccdf_csv(empirical_ccdf(pr.values, grid))});
    rep.summary["vertices"] = dg.num_vertices();
    rep.summary["arcs"] = dg.num_arcs();
    rep.summary["model"] = cfg.directed_model;
    rep.summary["solver"] = {
        {"iterations", pr.iterations},
        {"residual", pr.residual},
        {"mass_error", std::abs(pr.total_mass() - static_cast<double>(dg.num_vertices()))}};
    rep.summary["ratio_bound"] = to_json(report);
    rep.passed = report.holds();
    return rep;
  }

  const Graph& graph = *g.graph;
  double beta = 0.0, alpha = 0.0;
  if (cfg.kind == ExperimentKind::kPa) {
    beta = cfg.beta.value_or(auto_beta_pa(cfg.m, cfg.delta, c));
    alpha = cfg.alpha.value_or(default_alpha_pa(cfg.m, cfg.delta));
  } else {
    double sum = 0.0, sum_sq = 0.0;
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
      const auto d = static_cast<double>(graph.degree(v));
      sum += d;
      sum_sq += d * d;
    }
    beta = cfg.beta.value_or(auto_beta_cm(sum / static_cast<double>(graph.num_vertices()), c));
    // Mean degree seen along a uniformly chosen edge slot.
    alpha = cfg.alpha.value_or(default_alpha_mean(sum_sq / sum));
  }
  analyze_undirected(graph, cfg, beta, alpha, rep);
  return rep;
}

RepResult run_tree_rep(const ExperimentConfig& cfg, SeedStream seed) {
  RepResult rep;
  rep.seeds.push_back({"trees", seed.split("trees").seed()});
  const SeedStream trees = seed.split("trees");
  const Damping c(cfg.damping);
  const bool polya = cfg.kind == ExperimentKind::kPolyaTree;

  std::optional<DegreeDistribution> dist;
  PolyaParams params{cfg.m, cfg.delta};
  double alpha = 0.0;
  if (polya) {
    alpha = cfg.alpha.value_or(default_alpha_pa(cfg.m, cfg.delta));
  } else {
    dist = cfg.degrees.build(cfg.n);
    const auto& law = dist->law();
    alpha = cfg.alpha.value_or(default_alpha_mean(law.second_moment() / law.mean()));
  }

  std::vector<RootStatistic> stats(cfg.samples);
  std::vector<RootNeighborhood> hoods(cfg.samples);
  parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
    const SeedStream s = trees.split(static_cast<std::uint64_t>(i));
    const TruncatedRootedTree tree = polya ? sample_polya_point_tree(params, cfg.depth, s)
                                           : sample_unimodular_tree(*dist, cfg.depth, s);
    const RootPageRank r = root_pagerank_on_tree(tree, c);
    stats[i] = {i, tree.root().degree, r.lower, r.tail_bound};
    hoods[i] = tree_root_neighborhood(tree);
  });

  std::vector<double> lower(stats.size()), degrees(stats.size());
  double max_degree = 0.0, tail_sum = 0.0, tail_max = 0.0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    lower[i] = stats[i].root_pagerank_lower;
    degrees[i] = static_cast<double>(stats[i].root_degree);
    max_degree = std::max(max_degree, degrees[i]);
    tail_sum += stats[i].tail_bound;
    tail_max = std::max(tail_max, stats[i].tail_bound);
  }
  const double mean = mean_of(lower);
  double var = 0.0;
  for (double x : lower) var += (x - mean) * (x - mean);
  const double n = static_cast<double>(lower.size());
  const double se = lower.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;

  const auto grid = integer_grid(0, static_cast<std::uint64_t>(max_degree));
  const auto probe = condition_probe(hoods, alpha, cfg.epsilon, grid,
                                     static_cast<std::size_t>(cfg.min_count));
  rep.outputs.push_back({"root_statistics.csv", root_statistics_csv(stats)});
  rep.outputs.push_back({"root_degree_ccdf.csv", ccdf_csv(empirical_ccdf(degrees, grid))});
  rep.outputs.push_back(
      {"root_pagerank_ccdf.csv", ccdf_csv(empirical_ccdf(lower, grid))});
  rep.outputs.push_back({"condition.csv", condition_csv(probe)});

  rep.summary["samples"] = stats.size();
  rep.summary["depth"] = cfg.depth;
  rep.summary["mean_root_pagerank_lower"] = mean;
  rep.summary["std_error"] = se;
  rep.summary["mean_tail_bound"] = tail_sum / n;
  rep.summary["max_tail_bound"] = tail_max;
  rep.summary["mean_bound_holds"] = mean <= 1.0 + 3.0 * se;
  rep.summary["condition"] = strip_rows(to_json(probe));
  rep.passed = mean <= 1.0 + 3.0 * se;
  return rep;
}

std::string artifact_name(const std::string& name, std::size_t rep, std::size_t reps) {
  return reps > 1 ? fmt::format("rep{}_{}", rep, name) : name;
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  for (const auto& [k, label] : kKindNames) {
    if (label == name) return k;
  }
  return std::nullopt;
}

DegreeDistribution DistributionConfig::build(std::size_t n) const {
  if (type == Type::kExplicit) return DegreeDistribution::explicit_pmf(pmf);
  return DegreeDistribution::power_law(tau, k_min, k_max.value_or(n), even_only);
}

ExperimentConfig parse_config(const json& doc) {
  reject_unknown(doc, "",
                 {"kind", "n", "m", "delta", "degrees", "damping", "solver", "tree", "analysis",
                  "directed", "seed", "replications", "threads", "output"});
  ExperimentConfig cfg;
  if (doc.contains("kind")) {
    const auto name = get_string(doc["kind"], "kind");
    const auto kind = parse_experiment_kind(name);
    if (!kind) field_error("kind", fmt::format("unknown experiment kind '{}'", name));
    cfg.kind = *kind;
  }
  if (doc.contains("n")) cfg.n = get_unsigned(doc["n"], "n");
  if (doc.contains("m")) {
    const auto m = get_unsigned(doc["m"], "m");
    if (m > std::numeric_limits<std::uint32_t>::max()) field_error("m", "too large");
    cfg.m = static_cast<std::uint32_t>(m);
  }
  if (doc.contains("delta")) cfg.delta = get_real(doc["delta"], "delta");
  if (doc.contains("degrees")) cfg.degrees = parse_distribution(doc["degrees"]);
  if (doc.contains("damping")) cfg.damping = get_real(doc["damping"], "damping");
  if (doc.contains("solver")) {
    const json& s = doc["solver"];
    reject_unknown(s, "solver", {"method", "tol", "max_iter", "neumann_depth"});
    if (s.contains("method")) {
      const auto name = get_string(s["method"], "solver.method");
      const auto method = parse_pagerank_method(name);
      if (!method) field_error("solver.method", fmt::format("unknown method '{}'", name));
      cfg.method = *method;
    }
    if (s.contains("tol")) cfg.tol = get_real(s["tol"], "solver.tol");
    if (s.contains("max_iter")) cfg.max_iter = get_unsigned(s["max_iter"], "solver.max_iter");
    if (s.contains("neumann_depth") && !s["neumann_depth"].is_null()) {
      cfg.neumann_depth = get_unsigned(s["neumann_depth"], "solver.neumann_depth");
    }
  }
  if (doc.contains("tree")) {
    const json& t = doc["tree"];
    reject_unknown(t, "tree", {"samples", "depth"});
    if (t.contains("samples")) cfg.samples = get_unsigned(t["samples"], "tree.samples");
    if (t.contains("depth")) {
      const auto depth = get_unsigned(t["depth"], "tree.depth");
      if (depth > 64) field_error("tree.depth", "at most 64");
      cfg.depth = static_cast<std::uint32_t>(depth);
    }
  }
  if (doc.contains("analysis")) {
    const json& a = doc["analysis"];
    reject_unknown(a, "analysis", {"alpha", "epsilon", "beta", "min_count"});
    if (a.contains("alpha") && !a["alpha"].is_null()) {
      cfg.alpha = get_real(a["alpha"], "analysis.alpha");
    }
    if (a.contains("epsilon")) cfg.epsilon = get_real(a["epsilon"], "analysis.epsilon");
    if (a.contains("beta")) {
      const json& b = a["beta"];
      if (b.is_string()) {
        if (b.get<std::string>() != "auto") field_error("analysis.beta", "expected a number or \"auto\"");
      } else {
        cfg.beta = get_real(b, "analysis.beta");
      }
    }
    if (a.contains("min_count")) cfg.min_count = get_real(a["min_count"], "analysis.min_count");
  }
  if (doc.contains("directed")) {
    const json& d = doc["directed"];
    reject_unknown(d, "directed", {"model"});
    if (d.contains("model")) cfg.directed_model = get_string(d["model"], "directed.model");
  }
  if (doc.contains("seed")) cfg.seed = get_unsigned(doc["seed"], "seed");
  if (doc.contains("replications")) {
    cfg.replications = get_unsigned(doc["replications"], "replications");
  }
  if (doc.contains("threads")) {
    cfg.threads = static_cast<unsigned>(get_unsigned(doc["threads"], "threads"));
  }
  if (doc.contains("output")) cfg.output = get_string(doc["output"], "output");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, fmt::format("{}: {}", path.string(), e.what()));
  }
  return parse_config(doc);
}

json to_json(const ExperimentConfig& cfg) {
  return {{"kind", to_string(cfg.kind)},
          {"n", cfg.n},
          {"m", cfg.m},
          {"delta", cfg.delta},
          {"degrees", distribution_json(cfg.degrees)},
          {"damping", cfg.damping},
          {"solver",
           {{"method", to_string(cfg.method)},
            {"tol", cfg.tol},
            {"max_iter", cfg.max_iter},
            {"neumann_depth", cfg.neumann_depth ? json(*cfg.neumann_depth) : json(nullptr)}}},
          {"tree", {{"samples", cfg.samples}, {"depth", cfg.depth}}},
          {"analysis",
           {{"alpha", cfg.alpha ? json(*cfg.alpha) : json(nullptr)},
            {"epsilon", cfg.epsilon},
            {"beta", cfg.beta ? json(*cfg.beta) : json("auto")},
            {"min_count", cfg.min_count}}},
          {"directed", {{"model", cfg.directed_model}}},
          {"seed", cfg.seed},
          {"replications", cfg.replications},
          {"threads", cfg.threads},
          {"output", cfg.output.string()}};
}

std::vector<Violation> validate(const ExperimentConfig& cfg) {
  std::vector<Violation> out;
  auto error = [&](std::string field, std::string message) {
    out.push_back({Violation::Severity::kError, std::move(field), std::move(message)});
  };
  auto warn = [&](std::string field, std::string message) {
    out.push_back({Violation::Severity::kWarning, std::move(field), std::move(message)});
  };

  const double c = cfg.damping;
  const bool c_ok = c > 0.0 && c < 1.0;
  if (!c_ok) error("damping", fmt::format("damping must lie in (0,1), got {}", c));
  if (!(cfg.tol > 0.0)) error("solver.tol", "tolerance must be positive");
  if (cfg.max_iter == 0) error("solver.max_iter", "max_iter must be at least 1");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) error("analysis.epsilon", "epsilon must lie in (0,1)");
  if (cfg.alpha && !(*cfg.alpha > 0.0)) error("analysis.alpha", "alpha must be positive");
  if (cfg.beta && !(*cfg.beta > 0.0)) error("analysis.beta", "beta must be positive");
  if (!(cfg.min_count >= 1.0)) error("analysis.min_count", "min_count must be at least 1");
  if (cfg.replications == 0) error("replications", "replications must be at least 1");
  if (cfg.threads == 0) error("threads", "threads must be at least 1");

  if (is_graph_kind(cfg.kind) && cfg.n < 2) error("n", "n must be at least 2");
  if (!is_graph_kind(cfg.kind)) {
    if (cfg.samples == 0) error("tree.samples", "samples must be at least 1");
    if (cfg.depth == 0) error("tree.depth", "depth must be at least 1");
  }

  if (uses_pa_params(cfg.kind) || (cfg.kind == ExperimentKind::kDirectedRatio &&
                                   cfg.directed_model == "fixed_out")) {
    if (cfg.m < 1) error("m", "m must be at least 1");
  }
  if (uses_pa_params(cfg.kind)) {
    if (!(cfg.delta > -static_cast<double>(cfg.m))) {
      error("delta", fmt::format("delta must exceed -m (got delta={}, m={})", cfg.delta, cfg.m));
    } else if (cfg.beta && c_ok && cfg.m >= 1) {
      const double threshold = bound_threshold_pa(cfg.m, cfg.delta, c);
      if (*cfg.beta <= threshold) {
        warn("analysis.beta",
             fmt::format("beta {} is below the bound threshold 2 ceil(2m+delta)/(c(1-c)) = {}",
                         *cfg.beta, threshold));
      }
    }
  }

  if (uses_distribution(cfg.kind)) {
    const auto& d = cfg.degrees;
    if (d.type == DistributionConfig::Type::kPowerLaw && !(d.tau > 1.0)) {
      error("degrees.tau", fmt::format("tau must exceed 1, got {}", d.tau));
    }
    if (cfg.kind == ExperimentKind::kCounterexample) {
      bool odd = d.type == DistributionConfig::Type::kPowerLaw && !d.even_only;
      for (const auto& [k, p] : d.pmf) odd = odd || (k % 2 != 0 && p > 0.0);
      if (odd) error("degrees", "odd degree in support");
    }
    std::optional<DegreeDistribution> dist;
    if (!has_errors(out)) {
      try {
        dist = d.build(cfg.n);
      } catch (const Error& e) {
        error("degrees", e.what());
      }
    }
    if (dist && cfg.kind == ExperimentKind::kCounterexample) {
      try {
        counterexample_max_degree(*dist, cfg.n);
      } catch (const Error& e) {
        error("n", e.what());
      }
    }
    if (dist && cfg.kind == ExperimentKind::kDirectedRatio && cfg.directed_model == "fixed_out") {
      const auto lo = dist->law().min_value();
      const auto hi = dist->law().max_value();
      if (cfg.m < lo || cfg.m > hi) {
        error("m", fmt::format("out-degree m={} cannot balance in-degrees supported on [{}, {}]",
                               cfg.m, lo, hi));
      }
    }
    if (dist && cfg.beta && c_ok &&
        (cfg.kind == ExperimentKind::kCm || cfg.kind == ExperimentKind::kUnimodularTree)) {
      const double threshold = bound_threshold_cm(dist->mean(), c);
      if (*cfg.beta <= threshold) {
        warn("analysis.beta",
             fmt::format("beta {} is below the bound threshold 4E[D]/(c(1-c)) = {}", *cfg.beta,
                         threshold));
      }
    }
    if (dist && cfg.kind == ExperimentKind::kUnimodularTree && cfg.depth >= 1) {
      // Expected vertex count: 1 + E[D] (1 + mu + ... + mu^{depth-1}).
      const double mu = dist->offspring_law().mean();
      double size = 1.0, layer = dist->mean();
      for (std::uint32_t s = 0; s < cfg.depth; ++s, layer *= mu) size += layer;
      if (size > 1e6) {
        warn("tree.depth", fmt::format("expected tree size {:.3g} vertices per sample "
                                       "(offspring mean {:.3g}); lower depth or k_max",
                                       size, mu));
      }
    }
  }
  if (cfg.kind == ExperimentKind::kDirectedRatio && cfg.directed_model != "eulerian" &&
      cfg.directed_model != "fixed_out") {
    error("directed.model", "expected eulerian or fixed_out");
  }
  if (cfg.output.empty()) error("output", "output directory must be set");
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.severity == Violation::Severity::kError;
  });
}

double auto_beta_cm(double mean_degree, double c) {
  return 1.05 * bound_threshold_cm(mean_degree, c);
}

double auto_beta_pa(std::uint32_t m, double delta, double c) {
  return 1.05 * bound_threshold_pa(m, delta, c);
}

GeneratedGraph generate_graph(const ExperimentConfig& cfg, SeedStream seed) {
  GeneratedGraph out;
  switch (cfg.kind) {
    case ExperimentKind::kCm: {
      const auto degrees = sample_degrees(cfg.degrees.build(cfg.n), cfg.n, seed.split("degrees"));
      out.graph = configuration_model(degrees, seed.split("graph"));
      break;
    }
    case ExperimentKind::kPa:
      out.graph = preferential_attachment(cfg.n, cfg.m, cfg.delta, seed.split("graph"));
      break;
    case ExperimentKind::kCounterexample:
      out.graph = counterexample_graph(cfg.degrees.build(cfg.n), cfg.n).graph;
      break;
    case ExperimentKind::kDirectedRatio: {
      const auto dist = cfg.degrees.build(cfg.n);
      if (cfg.directed_model == "fixed_out") {
        const auto in = sample_degrees_with_total(dist, cfg.n, std::uint64_t{cfg.m} * cfg.n,
                                                  seed.split("degrees"));
        const std::vector<std::uint64_t> outd(cfg.n, cfg.m);
        out.digraph = directed_configuration_model(outd, in.degrees, seed.split("graph"));
      } else {
        const auto degrees = sample_degrees(dist, cfg.n, seed.split("degrees"));
        out.digraph = eulerian_configuration_model(degrees, seed.split("graph"));
      }
      break;
    }
    case ExperimentKind::kPolyaTree:
    case ExperimentKind::kUnimodularTree:
      throw Error(ErrorCode::kBadParameters,
                  fmt::format("experiment kind {} produces trees, not graphs", to_string(cfg.kind)));
  }
  return out;
}

json to_json(const RunManifest& manifest) {
  json artifacts = json::array();
  for (const Artifact& a : manifest.artifacts) {
    artifacts.push_back({{"name", a.name}, {"path", a.path.string()}, {"fnv1a64", hex64(a.hash)}});
  }
  json seeds = json::array();
  for (const SeedRecord& s : manifest.seeds) {
    seeds.push_back({{"label", s.label}, {"seed", s.seed}});
  }
  return {{"version", manifest.version},
          {"config", to_json(manifest.config)},
          {"artifacts", artifacts},
          {"seeds", seeds},
          {"summary", manifest.summary},
          {"wall_seconds", manifest.wall_seconds},
          {"checks_passed", manifest.checks_passed}};
}

RunManifest run(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto violations = validate(cfg);
  if (has_errors(violations)) {
    std::string msg = "invalid configuration:";
    for (const auto& v : violations) {
      if (v.severity == Violation::Severity::kError) msg += fmt::format(" [{}] {};", v.field, v.message);
    }
    throw Error(ErrorCode::kBadParameters, msg);
  }
  std::error_code ec;
  std::filesystem::create_directories(cfg.output, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot create {}: {}", cfg.output.string(), ec.message()));
  }

  RunManifest manifest;
  manifest.config = cfg;
  const SeedStream master = SeedStream(cfg.seed).split(to_string(cfg.kind));
  manifest.seeds.push_back({"master", cfg.seed});

  std::vector<RepResult> reps(cfg.replications);
  if (is_graph_kind(cfg.kind)) {
    // Replications in parallel; each solver stays single-threaded.
    parallel_for(cfg.replications, cfg.threads, [&](std::size_t r) {
      reps[r] = run_graph_rep(cfg, master.split(static_cast<std::uint64_t>(r)));
    });
  } else {
    for (std::size_t r = 0; r < cfg.replications; ++r) {
      reps[r] = run_tree_rep(cfg, master.split(static_cast<std::uint64_t>(r)));
    }
  }

  json per_rep = json::array();
  for (std::size_t r = 0; r < reps.size(); ++r) {
    RepResult& rep = reps[r];
    for (const auto& s : rep.seeds) {
      manifest.seeds.push_back({fmt::format("rep{}/{}", r, s.label), s.seed});
    }
    rep.outputs.push_back({"report.json", rep.summary.dump(2) + "\n"});
    for (const Output& o : rep.outputs) {
      const std::string name = artifact_name(o.name, r, reps.size());
      const auto path = cfg.output / name;
      write_file(path, o.contents);
      manifest.artifacts.push_back({name, path, fnv1a64(o.contents)});
    }
    rep.summary["passed"] = rep.passed;
    per_rep.push_back(std::move(rep.summary));
    manifest.checks_passed = manifest.checks_passed && rep.passed;
  }
  manifest.summary = {{"kind", to_string(cfg.kind)}, {"replications", per_rep}};
  json warnings = json::array();
  for (const auto& v : violations) warnings.push_back(fmt::format("[{}] {}", v.field, v.message));
  manifest.summary["warnings"] = warnings;

  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_file(cfg.output / "manifest.json", to_json(manifest).dump(2) + "\n");
  return manifest;
}

}  // namespace prtail
