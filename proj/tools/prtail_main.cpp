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

// prtail command-line driver.
//
// Precedence: command-line flags override config-file fields, which override
// built-in defaults.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "prtail/edge_list_io.hpp"
#include "prtail/error.hpp"
#include "prtail/experiment.hpp"
#include "prtail/pagerank.hpp"
#include "prtail/report_io.hpp"
#include "prtail/tail_analysis.hpp"

namespace {

using prtail::Error;
using prtail::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitIo = 4;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotConverged:
      return kExitNotConverged;
    case ErrorCode::kIo:
      return kExitIo;
    default:
      return kExitValidation;
  }
}

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<unsigned> threads;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_option("--seed", f.seed, "master seed");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
}

prtail::ExperimentConfig resolve(const CommonFlags& f) {
  prtail::ExperimentConfig cfg;
  if (!f.config.empty()) cfg = prtail::load_config(f.config);
  if (f.seed) cfg.seed = *f.seed;
  if (!f.out.empty()) cfg.output = f.out;
  if (f.threads) cfg.threads = *f.threads;
  return cfg;
}

// Prints violations; returns true when none is an error.
bool report_violations(const std::vector<prtail::Violation>& violations) {
  for (const auto& v : violations) {
    const bool err = v.severity == prtail::Violation::Severity::kError;
    std::cerr << fmt::format("{}: [{}] {}\n", err ? "error" : "warning", v.field, v.message);
  }
  return !prtail::has_errors(violations);
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, fmt::format("cannot create {}: {}", dir.string(), ec.message()));
}

int cmd_generate(const CommonFlags& f) {
  const auto cfg = resolve(f);
  if (!report_violations(prtail::validate(cfg))) return kExitValidation;
  ensure_dir(cfg.output);
  const auto seed = prtail::SeedStream(cfg.seed).split(prtail::to_string(cfg.kind)).split(std::uint64_t{0});
  const auto g = prtail::generate_graph(cfg, seed);
  const auto path = cfg.output / "graph.txt";
  if (g.graph) {
    prtail::save_graph(path, *g.graph);
  } else {
    prtail::save_digraph(path, *g.digraph);
  }
  std::cout << path.string() << "\n";
  return kExitOk;
}

struct PageRankFlags {
  std::string graph;
  bool directed = false;
  std::optional<double> damping;
  std::optional<std::string> method;
  std::optional<double> tol;
};

int cmd_pagerank(const CommonFlags& f, const PageRankFlags& p) {
  auto cfg = resolve(f);
  if (p.damping) cfg.damping = *p.damping;
  if (p.tol) cfg.tol = *p.tol;
  if (p.method) {
    const auto m = prtail::parse_pagerank_method(*p.method);
    if (!m) throw Error(ErrorCode::kBadParameters, fmt::format("unknown method '{}'", *p.method));
    cfg.method = *m;
  }
  const prtail::Damping c(cfg.damping);
  ensure_dir(cfg.output);
  const auto path = cfg.output / "pagerank.csv";
  if (p.directed) {
    const auto dg = prtail::load_digraph(p.graph);
    const auto pr = prtail::solve_directed(dg, c, cfg.tol, cfg.max_iter);
    prtail::write_file(path, prtail::pagerank_csv(dg, pr));
  } else {
    const auto g = prtail::load_graph(p.graph);
    prtail::PageRankVector pr = [&] {
      switch (cfg.method) {
        case prtail::PageRankMethod::kNeumann:
          return prtail::solve_neumann(
              g, c, cfg.neumann_depth.value_or(prtail::iterations_for_tolerance(cfg.tol, g.num_vertices(), c)));
        case prtail::PageRankMethod::kUndirectedClosedForm:
          return prtail::solve_undirected_closed(g, c, cfg.tol, cfg.max_iter);
        default:
          return prtail::solve_power_iteration(g, c, cfg.tol, cfg.max_iter);
      }
    }();
    prtail::write_file(path, prtail::pagerank_csv(g, pr));
  }
  std::cout << path.string() << "\n";
  return kExitOk;
}

int cmd_experiment(const CommonFlags& f, const std::string& kind) {
  auto cfg = resolve(f);
  const auto k = prtail::parse_experiment_kind(kind);
  if (!k) throw Error(ErrorCode::kBadParameters, fmt::format("unknown experiment kind '{}'", kind));
  cfg.kind = *k;
  if (!report_violations(prtail::validate(cfg))) return kExitValidation;
  const auto manifest = prtail::run(cfg);
  for (const auto& a : manifest.artifacts) {
    std::cout << fmt::format("{}  {}\n", prtail::hex64(a.hash), a.path.string());
  }
  std::cout << fmt::format("checks {}\n", manifest.checks_passed ? "passed" : "FAILED");
  return kExitOk;
}

// Reads the `vertex,degree,pagerank[,...]` CSV written by `pagerank`.
void read_pagerank_csv(const std::string& path, std::vector<double>& degrees,
                       std::vector<double>& pagerank) {
  std::istringstream in(prtail::read_file(path));
  std::string line;
  if (!std::getline(in, line) || line.rfind("vertex,degree,pagerank", 0) != 0) {
    throw Error(ErrorCode::kParse, fmt::format("{}: expected a vertex,degree,pagerank header", path));
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string vertex, degree, value;
    if (!std::getline(row, vertex, ',') || !std::getline(row, degree, ',') ||
        !std::getline(row, value, ',')) {
      throw Error(ErrorCode::kParse, fmt::format("{}:{}: malformed row", path, lineno));
    }
    try {
      degrees.push_back(std::stod(degree));
      pagerank.push_back(std::stod(value));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, fmt::format("{}:{}: malformed number", path, lineno));
    }
  }
}

int cmd_analyze(const CommonFlags& f, const std::string& input, std::optional<double> beta,
                std::optional<std::size_t> k_top) {
  auto cfg = resolve(f);
  std::vector<double> degrees, pagerank;
  read_pagerank_csv(input, degrees, pagerank);
  if (degrees.empty()) throw Error(ErrorCode::kEmptySample, fmt::format("{}: no rows", input));
  double mean = 0.0, max_value = 0.0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    mean += degrees[i];
    max_value = std::max({max_value, degrees[i], pagerank[i]});
  }
  mean /= static_cast<double>(degrees.size());
  const double b = beta.value_or(cfg.beta.value_or(prtail::auto_beta_cm(mean, prtail::Damping(cfg.damping).value())));

  const auto grid = prtail::integer_grid(0, static_cast<std::uint64_t>(std::ceil(max_value)));
  auto degree_tail = prtail::empirical_ccdf(degrees, grid);
  const auto pr_tail = prtail::empirical_ccdf(pagerank, grid);
  const std::size_t k = k_top.value_or(static_cast<std::size_t>(std::sqrt(static_cast<double>(degrees.size()))));
  nlohmann::json hill = nullptr;
  try {
    hill = prtail::to_json(prtail::hill_estimator(degrees, k));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientSample) throw;
    std::cerr << "warning: " << e.what() << "\n";
  }
  std::vector<double> fine;
  for (int i = 0; i <= 1000; ++i) fine.push_back(i * 0.01);
  for (double x = 11.0; x <= std::ceil(max_value); x += 1.0) fine.push_back(x);
  const auto ratio = prtail::ratio_bound_report(pagerank, degrees, b, fine, cfg.min_count);

  ensure_dir(cfg.output);
  prtail::write_file(cfg.output / "degree_ccdf.csv", prtail::ccdf_csv(degree_tail));
  prtail::write_file(cfg.output / "pagerank_ccdf.csv", prtail::ccdf_csv(pr_tail));
  prtail::write_file(cfg.output / "ratio.csv", prtail::ratio_csv(ratio));
  nlohmann::json report = {{"input", input},
                           {"samples", degrees.size()},
                           {"mean_degree", mean},
                           {"hill_degree", hill},
                           {"ratio", prtail::to_json(ratio)}};
  report["ratio"].erase("rows");
  prtail::write_file(cfg.output / "analysis.json", report.dump(2) + "\n");
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_validate(const CommonFlags& f) {
  const auto cfg = resolve(f);
  const auto violations = prtail::validate(cfg);
  const bool ok = report_violations(violations);
  std::cout << (ok ? "ok\n" : "invalid\n");
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PageRank tail experiments on random graphs and their local limits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(prtail::kVersion));

  CommonFlags common;
  auto* generate = app.add_subcommand("generate", "write a sampled graph as an edge list");
  add_common(generate, common);

  PageRankFlags pr_flags;
  auto* pagerank = app.add_subcommand("pagerank", "solve PageRank on an edge-list graph");
  add_common(pagerank, common);
  pagerank->add_option("--graph", pr_flags.graph, "edge-list file")->required();
  pagerank->add_flag("--directed", pr_flags.directed, "treat lines as arcs u -> v");
  pagerank->add_option("--damping", pr_flags.damping, "damping factor c in (0,1)");
  pagerank->add_option("--method", pr_flags.method,
                       "power_iteration, neumann or undirected_closed_form");
  pagerank->add_option("--tol", pr_flags.tol, "L1 residual tolerance");

  std::string kind;
  auto* experiment = app.add_subcommand("experiment", "run an experiment and write artifacts");
  add_common(experiment, common);
  experiment->add_option("kind", kind,
                         "cm, pa, counterexample, polya_tree, unimodular_tree or directed_ratio")
      ->required();

  std::string input;
  std::optional<double> beta;
  std::optional<std::size_t> k_top;
  auto* analyze = app.add_subcommand("analyze", "tail statistics of a PageRank CSV");
  add_common(analyze, common);
  analyze->add_option("--input", input, "CSV with vertex,degree,pagerank columns")->required();
  analyze->add_option("--beta", beta, "degree scale for the ratio report (default auto)");
  analyze->add_option("--k-top", k_top, "Hill top order statistics (default sqrt N)");

  auto* validate = app.add_subcommand("validate", "check a config without running it");
  add_common(validate, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*generate) return cmd_generate(common);
    if (*pagerank) return cmd_pagerank(common, pr_flags);
    if (*experiment) return cmd_experiment(common, kind);
    if (*analyze) return cmd_analyze(common, input, beta, k_top);
    if (*validate) return cmd_validate(common);
  } catch (const Error& e) {
    std::cerr << "prtail: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "prtail: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "prtail: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
