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

#include "prtail/report_io.hpp"

#include <cmath>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "prtail/error.hpp"

namespace prtail {
namespace {

using nlohmann::json;

std::string real(double x) { return fmt::format("{:.17g}", x); }

// JSON has no infinities; report them as null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

template <typename T>
json optional_json(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_floating_point_v<T>) {
    return finite_or_null(*x);
  } else {
    return *x;
  }
}

}  // namespace

std::string ccdf_csv(const TailReport& report) {
  std::string out = "k,ccdf,count\n";
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    out += fmt::format("{},{},{}\n", real(report.grid[i]), real(report.ccdf[i]),
                       report.counts[i]);
  }
  return out;
}

std::string degree_csv(const Graph& graph) {
  std::string out = "vertex,degree\n";
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    out += fmt::format("{},{}\n", v, graph.degree(v));
  }
  return out;
}

std::string pagerank_csv(const Graph& graph, const PageRankVector& pagerank) {
  std::string out = "vertex,degree,pagerank\n";
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    out += fmt::format("{},{},{}\n", v, graph.degree(v), real(pagerank.values[v]));
  }
  return out;
}

std::string pagerank_csv(const Digraph& digraph, const PageRankVector& pagerank) {
  std::string out = "vertex,degree,pagerank,in_degree,out_degree\n";
  for (Vertex v = 0; v < digraph.num_vertices(); ++v) {
    const auto in = digraph.in_degree(v);
    const auto outd = digraph.out_degree(v);
    out += fmt::format("{},{},{},{},{}\n", v, in + outd, real(pagerank.values[v]), in, outd);
  }
  return out;
}

std::string root_statistics_csv(std::span<const RootStatistic> stats) {
  std::string out = "sample_id,root_degree,root_pagerank_lower,tail_bound\n";
  for (const RootStatistic& s : stats) {
    out += fmt::format("{},{},{},{}\n", s.sample_id, s.root_degree, real(s.root_pagerank_lower),
                       real(s.tail_bound));
  }
  return out;
}

std::string ratio_csv(const RatioBoundReport& report) {
  std::string out = "k,pagerank_ccdf,scaled_degree_ccdf,degree_ccdf,ratio,populated\n";
  for (const RatioRow& r : report.rows) {
    out += fmt::format("{},{},{},{},{},{}\n", real(r.k), real(r.pagerank_ccdf),
                       real(r.scaled_degree_ccdf), real(r.degree_ccdf),
                       r.ratio ? real(*r.ratio) : std::string(), r.populated ? 1 : 0);
  }
  return out;
}

std::string condition_csv(const ConditionProbe& probe) {
  std::string out = "k,marginal,joint,ratio,populated\n";
  for (const ConditionRow& r : probe.rows) {
    out += fmt::format("{},{},{},{},{}\n", real(r.k), r.marginal, r.joint,
                       r.ratio ? real(*r.ratio) : std::string(), r.populated ? 1 : 0);
  }
  return out;
}

json to_json(const HillEstimate& hill) {
  return {{"tail_index", hill.tail_index}, {"std_error", hill.std_error}, {"k_top", hill.k_top}};
}

json to_json(const TailReport& report) {
  json hill = json::array();
  for (const auto& h : report.hill) hill.push_back(to_json(h));
  return {{"sample_size", report.sample_size},
          {"grid", report.grid},
          {"ccdf", report.ccdf},
          {"counts", report.counts},
          {"hill", hill}};
}

json to_json(const RatioBoundReport& report) {
  json rows = json::array();
  for (const RatioRow& r : report.rows) {
    rows.push_back({{"k", r.k},
                    {"pagerank_ccdf", r.pagerank_ccdf},
                    {"scaled_degree_ccdf", r.scaled_degree_ccdf},
                    {"degree_ccdf", r.degree_ccdf},
                    {"ratio", optional_json(r.ratio)},
                    {"populated", r.populated}});
  }
  json window = nullptr;
  if (report.window) window = {report.window->first, report.window->second};
  return {{"beta", report.beta},
          {"min_ccdf", report.min_ccdf},
          {"tolerance", report.tolerance},
          {"upper_violations", report.upper_violations},
          {"window", window},
          {"populated", report.populated},
          {"min_populated_ratio", optional_json(report.min_populated_ratio)},
          {"rows", rows}};
}

json to_json(const ConditionProbe& probe) {
  json rows = json::array();
  for (const ConditionRow& r : probe.rows) {
    rows.push_back({{"k", r.k},
                    {"marginal", r.marginal},
                    {"joint", r.joint},
                    {"ratio", optional_json(r.ratio)},
                    {"populated", r.populated}});
  }
  return {{"alpha", probe.alpha},
          {"epsilon", probe.epsilon},
          {"samples", probe.samples},
          {"joint_le_marginal", probe.joint_le_marginal},
          {"first_populated_ratio", optional_json(probe.first_populated_ratio)},
          {"last_populated_ratio", optional_json(probe.last_populated_ratio)},
          {"decay_factor", optional_json(probe.decay_factor)},
          {"nonincreasing", probe.nonincreasing},
          {"rows", rows}};
}

json to_json(const DegreeBoundReport& report) {
  return {{"holds", report.holds()},
          {"max_violation", report.max_violation},
          {"argmax", report.argmax},
          {"violations", report.violations},
          {"first_violation", optional_json(report.first_violation)}};
}

json to_json(const DirectedRatioReport& report) {
  return {{"holds", report.holds()},
          {"hypothesis_met", report.hypothesis_met},
          {"max_ratio", finite_or_null(report.max_ratio)},
          {"min_in_degree", report.min_in_degree},
          {"max_violation", report.max_violation},
          {"violations", report.violations},
          {"first_violation", optional_json(report.first_violation)}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) { return fmt::format("{:016x}", value); }

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, fmt::format("cannot open {} for writing", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIo, fmt::format("failed writing {}", path.string()));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, fmt::format("cannot open {}", path.string()));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace prtail
