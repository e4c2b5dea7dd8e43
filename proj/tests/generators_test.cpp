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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "prtail/error.hpp"
#include "prtail/generators.hpp"
#include "prtail/pagerank.hpp"

namespace prtail {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kParse;
}

DegreeDistribution figure_one_law() {
  return DegreeDistribution::explicit_pmf({{2, 0.4}, {4, 0.32}, {6, 0.28}});
}

TEST(SampleDegrees, PointMass) {
  const auto seq = sample_degrees(DegreeDistribution::explicit_pmf({{1, 1.0}}), 4, SeedStream(1));
  EXPECT_EQ(seq.degrees, (std::vector<std::uint64_t>{1, 1, 1, 1}));
}

TEST(SampleDegrees, ParityFixAndDeterminism) {
  const auto p = DegreeDistribution::power_law(2.5, 1, 1000);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto a = sample_degrees(p, 101, SeedStream(s));
    EXPECT_EQ(a.total() % 2, 0u);
    EXPECT_EQ(a.degrees, sample_degrees(p, 101, SeedStream(s)).degrees);
  }
  const auto odd = sample_degrees(DegreeDistribution::explicit_pmf({{1, 1.0}}), 3, SeedStream(0));
  EXPECT_EQ(odd.degrees, (std::vector<std::uint64_t>{1, 1, 2}));
}

TEST(SampleDegrees, WithTotal) {
  const auto p = DegreeDistribution::explicit_pmf({{1, 0.3}, {2, 0.4}, {3, 0.3}});
  const auto seq = sample_degrees_with_total(p, 500, 1000, SeedStream(3));
  EXPECT_EQ(seq.total(), 1000u);
  for (auto d : seq.degrees) {
    EXPECT_GE(d, 1u);
    EXPECT_LE(d, 3u);
  }
  EXPECT_THROW(sample_degrees_with_total(p, 10, 31, SeedStream(3)), Error);
}

TEST(ConfigurationModel, SingleEdge) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = configuration_model({{1, 1}}, SeedStream(s));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
  }
}

TEST(ConfigurationModel, DegreesPreserved) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto g = configuration_model({{3, 3}}, SeedStream(s));
    EXPECT_EQ(g.degree(0), 3u);
    EXPECT_EQ(g.degree(1), 3u);
    EXPECT_TRUE(g.is_symmetric());
  }
  const auto p = DegreeDistribution::power_law(2.2, 1, 2000);
  const auto seq = sample_degrees(p, 2000, SeedStream(8));
  const auto g = configuration_model(seq, SeedStream(9));
  for (Vertex v = 0; v < 2000; ++v) ASSERT_EQ(g.degree(v), seq.degrees[v]);
}

TEST(ConfigurationModel, OddStubCount) {
  EXPECT_EQ(code_of([] { configuration_model({{1, 2}}, SeedStream(0)); }),
            ErrorCode::kOddStubCount);
}

TEST(PreferentialAttachment, InitialGraph) {
  const auto g = preferential_attachment(2, 3, 0.0, SeedStream(0));
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(g.degree(1), 3u);
}

TEST(PreferentialAttachment, Invariants) {
  for (auto [m, delta] : {std::pair{1u, 0.0}, {2u, -0.5}, {4u, 1.0}, {3u, -2.9}}) {
    const std::size_t n = 3000;
    const auto g = preferential_attachment(n, m, delta, SeedStream(m));
    EXPECT_EQ(g.num_edges(), m * (n - 1));
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_GE(g.degree(v), m);
      for (Vertex u : g.neighbors(v)) ASSERT_NE(u, v);
    }
    EXPECT_TRUE(g.is_symmetric());
  }
}

TEST(PreferentialAttachment, TreeForMEqualsOne) {
  const std::size_t n = 100000;
  const auto g = preferential_attachment(n, 1, 0.0, SeedStream(21));
  EXPECT_EQ(g.num_edges(), n - 1);
}

TEST(PreferentialAttachment, RejectsBadParameters) {
  EXPECT_EQ(code_of([] { preferential_attachment(10, 2, -2.0, SeedStream(0)); }),
            ErrorCode::kBadParameters);
  EXPECT_EQ(code_of([] { preferential_attachment(10, 0, 0.0, SeedStream(0)); }),
            ErrorCode::kBadParameters);
  EXPECT_EQ(code_of([] { preferential_attachment(1, 1, 0.0, SeedStream(0)); }),
            ErrorCode::kBadParameters);
}

// Exact check of the first attachment probabilities against the quoted rule
// at n = 3, m = 1: P(attach to 1) = (D_1 + delta) / (2m(n-1) + j + delta n)
// with D_1 = D_2 = 1, so each old vertex gets 1/2.
TEST(PreferentialAttachment, FirstStepSymmetric) {
  int to_zero = 0;
  const int reps = 20000;
  for (int s = 0; s < reps; ++s) {
    const auto g = preferential_attachment(3, 1, 0.7, SeedStream(1000 + s));
    to_zero += g.degree(0) == 2 ? 1 : 0;
  }
  EXPECT_NEAR(to_zero / static_cast<double>(reps), 0.5, 5 * std::sqrt(0.25 / reps));
}

TEST(Circulant, Examples) {
  const auto cycle = circulant(2, 10);
  EXPECT_EQ(cycle.num_edges(), 10u);
  for (Vertex v = 0; v < 10; ++v) {
    const auto nb = cycle.neighbors(v);
    EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()),
              (std::vector<Vertex>{std::min((v + 9) % 10, (v + 1) % 10),
                                   std::max((v + 9) % 10, (v + 1) % 10)}));
  }
  const auto g48 = circulant(4, 8);
  EXPECT_EQ(g48.num_edges(), 16u);
  for (auto d : g48.degrees()) EXPECT_EQ(d, 4u);
  const auto k7 = circulant(6, 7);
  EXPECT_EQ(k7.num_edges(), 21u);
  for (Vertex v = 0; v < 7; ++v) {
    const auto nb = k7.neighbors(v);
    std::vector<Vertex> expected;
    for (Vertex u = 0; u < 7; ++u) {
      if (u != v) expected.push_back(u);
    }
    EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), expected);
  }
}

TEST(Circulant, MatchesDefinition) {
  for (std::uint32_t k = 2; k <= 12; k += 2) {
    for (std::size_t n : {std::size_t{k} + 1, std::size_t{k} + 2, std::size_t{40}}) {
      if (n <= k) continue;
      std::vector<Edge> edges;
      oracle::append_circulant(edges, static_cast<int>(k), static_cast<int>(n), 0);
      const auto expected = Graph::from_edge_list(n, edges);
      EXPECT_EQ(circulant(k, n).edges(), expected.edges()) << k << "," << n;
    }
  }
}

TEST(Circulant, RejectsBadParameters) {
  EXPECT_THROW(circulant(3, 10), Error);
  EXPECT_THROW(circulant(4, 4), Error);
  EXPECT_THROW(circulant(0, 4), Error);
}

TEST(Counterexample, FigureOne) {
  const auto ce = counterexample_graph(figure_one_law(), 25);
  ASSERT_EQ(ce.components.size(), 3u);
  EXPECT_EQ(ce.components[0].size, 10u);
  EXPECT_EQ(ce.components[1].size, 8u);
  EXPECT_EQ(ce.components[2].size, 7u);
  EXPECT_EQ(ce.components[0].degree, 2u);
  EXPECT_EQ(ce.components[1].degree, 4u);
  EXPECT_EQ(ce.components[2].degree, 6u);
  EXPECT_EQ(ce.bridges.size(), 2u);
  EXPECT_EQ(ce.max_component_degree, 6u);
  EXPECT_EQ(ce.graph.edges(), oracle::figure_one().edges());
}

TEST(Counterexample, BridgedVerticesAndConnectivity) {
  const auto p = DegreeDistribution::power_law(2.5, 2, 100000, true);
  for (std::size_t n : {std::size_t{1000}, std::size_t{20000}}) {
    const auto ce = counterexample_graph(p, n);
    std::size_t bumped = 0;
    for (const auto& comp : ce.components) {
      for (std::size_t i = 0; i < comp.size; ++i) {
        const auto d = ce.graph.degree(static_cast<Vertex>(comp.first_vertex + i));
        ASSERT_TRUE(d == comp.degree || d == comp.degree + 1u);
        bumped += d == comp.degree + 1u ? 1 : 0;
      }
    }
    EXPECT_EQ(bumped, 2 * (ce.components.size() - 1));
    // Connectivity by breadth-first search.
    std::vector<char> seen(ce.graph.num_vertices(), 0);
    std::vector<Vertex> queue{0};
    seen[0] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex u : ce.graph.neighbors(queue[h])) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
    EXPECT_EQ(queue.size(), ce.graph.num_vertices());
  }
}

TEST(Counterexample, UnbridgedPageRankIsOne) {
  const auto ce = counterexample_graph(figure_one_law(), 25, false);
  EXPECT_TRUE(ce.bridges.empty());
  for (double x : solve_power_iteration(ce.graph, Damping(0.85)).values) {
    EXPECT_NEAR(x, 1.0, 1e-12);
  }
}

TEST(Counterexample, Errors) {
  EXPECT_EQ(code_of([] { counterexample_graph(figure_one_law(), 5); }),
            ErrorCode::kUnreachableSchedule);
  EXPECT_EQ(code_of([] {
              counterexample_graph(DegreeDistribution::explicit_pmf({{2, 0.5}, {3, 0.5}}), 100);
            }),
            ErrorCode::kBadParameters);
}

TEST(DirectedGenerators, Degrees) {
  const auto degrees = sample_degrees(DegreeDistribution::power_law(2.5, 1, 100), 500,
                                      SeedStream(2));
  const auto g = eulerian_configuration_model(degrees, SeedStream(3));
  for (Vertex v = 0; v < 500; ++v) {
    EXPECT_EQ(g.in_degree(v), degrees.degrees[v]);
    EXPECT_EQ(g.out_degree(v), degrees.degrees[v]);
  }
  EXPECT_TRUE(g.is_consistent());
  const std::vector<std::uint64_t> out{2, 2, 2}, in{1, 3, 2};
  const auto h = directed_configuration_model(out, in, SeedStream(4));
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_EQ(h.out_degree(v), out[v]);
    EXPECT_EQ(h.in_degree(v), in[v]);
  }
  EXPECT_THROW(directed_configuration_model(out, std::vector<std::uint64_t>{1, 1, 1},
                                            SeedStream(4)),
               Error);
}

}  // namespace
}  // namespace prtail
