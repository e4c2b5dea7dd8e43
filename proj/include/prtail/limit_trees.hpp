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
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "prtail/degree_distribution.hpp"
#include "prtail/pagerank.hpp"
#include "prtail/rng.hpp"

namespace prtail {

enum class AgeLabel : std::uint8_t { kNone, kYounger, kOlder };

struct TreeNode {
  static constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t parent = kNoParent;
  std::uint32_t depth = 0;
  // Full degree in the (infinite) tree, including unmaterialized children of
  // boundary vertices.
  std::uint64_t degree = 0;
  // Materialized children occupy [first_child, first_child + num_children).
  std::uint32_t first_child = 0;
  std::uint32_t num_children = 0;
  // Age in (0, 1) for Polya trees; absent for unimodular trees.
  std::optional<double> age;
  AgeLabel label = AgeLabel::kNone;
};

// Depth-truncated sample of a rooted tree, stored in breadth-first order so
// that every vertex's children are contiguous. Vertices at depth < max_depth
// have all their children materialized; vertices at max_depth only carry
// their degree.
class TruncatedRootedTree {
 public:
  // Builds a tree from breadth-first parent indices (parents[0] is ignored and
  // parents must be nondecreasing with parents[i] < i) and full degrees.
  // Throws kBadParameters when the input is not a consistent truncated tree.
  static TruncatedRootedTree from_parents(std::span<const std::uint32_t> parents,
                                          std::span<const std::uint64_t> degrees,
                                          std::uint32_t max_depth);

  std::uint32_t max_depth() const { return max_depth_; }
  std::size_t size() const { return nodes_.size(); }
  const TreeNode& node(std::uint32_t i) const { return nodes_[i]; }
  const TreeNode& root() const { return nodes_.front(); }
  std::span<const TreeNode> nodes() const { return nodes_; }
  std::span<const TreeNode> children(std::uint32_t i) const {
    return {nodes_.data() + nodes_[i].first_child, nodes_[i].num_children};
  }

  // Structural invariants (depths, degrees, contiguity) and, when ages are
  // present, the age-ordering rules of labeled children.
  bool is_valid() const;

 private:
  friend class TreeBuilder;
  TruncatedRootedTree() = default;

  std::vector<TreeNode> nodes_;
  std::uint32_t max_depth_ = 0;
};

struct PolyaParams {
  std::uint32_t m = 1;
  double delta = 0.0;

  // Throws kBadParameters unless m >= 1 and delta > -m.
  void validate() const;
  double chi() const { return (m + delta) / (2.0 * m + delta); }
  double tau() const { return 3.0 + delta / m; }
};

// Unimodular branching-process tree: the root has p-distributed degree and
// every other vertex a size-biased number of children.
TruncatedRootedTree sample_unimodular_tree(const DegreeDistribution& p, std::uint32_t depth,
                                           SeedStream seed);

// Polya point tree with parameters (m, delta): ages, y/o labels, Gamma-mixed
// Poisson counts of younger children with ages from the normalized intensity
// on [A_w, 1], and m or m - 1 older children with ages U^chi A_w.
TruncatedRootedTree sample_polya_point_tree(const PolyaParams& params, std::uint32_t depth,
                                            SeedStream seed);

// Inverse CDF of the younger-child age density on [t, 1] for exponent tau.
double younger_age_quantile(double t, double tau, double u);
// CDF of the same density.
double younger_age_cdf(double t, double tau, double x);

struct RootPageRank {
  // (1 - c) sum_{s <= S} c^s sum_j (P^s)_{j, root}: a lower bound.
  double lower = 0.0;
  // The omitted tail is at most c^{S+1} d_root, since
  // sum_j (P^s)_{j, root} = d_root E_root[1 / d_{X_s}] <= d_root.
  double tail_bound = 0.0;
  std::uint32_t depth = 0;
};

// Truncated root-PageRank. `depth` defaults to the tree's max_depth and may not
// exceed it; the partial sum is exact because every walk of length <= depth
// ending at the root stays inside the materialized part.
RootPageRank root_pagerank_on_tree(const TruncatedRootedTree& tree, Damping c,
                                   std::optional<std::uint32_t> depth = std::nullopt);

// Dominating younger-neighbor degree law: P(d = t) = (m + delta) /
// ((t + delta)(t + delta + 1)) for t >= m. Throws kBadParameters for t < m.
double tilde_degree_pmf(const PolyaParams& params, std::uint64_t t);
// P(d >= t) = (m + delta) / (t + delta) for t >= m.
double tilde_degree_tail(const PolyaParams& params, std::uint64_t t);

struct RootStatistic {
  std::uint64_t sample_id = 0;
  std::uint64_t root_degree = 0;
  double root_pagerank_lower = 0.0;
  double tail_bound = 0.0;
};

// Monte Carlo farms: sample i uses seed.split(i), so results are independent
// of `threads`.
std::vector<RootStatistic> polya_root_statistics(const PolyaParams& params, std::size_t samples,
                                                 std::uint32_t depth, Damping c,
                                                 SeedStream seed, unsigned threads = 1);
std::vector<RootStatistic> unimodular_root_statistics(const DegreeDistribution& p,
                                                      std::size_t samples, std::uint32_t depth,
                                                      Damping c, SeedStream seed,
                                                      unsigned threads = 1);

}  // namespace prtail
