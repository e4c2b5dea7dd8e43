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

#include "prtail/limit_trees.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "prtail/error.hpp"
#include "prtail/parallel.hpp"

namespace prtail {

// Appends vertices in breadth-first order; each vertex at depth < max_depth
// must receive all its children before the next vertex is expanded.
class TreeBuilder {
 public:
  explicit TreeBuilder(std::uint32_t max_depth) { tree_.max_depth_ = max_depth; }

  std::uint32_t add_root(std::optional<double> age) {
    TreeNode root;
    root.age = age;
    tree_.nodes_.push_back(root);
    return 0;
  }

  std::uint32_t add_child(std::uint32_t parent, std::optional<double> age, AgeLabel label) {
    auto& p = tree_.nodes_[parent];
    const auto index = static_cast<std::uint32_t>(tree_.nodes_.size());
    if (p.num_children == 0) p.first_child = index;
    ++p.num_children;
    TreeNode child;
    child.parent = parent;
    child.depth = p.depth + 1;
    child.age = age;
    child.label = label;
    tree_.nodes_.push_back(child);
    return index;
  }

  TreeNode& node(std::uint32_t i) { return tree_.nodes_[i]; }
  std::size_t size() const { return tree_.nodes_.size(); }
  std::uint32_t max_depth() const { return tree_.max_depth_; }

  TruncatedRootedTree finish() && { return std::move(tree_); }

 private:
  TruncatedRootedTree tree_;
};

TruncatedRootedTree TruncatedRootedTree::from_parents(std::span<const std::uint32_t> parents,
                                                      std::span<const std::uint64_t> degrees,
                                                      std::uint32_t max_depth) {
  if (parents.empty() || parents.size() != degrees.size()) {
    throw Error(ErrorCode::kBadParameters, "tree needs matching, nonempty parent/degree lists");
  }
  TreeBuilder builder(max_depth);
  builder.add_root(std::nullopt);
  for (std::size_t i = 1; i < parents.size(); ++i) {
    if (parents[i] >= i || (i > 1 && parents[i] < parents[i - 1])) {
      throw Error(ErrorCode::kBadParameters,
                  fmt::format("parent list is not in breadth-first order at vertex {}", i));
    }
    if (builder.node(parents[i]).depth >= max_depth) {
      throw Error(ErrorCode::kBadParameters,
                  fmt::format("vertex {} lies below the truncation depth", i));
    }
    builder.add_child(parents[i], std::nullopt, AgeLabel::kNone);
  }
  for (std::size_t i = 0; i < degrees.size(); ++i) builder.node(static_cast<std::uint32_t>(i)).degree = degrees[i];
  auto tree = std::move(builder).finish();
  if (!tree.is_valid()) {
    throw Error(ErrorCode::kBadParameters, "degrees are inconsistent with the tree structure");
  }
  return tree;
}

bool TruncatedRootedTree::is_valid() const {
  if (nodes_.empty() || nodes_[0].depth != 0 || nodes_[0].parent != TreeNode::kNoParent) {
    return false;
  }
  for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
    const TreeNode& v = nodes_[i];
    if (v.degree < 1 || v.depth > max_depth_) return false;
    const std::uint64_t up = i == 0 ? 0 : 1;
    if (i > 0 && nodes_[v.parent].depth + 1 != v.depth) return false;
    if (v.depth < max_depth_) {
      if (v.degree != v.num_children + up) return false;
    } else if (v.num_children != 0 || v.degree < up) {
      return false;
    }
    double last_younger = -1.0;
    for (std::uint32_t c = 0; c < v.num_children; ++c) {
      const TreeNode& child = nodes_[v.first_child + c];
      if (child.parent != i) return false;
      if (!v.age || !child.age) continue;
      if (child.label == AgeLabel::kOlder && !(*child.age < *v.age)) return false;
      if (child.label == AgeLabel::kYounger) {
        if (*child.age < *v.age || *child.age > 1.0 || *child.age < last_younger) return false;
        last_younger = *child.age;
      }
    }
  }
  return true;
}

void PolyaParams::validate() const {
  if (m < 1 || !(delta > -static_cast<double>(m))) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("Polya parameters need m >= 1 and delta > -m (got m={}, delta={})", m,
                            delta));
  }
}

TruncatedRootedTree sample_unimodular_tree(const DegreeDistribution& p, std::uint32_t depth,
                                           SeedStream seed) {
  const double mean = p.mean();
  if (!std::isfinite(mean)) throw Error(ErrorCode::kInfiniteMean, "degree law has infinite mean");
  if (depth < 1) throw Error(ErrorCode::kBadParameters, "tree depth must be at least 1");
  const IntegerPmf& offspring = p.offspring_law();
  Rng rng(seed);
  TreeBuilder b(depth);
  b.add_root(std::nullopt);
  b.node(0).degree = p.sample(rng);
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    const std::uint32_t d = b.node(i).depth;
    if (i > 0) b.node(i).degree = 1 + offspring.sample(rng);
    if (d >= depth) continue;
    const std::uint64_t kids = b.node(i).degree - (i > 0 ? 1 : 0);
    for (std::uint64_t k = 0; k < kids; ++k) b.add_child(i, std::nullopt, AgeLabel::kNone);
  }
  return std::move(b).finish();
}

double younger_age_quantile(double t, double tau, double u) {
  const double inv = 1.0 / (tau - 1.0);
  const double a = std::pow(t, inv);
  return std::pow(a + u * (1.0 - a), tau - 1.0);
}

double younger_age_cdf(double t, double tau, double x) {
  if (x <= t) return 0.0;
  if (x >= 1.0) return 1.0;
  const double inv = 1.0 / (tau - 1.0);
  const double a = std::pow(t, inv);
  return (std::pow(x, inv) - a) / (1.0 - a);
}

TruncatedRootedTree sample_polya_point_tree(const PolyaParams& params, std::uint32_t depth,
                                            SeedStream seed) {
  params.validate();
  if (depth < 1) throw Error(ErrorCode::kBadParameters, "tree depth must be at least 1");
  const double chi = params.chi();
  const double tau = params.tau();
  const double inv = 1.0 / (tau - 1.0);
  const double m = params.m;

  Rng rng(seed);
  TreeBuilder b(depth);
  b.add_root(rng.uniform_open());
  std::vector<double> younger;
  for (std::uint32_t i = 0; i < b.size(); ++i) {
    const AgeLabel label = b.node(i).label;
    const double age = *b.node(i).age;
    const std::uint32_t older = label == AgeLabel::kYounger ? params.m - 1 : params.m;
    const double shape = label == AgeLabel::kOlder ? m + params.delta + 1.0 : m + params.delta;
    const double gamma = rng.gamma(shape);
    const double a = std::pow(age, inv);
    const std::uint64_t count = rng.poisson(gamma * (1.0 - a) / a);
    b.node(i).degree = (i > 0 ? 1 : 0) + older + count;
    if (b.node(i).depth >= depth) continue;

    for (std::uint32_t j = 0; j < older; ++j) {
      b.add_child(i, std::pow(rng.uniform_open(), chi) * age, AgeLabel::kOlder);
    }
    younger.resize(count);
    for (auto& y : younger) y = younger_age_quantile(age, tau, rng.uniform01());
    std::sort(younger.begin(), younger.end());
    for (double y : younger) b.add_child(i, y, AgeLabel::kYounger);
  }
  return std::move(b).finish();
}

RootPageRank root_pagerank_on_tree(const TruncatedRootedTree& tree, Damping c,
                                   std::optional<std::uint32_t> depth) {
  const std::uint32_t s_max = depth.value_or(tree.max_depth());
  if (s_max > tree.max_depth()) {
    throw Error(ErrorCode::kBadParameters,
                fmt::format("evaluation depth {} exceeds tree depth {}", s_max, tree.max_depth()));
  }
  const auto nodes = tree.nodes();
  // Breadth-first order: vertices of depth <= d form a prefix.
  std::vector<std::size_t> prefix(s_max + 1, 0);
  for (const TreeNode& v : nodes) {
    if (v.depth <= s_max) ++prefix[v.depth];
  }
  for (std::uint32_t d = 1; d <= s_max; ++d) prefix[d] += prefix[d - 1];

  const double cv = c.value();
  // y_s(j) = (P^s)_{j, root}; y_s(j) = sum_{k ~ j} y_{s-1}(k) / d_j.
  std::vector<double> prev(prefix[s_max], 0.0), cur(prefix[s_max], 0.0);
  prev[0] = 1.0;
  double weight = 1.0 - cv;
  double total = weight;
  for (std::uint32_t s = 1; s <= s_max; ++s) {
    const std::size_t live = prefix[s];
    const std::size_t prev_live = prefix[s - 1];
    double mass = 0.0;
    for (std::size_t j = 0; j < live; ++j) {
      const TreeNode& v = nodes[j];
      // Parity: y_s vanishes off depths congruent to s mod 2.
      if ((v.depth + s) % 2 != 0) {
        cur[j] = 0.0;
        continue;
      }
      double acc = 0.0;
      if (j > 0 && v.parent < prev_live) acc += prev[v.parent];
      for (std::uint32_t k = 0; k < v.num_children; ++k) {
        const std::size_t child = v.first_child + k;
        if (child < prev_live) acc += prev[child];
      }
      cur[j] = acc / static_cast<double>(v.degree);
      mass += cur[j];
    }
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(live), cur.end(), 0.0);
    prev.swap(cur);
    weight *= cv;
    total += weight * mass;
  }
  RootPageRank out;
  out.lower = total;
  out.depth = s_max;
  out.tail_bound = std::pow(cv, s_max + 1) * static_cast<double>(tree.root().degree);
  return out;
}

double tilde_degree_pmf(const PolyaParams& params, std::uint64_t t) {
  params.validate();
  if (t < params.m) {
    throw Error(ErrorCode::kBadParameters, fmt::format("t={} is below m={}", t, params.m));
  }
  const double x = static_cast<double>(t) + params.delta;
  return (params.m + params.delta) / (x * (x + 1.0));
}

double tilde_degree_tail(const PolyaParams& params, std::uint64_t t) {
  params.validate();
  if (t < params.m) {
    throw Error(ErrorCode::kBadParameters, fmt::format("t={} is below m={}", t, params.m));
  }
  return (params.m + params.delta) / (static_cast<double>(t) + params.delta);
}

namespace {

template <typename Sampler>
std::vector<RootStatistic> root_statistics(std::size_t samples, Damping c, SeedStream seed,
                                           unsigned threads, Sampler&& sample) {
  std::vector<RootStatistic> out(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    const TruncatedRootedTree tree = sample(seed.split(static_cast<std::uint64_t>(i)));
    const RootPageRank r = root_pagerank_on_tree(tree, c);
    out[i] = {i, tree.root().degree, r.lower, r.tail_bound};
  });
  return out;
}

}  // namespace

std::vector<RootStatistic> polya_root_statistics(const PolyaParams& params, std::size_t samples,
                                                 std::uint32_t depth, Damping c,
                                                 SeedStream seed, unsigned threads) {
  params.validate();
  return root_statistics(samples, c, seed, threads, [&](SeedStream s) {
    return sample_polya_point_tree(params, depth, s);
  });
}

std::vector<RootStatistic> unimodular_root_statistics(const DegreeDistribution& p,
                                                      std::size_t samples, std::uint32_t depth,
                                                      Damping c, SeedStream seed,
                                                      unsigned threads) {
  return root_statistics(samples, c, seed, threads, [&](SeedStream s) {
    return sample_unimodular_tree(p, depth, s);
  });
}

}  // namespace prtail
