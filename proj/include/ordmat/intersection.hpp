// Copyright 2026 The Authors.
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

#ifndef ORDMAT_INTERSECTION_HPP
#define ORDMAT_INTERSECTION_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ordmat/element_set.hpp"
#include "ordmat/errors.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/matroid.hpp"
#include "ordmat/ordinal.hpp"

namespace ordmat {

struct MIResult {
  ElementSet set;
  int cardinality = 0;
  std::int64_t weight = 0;
  // weight_by_cardinality[k]: weight of the common independent set held
  // after k augmentations (minimal among all sets of size k).
  std::vector<std::int64_t> weight_by_cardinality{0};
};

namespace detail {

struct PathLabel {
  std::int64_t cost = std::numeric_limits<std::int64_t>::max();
  int arcs = std::numeric_limits<int>::max();

  bool reached() const { return arcs != std::numeric_limits<int>::max(); }
  friend bool operator<(const PathLabel& a, const PathLabel& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.arcs < b.arcs;
  }
};

}  // namespace detail

/// Minimum-weight maximum-cardinality common independent set of two
/// matroids on the same ground set, by successive shortest augmenting paths
/// in the exchange graph. Every intermediate set is weight-minimal for its
/// cardinality.
inline MIResult weighted_intersection(const MatroidDesc& m1, const MatroidDesc& m2,
                                      std::span<const std::int64_t> weights) {
  if (m1.ground_size() != m2.ground_size()) {
    throw InputError("weighted_intersection: matroids have different ground sets");
  }
  const int n = m1.ground_size();
  if (static_cast<int>(weights.size()) != n) {
    throw InputError("weighted_intersection: weights length differs from |E|");
  }
  for (auto w : weights) {
    if (w < 0) throw InputError("weighted_intersection: weights must be non-negative");
  }

  MIResult result;
  std::vector<char> in_set(n, 0);
  std::vector<std::vector<Element>> out(n);
  std::vector<detail::PathLabel> label(n);
  std::vector<Element> pred(n);
  std::vector<int> relaxations(n);
  std::vector<char> queued(n);
  std::deque<Element> queue;

  while (true) {
    const auto ex1 = exchange_structure(m1, result.set);
    const auto ex2 = exchange_structure(m2, result.set);

    // Arcs: y -> x if I - y + x in I1; x -> y if I - y + x in I2.
    for (auto& arcs : out) arcs.clear();
    bool any_source = false, any_sink = false;
    for (Element x = 0; x < n; ++x) {
      if (in_set[x]) continue;
      if (ex1[x].free) {
        any_source = true;
        for (Element y : result.set) out[y].push_back(x);
      } else {
        for (Element y : ex1[x].circuit) out[y].push_back(x);
      }
      if (ex2[x].free) {
        any_sink = true;
        out[x].insert(out[x].end(), result.set.begin(), result.set.end());
      } else {
        out[x].insert(out[x].end(), ex2[x].circuit.begin(), ex2[x].circuit.end());
      }
    }
    if (!any_source || !any_sink) break;

    auto node_cost = [&](Element v) { return in_set[v] ? -weights[v] : weights[v]; };

    // Label-correcting shortest paths on (cost, arc count); the exchange
    // graph of a weight-minimal set has no negative cycles.
    std::fill(label.begin(), label.end(), detail::PathLabel{});
    std::fill(pred.begin(), pred.end(), -1);
    std::fill(relaxations.begin(), relaxations.end(), 0);
    std::fill(queued.begin(), queued.end(), 0);
    for (Element x = 0; x < n; ++x) {
      if (!in_set[x] && ex1[x].free) {
        label[x] = {weights[x], 0};
        queue.push_back(x);
        queued[x] = 1;
      }
    }
    while (!queue.empty()) {
      const Element v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      for (Element u : out[v]) {
        const detail::PathLabel cand{label[v].cost + node_cost(u), label[v].arcs + 1};
        if (cand < label[u]) {
          label[u] = cand;
          pred[u] = v;
          if (!queued[u]) {
            if (++relaxations[u] > n + 1) {
              throw std::logic_error("weighted_intersection: negative cycle in exchange graph");
            }
            queue.push_back(u);
            queued[u] = 1;
          }
        }
      }
    }

    Element sink = -1;
    for (Element x = 0; x < n; ++x) {
      if (in_set[x] || !ex2[x].free || !label[x].reached()) continue;
      if (sink < 0 || label[x] < label[sink]) sink = x;
    }
    if (sink < 0) break;

    for (Element v = sink; v != -1; v = pred[v]) in_set[v] = !in_set[v];
    std::vector<Element> members;
    for (Element e = 0; e < n; ++e) {
      if (in_set[e]) members.push_back(e);
    }
    result.set = ElementSet(std::move(members));
    result.weight += label[sink].cost;
    result.weight_by_cardinality.push_back(result.weight);
  }
  result.cardinality = static_cast<int>(result.set.size());
  return result;
}

/// Partition matroid whose blocks are the classes of `label` (values in
/// [0, caps.size())).
inline MatroidDesc partition_by_label(const std::vector<int>& label, std::vector<int> caps) {
  std::vector<std::vector<Element>> blocks(caps.size());
  for (std::size_t e = 0; e < label.size(); ++e) {
    if (label[e] < 0 || static_cast<std::size_t>(label[e]) >= caps.size()) {
      throw InputError("partition_by_label: label out of range");
    }
    blocks[label[e]].push_back(static_cast<Element>(e));
  }
  return MatroidDesc::partition(std::move(blocks), std::move(caps));
}

/// Repeated scalarized subproblems over one instance: min w over bases of
/// the instance matroid that also satisfy a category constraint.
class Scalarizer {
 public:
  explicit Scalarizer(const Instance& inst, int objective = 0)
      : inst_(inst), objective_(objective), rank_(ordmat::rank(inst.matroid)) {
    if (objective < 0 || objective >= inst.objectives()) {
      throw InputError("Scalarizer: objective index out of range");
    }
    level_.reserve(inst.ground_size());
    for (Element e = 0; e < inst.ground_size(); ++e) {
      level_.push_back(inst.category(objective, e) - 1);
    }
  }

  int rank() const noexcept { return rank_; }
  int categories() const noexcept { return inst_.num_categories[objective_]; }
  const Instance& instance() const noexcept { return inst_; }

  /// Category bounds |B ∩ E_j| <= u_j via the partition matroid M2(u).
  /// Returns nullopt when no basis meets the bounds.
  std::optional<MIResult> solve(const BoundVector& u) const {
    if (static_cast<int>(u.size()) != categories()) {
      throw InputError("solve_scalarization: bound length differs from K");
    }
    for (int v : u.u) {
      if (v < 0 || v > rank_) throw InputError("solve_scalarization: bound entries must lie in 0..r");
    }
    return solve_with(partition_by_label(level_, u.u));
  }

  /// Nested caps: caps[t] bounds the number of elements in categories
  /// t+1..K (0-based level >= t).
  std::optional<MIResult> solve_suffix_caps(const std::vector<int>& caps) const {
    if (static_cast<int>(caps.size()) != categories()) {
      throw InputError("solve_suffix_caps: caps length differs from K");
    }
    return solve_with(MatroidDesc::nested(level_, caps));
  }

  std::optional<MIResult> solve_with(const MatroidDesc& side) const {
    MIResult mi = weighted_intersection(inst_.matroid, side, inst_.weights);
    if (mi.cardinality != rank_) return std::nullopt;
    return mi;
  }

 private:
  const Instance& inst_;
  int objective_;
  int rank_;
  std::vector<int> level_;
};

/// One scalarized subproblem: min w(B) over bases B with c(B) <= u.
inline std::optional<MIResult> solve_scalarization(const Instance& inst, const BoundVector& u) {
  return Scalarizer(inst).solve(u);
}

}  // namespace ordmat

#endif  // ORDMAT_INTERSECTION_HPP
