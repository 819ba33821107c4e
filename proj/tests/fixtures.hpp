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

// Shared fixtures and deliberately naive reference computations for tests.
// Nothing here calls into the library's algorithms; the brute-force helpers
// work directly from the definitions on bitmasks.

#ifndef ORDMAT_TESTS_FIXTURES_HPP
#define ORDMAT_TESTS_FIXTURES_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "ordmat/ordmat.hpp"

namespace fixtures {

using ordmat::Element;
using ordmat::ElementSet;
using ordmat::Instance;
using ordmat::MatroidDesc;

// Six nodes, seven edges; element ids in listing order:
//   0:[1,2] 1:[1,3] 2:[2,3] 3:[3,4] 4:[4,5] 5:[4,6] 6:[5,6]
inline std::vector<std::pair<int, int>> six_node_edges() {
  return {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
}

// Bases-figure instance: weights and categories (1 green, 2 orange, 3 red).
inline Instance all_bases_instance() {
  return ordmat::make_instance(MatroidDesc::graphic(6, six_node_edges()), {4, 1, 2, 0, 5, 3, 6},
                               {{1, 3, 2, 2, 2, 3, 1}}, {3});
}

struct NamedBasis {
  const char* name;
  ElementSet set;
  std::int64_t w;
  std::vector<int> o, cmin, cmax;
};

inline std::vector<NamedBasis> all_bases_table() {
  return {
      {"B1", {1, 2, 3, 4, 5}, 11, {2, 2, 2, 3, 3}, {2, 3, 0}, {0, 3, 2}},
      {"B2", {1, 2, 3, 5, 6}, 12, {1, 2, 2, 3, 3}, {2, 2, 1}, {1, 2, 2}},
      {"B3", {0, 1, 3, 4, 5}, 13, {1, 2, 2, 3, 3}, {2, 2, 1}, {1, 2, 2}},
      {"B4", {1, 2, 3, 4, 6}, 14, {1, 2, 2, 2, 3}, {1, 3, 1}, {1, 3, 1}},
      {"B5", {0, 2, 3, 4, 5}, 14, {1, 2, 2, 2, 3}, {1, 3, 1}, {1, 3, 1}},
      {"B6", {0, 1, 3, 5, 6}, 14, {1, 1, 2, 3, 3}, {2, 1, 2}, {2, 1, 2}},
      {"B7", {0, 2, 3, 5, 6}, 15, {1, 1, 2, 2, 3}, {1, 2, 2}, {2, 2, 1}},
      {"B8", {0, 1, 3, 4, 6}, 16, {1, 1, 2, 2, 3}, {1, 2, 2}, {2, 2, 1}},
      {"B9", {0, 2, 3, 4, 6}, 17, {1, 1, 2, 2, 2}, {0, 3, 2}, {2, 3, 0}},
  };
}

// Graphic matroid intersected with a colour partition (green 3, red 2).
// Colours: 0 green, 1 red. Weights favour the maximal-but-small set
// {[1,3],[2,3],[4,5],[4,6]}.
struct TwoColourFixture {
  MatroidDesc graphic;
  MatroidDesc colours;
  std::vector<std::int64_t> weights;
  ElementSet small_maximal;
  ElementSet large;
};

inline TwoColourFixture two_colour_fixture() {
  const std::vector<int> colour{0, 1, 1, 1, 0, 0, 1};
  return {MatroidDesc::graphic(6, six_node_edges()),
          ordmat::partition_by_label(colour, {3, 2}),
          {5, 0, 0, 5, 0, 0, 5},
          {1, 2, 4, 5},
          {0, 1, 3, 4, 5}};
}

// Path on five nodes with three parallel edges per consecutive pair:
// red (w 0, cat 3), orange (w 1, cat 2), green (w 2, cat 1).
inline Instance parallel_path_instance() {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::int64_t> w;
  std::vector<int> cat;
  for (int v = 0; v < 4; ++v) {
    for (int c = 3; c >= 1; --c) {
      edges.emplace_back(v, v + 1);
      w.push_back(3 - c);
      cat.push_back(c);
    }
  }
  return ordmat::make_instance(MatroidDesc::graphic(5, edges), w, {cat}, {3});
}

// ---------------------------------------------------------------------------
// Naive reference machinery.

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Independence from the definitions, on bitmasks.
inline bool naive_independent(const MatroidDesc& m, std::uint32_t mask) {
  if (const auto* g = m.as_graphic()) {
    // Acyclic iff every component with v vertices has v-1 edges: repeated
    // label propagation, no union-find.
    std::vector<int> comp(g->node_count);
    std::iota(comp.begin(), comp.end(), 0);
    for (std::size_t e = 0; e < g->edges.size(); ++e) {
      if (!(mask >> e & 1U)) continue;
      const int a = comp[g->edges[e].first];
      const int b = comp[g->edges[e].second];
      if (a == b) return false;
      for (int& c : comp) {
        if (c == b) c = a;
      }
    }
    return true;
  }
  if (const auto* p = m.as_partition()) {
    for (std::size_t b = 0; b < p->blocks.size(); ++b) {
      int used = 0;
      for (Element e : p->blocks[b]) used += (mask >> e) & 1U;
      if (used > p->capacities[b]) return false;
    }
    return true;
  }
  if (const auto* u = m.as_uniform()) return std::popcount(mask) <= u->k;
  throw std::logic_error("naive_independent: unsupported kind");
}

inline ElementSet mask_to_set(std::uint32_t mask) {
  std::vector<Element> v;
  for (Element e = 0; e < 32; ++e) {
    if (mask >> e & 1U) v.push_back(e);
  }
  return ElementSet(v);
}

// All maximum-cardinality independent sets, by scanning every subset.
inline std::vector<std::uint32_t> naive_bases(const MatroidDesc& m) {
  const int n = m.ground_size();
  int best = -1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!naive_independent(m, mask)) continue;
    const int k = std::popcount(mask);
    if (k > best) {
      best = k;
      out.clear();
    }
    if (k == best) out.push_back(mask);
  }
  return out;
}

// Outcome of a basis as plain vectors: w, then per objective the sorted
// category list.
struct NaiveOutcome {
  std::int64_t w;
  std::vector<std::vector<int>> o;
  auto operator<=>(const NaiveOutcome&) const = default;
};

inline NaiveOutcome naive_outcome(const Instance& inst, std::uint32_t mask) {
  NaiveOutcome out{0, std::vector<std::vector<int>>(inst.ordinal.size())};
  for (int e = 0; e < inst.ground_size(); ++e) {
    if (!(mask >> e & 1U)) continue;
    out.w += inst.weights[e];
    for (std::size_t i = 0; i < inst.ordinal.size(); ++i) out.o[i].push_back(inst.ordinal[i][e]);
  }
  for (auto& v : out.o) std::sort(v.begin(), v.end());
  return out;
}

inline NaiveOutcome to_naive(const ordmat::OutcomePoint& p) {
  NaiveOutcome out{p.w, {}};
  for (const auto& ov : p.ord) out.o.push_back(ov.cats);
  return out;
}

inline std::vector<int> naive_counts(const std::vector<int>& sorted_cats, int K, bool worst_first) {
  std::vector<int> c(K, 0);
  for (int x : sorted_cats) ++c[x - 1];
  if (worst_first) std::reverse(c.begin(), c.end());
  return c;
}

// a weakly dominates b under (w, o^1..o^p), componentwise.
inline bool naive_weakly_le(const NaiveOutcome& a, const NaiveOutcome& b) {
  if (a.w > b.w) return false;
  for (std::size_t i = 0; i < a.o.size(); ++i) {
    for (std::size_t j = 0; j < a.o[i].size(); ++j) {
      if (a.o[i][j] > b.o[i][j]) return false;
    }
  }
  return true;
}

enum class NaiveMode { ordinal, lexmin, lexmax };

// Key compared with <: smaller is better in the second component.
inline std::vector<int> naive_lex_key(const NaiveOutcome& x, int K, NaiveMode mode) {
  if (mode == NaiveMode::lexmin) return naive_counts(x.o[0], K, true);
  std::vector<int> c = naive_counts(x.o[0], K, false);
  for (int& v : c) v = -v;
  return c;
}

inline bool naive_dominates(const NaiveOutcome& a, const NaiveOutcome& b, int K, NaiveMode mode) {
  if (a == b) return false;
  if (mode == NaiveMode::ordinal) return naive_weakly_le(a, b);
  const auto ka = naive_lex_key(a, K, mode);
  const auto kb = naive_lex_key(b, K, mode);
  if (a.w == b.w && ka == kb) return false;
  return a.w <= b.w && ka <= kb;
}

// Non-dominated outcome set over every basis, straight from the definition.
inline std::set<NaiveOutcome> naive_nd(const Instance& inst, NaiveMode mode) {
  std::vector<NaiveOutcome> all;
  for (auto mask : naive_bases(inst.matroid)) all.push_back(naive_outcome(inst, mask));
  const int K = inst.num_categories[0];
  std::set<NaiveOutcome> nd;
  for (const auto& x : all) {
    bool dominated = false;
    for (const auto& y : all) {
      if (naive_dominates(y, x, K, mode)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) nd.insert(x);
  }
  return nd;
}

inline std::set<NaiveOutcome> outcome_set(const std::vector<ordmat::OutcomePoint>& pts) {
  std::set<NaiveOutcome> s;
  for (const auto& p : pts) s.insert(to_naive(p));
  return s;
}

// Spanning-tree count by the matrix-tree theorem (Gaussian elimination on
// the reduced Laplacian, in long double, rounded).
inline std::int64_t kirchhoff_count(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes <= 1) return 1;
  std::vector<std::vector<long double>> L(nodes, std::vector<long double>(nodes, 0));
  for (auto [a, b] : edges) {
    L[a][a] += 1;
    L[b][b] += 1;
    L[a][b] -= 1;
    L[b][a] -= 1;
  }
  const int n = nodes - 1;
  long double det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::fabs(L[r][c]) > std::fabs(L[piv][c])) piv = r;
    }
    if (std::fabs(L[piv][c]) < 1e-12L) return 0;
    if (piv != c) {
      std::swap(L[piv], L[c]);
      det = -det;
    }
    det *= L[c][c];
    for (int r = c + 1; r < n; ++r) {
      const long double f = L[r][c] / L[c][c];
      for (int k = c; k < n; ++k) L[r][k] -= f * L[c][k];
    }
  }
  return static_cast<std::int64_t>(std::llround(det));
}

// Random small instances for property tests, independent of the library's
// generators.
struct SmallRandom {
  std::mt19937_64 rng;
  explicit SmallRandom(std::uint64_t seed) : rng(seed) {}

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  MatroidDesc graphic(int nodes, int m) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < nodes; ++v) edges.emplace_back(pick(0, v - 1), v);
    while (static_cast<int>(edges.size()) < m) {
      int a = pick(0, nodes - 1), b = pick(0, nodes - 1);
      if (a != b) edges.emplace_back(a, b);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return MatroidDesc::graphic(nodes, edges);
  }

  MatroidDesc partition(int n, int blocks) {
    std::vector<std::vector<Element>> b(blocks);
    for (Element e = 0; e < n; ++e) b[pick(0, blocks - 1)].push_back(e);
    std::vector<int> caps;
    for (auto& blk : b) caps.push_back(pick(0, static_cast<int>(blk.size())));
    return MatroidDesc::partition(b, caps);
  }

  MatroidDesc uniform(int n) { return MatroidDesc::uniform(n, pick(0, n)); }

  MatroidDesc any(int n) {
    switch (pick(0, 2)) {
      case 0:
        return graphic(std::max(2, pick(2, n)), n);
      case 1:
        return partition(n, pick(1, 4));
      default:
        return uniform(n);
    }
  }

  Instance instance(MatroidDesc m, std::vector<int> K, int max_w = 20) {
    const int n = m.ground_size();
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = pick(0, max_w);
    std::vector<std::vector<int>> ord(K.size(), std::vector<int>(n));
    for (std::size_t i = 0; i < K.size(); ++i) {
      for (auto& c : ord[i]) c = pick(1, K[i]);
    }
    return ordmat::make_instance(std::move(m), std::move(w), std::move(ord), std::move(K));
  }
};

}  // namespace fixtures

#endif  // ORDMAT_TESTS_FIXTURES_HPP
