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

#ifndef ORDMAT_MATROID_HPP
#define ORDMAT_MATROID_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordmat/element_set.hpp"
#include "ordmat/errors.hpp"

namespace ordmat {

/// Edge-indexed multigraph; element i is edge i. Independent = acyclic.
struct GraphicMatroid {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Independent = at most capacities[i] elements from blocks[i].
struct PartitionMatroid {
  std::vector<std::vector<Element>> blocks;
  std::vector<int> capacities;
  std::vector<int> block_of;  // element -> block index
};

/// Independent = at most k elements.
struct UniformMatroid {
  int ground_size = 0;
  int k = 0;
};

/// Laminar chain: every element has a level in [0, caps.size()), and a set S
/// is independent iff |{e in S : level(e) >= t}| <= caps[t] for every t.
/// Used internally for lexicographic-maximization subproblems.
struct NestedCapMatroid {
  std::vector<int> level;
  std::vector<int> caps;
};

enum class MatroidKind { graphic, partition, uniform, nested };

/// Immutable matroid description over the ground set {0, ..., n-1}.
class MatroidDesc {
 public:
  static MatroidDesc graphic(int node_count,
                             std::vector<std::pair<int, int>> edges) {
    if (node_count < 0) throw InputError("graphic: negative node count");
    check_ground_size(edges.size());
    for (const auto& [a, b] : edges) {
      if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
        throw InputError("graphic: edge endpoint out of range");
      }
      if (a == b) throw InputError("graphic: self-loops are not allowed");
    }
    const int size = static_cast<int>(edges.size());
    return MatroidDesc(GraphicMatroid{node_count, std::move(edges)}, size);
  }

  static MatroidDesc partition(std::vector<std::vector<Element>> blocks,
                               std::vector<int> capacities) {
    if (blocks.size() != capacities.size()) {
      throw InputError("partition: capacities length differs from block count");
    }
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    check_ground_size(n);
    std::vector<int> block_of(n, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (capacities[i] < 0) throw InputError("partition: negative capacity");
      for (Element e : blocks[i]) {
        if (e < 0 || static_cast<std::size_t>(e) >= n || block_of[e] != -1) {
          throw InputError("partition: blocks must partition {0..n-1}");
        }
        block_of[e] = static_cast<int>(i);
      }
    }
    const int size = static_cast<int>(n);
    return MatroidDesc(PartitionMatroid{std::move(blocks), std::move(capacities),
                                        std::move(block_of)},
                       size);
  }

  static MatroidDesc uniform(int ground_size, int k) {
    if (ground_size < 0) throw InputError("uniform: negative ground size");
    check_ground_size(static_cast<std::size_t>(ground_size));
    if (k < 0 || k > ground_size) throw InputError("uniform: k must lie in [0, |E|]");
    return MatroidDesc(UniformMatroid{ground_size, k}, ground_size);
  }

  static MatroidDesc nested(std::vector<int> level, std::vector<int> caps) {
    check_ground_size(level.size());
    for (int l : level) {
      if (l < 0 || static_cast<std::size_t>(l) >= caps.size()) {
        throw InputError("nested: level out of range");
      }
    }
    for (int c : caps) {
      if (c < 0) throw InputError("nested: negative capacity");
    }
    const int size = static_cast<int>(level.size());
    return MatroidDesc(NestedCapMatroid{std::move(level), std::move(caps)}, size);
  }

  int ground_size() const noexcept { return ground_size_; }

  MatroidKind kind() const noexcept {
    return static_cast<MatroidKind>(rep_.index());
  }

  template <typename Visitor>
  decltype(auto) visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), rep_);
  }

  const GraphicMatroid* as_graphic() const { return std::get_if<GraphicMatroid>(&rep_); }
  const PartitionMatroid* as_partition() const { return std::get_if<PartitionMatroid>(&rep_); }
  const UniformMatroid* as_uniform() const { return std::get_if<UniformMatroid>(&rep_); }

 private:
  using Rep = std::variant<GraphicMatroid, PartitionMatroid, UniformMatroid,
                           NestedCapMatroid>;

  MatroidDesc(Rep rep, int ground_size)
      : rep_(std::move(rep)), ground_size_(ground_size) {}

  static void check_ground_size(std::size_t n) {
    if (n > kMaxGroundSize) throw InputError("ground set larger than 2^16 elements");
  }

  Rep rep_;
  int ground_size_ = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if a and b were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

inline void check_members(const MatroidDesc& m, std::span<const Element> s) {
  for (Element e : s) {
    if (e < 0 || e >= m.ground_size()) {
      throw InputError("element id " + std::to_string(e) + " outside ground set");
    }
  }
}

}  // namespace detail

/// Independence oracle. `s` must not contain duplicates.
inline bool is_independent(const MatroidDesc& m, std::span<const Element> s) {
  detail::check_members(m, s);
  struct Check {
    std::span<const Element> s;
    bool operator()(const GraphicMatroid& g) const {
      detail::UnionFind uf(g.node_count);
      for (Element e : s) {
        if (!uf.unite(g.edges[e].first, g.edges[e].second)) return false;
      }
      return true;
    }
    bool operator()(const PartitionMatroid& p) const {
      std::vector<int> used(p.blocks.size(), 0);
      for (Element e : s) {
        if (++used[p.block_of[e]] > p.capacities[p.block_of[e]]) return false;
      }
      return true;
    }
    bool operator()(const UniformMatroid& u) const {
      return static_cast<int>(s.size()) <= u.k;
    }
    bool operator()(const NestedCapMatroid& c) const {
      std::vector<int> at_level(c.caps.size(), 0);
      for (Element e : s) ++at_level[c.level[e]];
      int suffix = 0;
      for (std::size_t t = c.caps.size(); t-- > 0;) {
        suffix += at_level[t];
        if (suffix > c.caps[t]) return false;
      }
      return true;
    }
  };
  return m.visit(Check{s});
}

inline bool is_independent(const MatroidDesc& m, const ElementSet& s) {
  return is_independent(m, s.members());
}

/// Adds elements in `order` whenever independence is preserved.
/// Returns a maximal independent superset of `s` when `order` covers E.
inline ElementSet extend_greedily(const MatroidDesc& m, const ElementSet& s,
                                  std::span<const Element> order) {
  detail::check_members(m, s.members());
  detail::check_members(m, order);
  if (!is_independent(m, s)) throw InputError("extend_greedily: start set is dependent");

  std::vector<Element> current(s.begin(), s.end());
  std::vector<char> in_set(m.ground_size(), 0);
  for (Element e : current) in_set[e] = 1;

  // Incremental state per kind keeps the kernel linear for the common cases.
  if (const auto* g = m.as_graphic()) {
    detail::UnionFind uf(g->node_count);
    for (Element e : current) uf.unite(g->edges[e].first, g->edges[e].second);
    for (Element e : order) {
      if (in_set[e]) continue;
      if (uf.unite(g->edges[e].first, g->edges[e].second)) {
        in_set[e] = 1;
        current.push_back(e);
      }
    }
  } else {
    for (Element e : order) {
      if (in_set[e]) continue;
      current.push_back(e);
      if (is_independent(m, current)) {
        in_set[e] = 1;
      } else {
        current.pop_back();
      }
    }
  }
  return ElementSet(std::move(current));
}

inline ElementSet extend_greedily(const MatroidDesc& m, const ElementSet& s) {
  std::vector<Element> order(m.ground_size());
  std::iota(order.begin(), order.end(), 0);
  return extend_greedily(m, s, order);
}

/// Cardinality of every basis.
inline int rank(const MatroidDesc& m) {
  return static_cast<int>(extend_greedily(m, ElementSet{}).size());
}

inline bool is_basis(const MatroidDesc& m, const ElementSet& s) {
  return is_independent(m, s) && static_cast<int>(s.size()) == rank(m);
}

/// Basis exchange: for bases b1, b2 and e1 in b1 \ b2, returns some
/// e2 in b2 \ b1 such that b1 - e1 + e2 is a basis.
inline Element exchange_witness(const MatroidDesc& m, const ElementSet& b1,
                                const ElementSet& b2, Element e1) {
  if (!is_basis(m, b1) || !is_basis(m, b2)) {
    throw InputError("exchange_witness: arguments must be bases");
  }
  if (!b1.contains(e1) || b2.contains(e1)) {
    throw InputError("exchange_witness: e1 must lie in b1 \\ b2");
  }
  const ElementSet base = b1.without(e1);
  for (Element e2 : b2.minus(b1)) {
    if (is_independent(m, base.with(e2))) return e2;
  }
  throw InputError("exchange_witness: no exchange partner; not a matroid basis pair");
}

/// For an independent set I and an element x not in I: either I + x is
/// independent (`free`), or `circuit` lists every y in I with I - y + x
/// independent (the fundamental circuit of x minus x itself).
struct ExchangeEntry {
  bool free = false;
  std::vector<Element> circuit;
};

namespace detail {

inline std::vector<ExchangeEntry> exchange_graphic(const GraphicMatroid& g,
                                                   const std::vector<Element>& members,
                                                   const std::vector<char>& in_set) {
  const int n = g.node_count;
  // Root every tree of the forest and record parent edges.
  std::vector<std::vector<std::pair<int, Element>>> adj(n);
  for (Element e : members) {
    adj[g.edges[e].first].push_back({g.edges[e].second, e});
    adj[g.edges[e].second].push_back({g.edges[e].first, e});
  }
  std::vector<int> parent(n, -1), depth(n, 0), comp(n, -1);
  std::vector<Element> parent_edge(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    comp[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [u, e] : adj[v]) {
        if (comp[u] != -1) continue;
        comp[u] = root;
        parent[u] = v;
        parent_edge[u] = e;
        depth[u] = depth[v] + 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<ExchangeEntry> out(g.edges.size());
  for (std::size_t x = 0; x < g.edges.size(); ++x) {
    if (in_set[x]) continue;
    int a = g.edges[x].first, b = g.edges[x].second;
    if (comp[a] != comp[b]) {
      out[x].free = true;
      continue;
    }
    auto& path = out[x].circuit;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      path.push_back(parent_edge[a]);
      a = parent[a];
    }
  }
  return out;
}

}  // namespace detail

/// Exchange structure of `s` for every element outside it; entries for
/// members of `s` are left default.
inline std::vector<ExchangeEntry> exchange_structure(const MatroidDesc& m,
                                                     const ElementSet& s) {
  const int n = m.ground_size();
  std::vector<char> in_set(n, 0);
  for (Element e : s) in_set[e] = 1;
  std::vector<Element> members(s.begin(), s.end());

  struct Build {
    const std::vector<Element>& members;
    const std::vector<char>& in_set;
    int n;

    std::vector<ExchangeEntry> operator()(const GraphicMatroid& g) const {
      return detail::exchange_graphic(g, members, in_set);
    }
    std::vector<ExchangeEntry> operator()(const PartitionMatroid& p) const {
      std::vector<std::vector<Element>> by_block(p.blocks.size());
      for (Element e : members) by_block[p.block_of[e]].push_back(e);
      std::vector<ExchangeEntry> out(n);
      for (int x = 0; x < n; ++x) {
        if (in_set[x]) continue;
        const int b = p.block_of[x];
        if (static_cast<int>(by_block[b].size()) < p.capacities[b]) {
          out[x].free = true;
        } else if (p.capacities[b] > 0) {
          out[x].circuit = by_block[b];
        }
      }
      return out;
    }
    std::vector<ExchangeEntry> operator()(const UniformMatroid& u) const {
      std::vector<ExchangeEntry> out(n);
      const bool room = static_cast<int>(members.size()) < u.k;
      for (int x = 0; x < n; ++x) {
        if (in_set[x]) continue;
        if (room) {
          out[x].free = true;
        } else if (u.k > 0) {
          out[x].circuit = members;
        }
      }
      return out;
    }
    std::vector<ExchangeEntry> operator()(const NestedCapMatroid& c) const {
      const int levels = static_cast<int>(c.caps.size());
      std::vector<int> suffix(levels + 1, 0);
      for (Element e : members) ++suffix[c.level[e]];
      for (int t = levels - 1; t >= 0; --t) suffix[t] += suffix[t + 1];
      std::vector<ExchangeEntry> out(n);
      for (int x = 0; x < n; ++x) {
        if (in_set[x]) continue;
        // The smallest tight set containing x bounds the circuit.
        int tight = -1;
        for (int t = c.level[x]; t >= 0; --t) {
          if (suffix[t] >= c.caps[t]) {
            tight = t;
            break;
          }
        }
        if (tight < 0) {
          out[x].free = true;
          continue;
        }
        for (Element y : members) {
          if (c.level[y] >= tight) out[x].circuit.push_back(y);
        }
      }
      return out;
    }
  };
  return m.visit(Build{members, in_set, n});
}

/// Same contract as exchange_structure, computed with independence queries
/// only. Slow; used to cross-check the specialized versions.
inline std::vector<ExchangeEntry> exchange_structure_by_oracle(const MatroidDesc& m,
                                                               const ElementSet& s) {
  std::vector<ExchangeEntry> out(m.ground_size());
  for (Element x = 0; x < m.ground_size(); ++x) {
    if (s.contains(x)) continue;
    const ElementSet plus = s.with(x);
    if (is_independent(m, plus)) {
      out[x].free = true;
      continue;
    }
    for (Element y : s) {
      if (is_independent(m, plus.without(y))) out[x].circuit.push_back(y);
    }
  }
  return out;
}

}  // namespace ordmat

#endif  // ORDMAT_MATROID_HPP
