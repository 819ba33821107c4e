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

#ifndef ORDMAT_GENERATORS_HPP
#define ORDMAT_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ordmat/errors.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/matroid.hpp"

namespace ordmat {

/// Seedable 64-bit generator with a portable bounded draw: std::mt19937_64
/// output is fully specified by the standard, and `uniform` uses plain
/// rejection sampling so other languages can replay the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InputError("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Fisher-Yates, drawing j in [0, i] for i = n-1 down to 1.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::vector<std::vector<int>> draw_categories(Rng& rng, int n, int categories, int objectives) {
  std::vector<std::vector<int>> ord(objectives, std::vector<int>(n));
  for (auto& row : ord) {
    for (int& c : row) c = static_cast<int>(rng.uniform(1, categories));
  }
  return ord;
}

}  // namespace detail

/// Random connected multigraph on n nodes with m edges: a random spanning
/// tree (shuffled nodes, each attached to a uniformly chosen earlier one)
/// plus m-n+1 random extra edges. Extra edges avoid duplicates while the
/// simple graph has room; beyond n(n-1)/2 edges parallels are allowed.
/// Weights uniform in 1..2m, categories uniform in 1..K.
inline Instance gen_graphic(int n, int m, int categories, std::uint64_t seed, int objectives = 1) {
  if (n < 2) throw InputError("gen_graphic: need n >= 2");
  if (m < n - 1) throw InputError("gen_graphic: m < n-1 cannot be connected");
  if (static_cast<std::size_t>(m) > kMaxGroundSize) throw InputError("gen_graphic: m exceeds the ground-set limit");
  if (categories < 1 || objectives < 1) throw InputError("gen_graphic: need K >= 1 and p >= 1");

  Rng rng(seed);
  std::vector<int> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  rng.shuffle(nodes);

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> used;
  auto add = [&](int a, int b) {
    edges.emplace_back(a, b);
    used.emplace(std::min(a, b), std::max(a, b));
  };
  for (int i = 1; i < n; ++i) add(nodes[i], nodes[rng.uniform(0, i - 1)]);

  const bool simple = static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n) * (n - 1) / 2;
  while (static_cast<int>(edges.size()) < m) {
    const int a = static_cast<int>(rng.uniform(0, n - 1));
    const int b = static_cast<int>(rng.uniform(0, n - 1));
    if (a == b) continue;
    if (simple && used.contains({std::min(a, b), std::max(a, b)})) continue;
    add(a, b);
  }
  rng.shuffle(edges);

  std::vector<std::int64_t> weights(m);
  for (auto& w : weights) w = rng.uniform(1, 2 * static_cast<std::int64_t>(m));
  auto ord = detail::draw_categories(rng, m, categories, objectives);
  return make_instance(MatroidDesc::graphic(n, std::move(edges)), std::move(weights), std::move(ord),
                       std::vector<int>(objectives, categories));
}

/// Partition matroid on n elements (n even, n >= 6) split into three blocks
/// of near-equal size, with capacities summing to n/2. Capacities are drawn
/// uniformly per block and rejected until the sum fits (up to 1000 tries),
/// then fall back to a near-equal split. Weights uniform in 1..10n.
inline Instance gen_partition(int n, int categories, std::uint64_t seed, int objectives = 1) {
  if (n < 6 || n % 2 != 0) throw InputError("gen_partition: n must be even and >= 6");
  if (static_cast<std::size_t>(n) > kMaxGroundSize) throw InputError("gen_partition: n exceeds the ground-set limit");
  if (categories < 1 || objectives < 1) throw InputError("gen_partition: need K >= 1 and p >= 1");

  Rng rng(seed);
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  constexpr int kBlocks = 3;
  std::vector<std::vector<Element>> blocks(kBlocks);
  for (int i = 0, pos = 0; i < kBlocks; ++i) {
    const int size = n / kBlocks + (i < n % kBlocks ? 1 : 0);
    blocks[i].assign(perm.begin() + pos, perm.begin() + pos + size);
    std::ranges::sort(blocks[i]);
    pos += size;
  }

  const int target = n / 2;
  std::vector<int> caps(kBlocks);
  bool found = false;
  for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
    int sum = 0;
    for (int i = 0; i < kBlocks; ++i) {
      caps[i] = static_cast<int>(rng.uniform(0, static_cast<std::int64_t>(blocks[i].size())));
      sum += caps[i];
    }
    found = sum == target;
  }
  if (!found) {
    for (int i = 0; i < kBlocks; ++i) caps[i] = target / kBlocks + (i < target % kBlocks ? 1 : 0);
  }

  std::vector<std::int64_t> weights(n);
  for (auto& w : weights) w = rng.uniform(1, 10 * static_cast<std::int64_t>(n));
  auto ord = detail::draw_categories(rng, n, categories, objectives);
  return make_instance(MatroidDesc::partition(std::move(blocks), std::move(caps)), std::move(weights),
                       std::move(ord), std::vector<int>(objectives, categories));
}

}  // namespace ordmat

#endif  // ORDMAT_GENERATORS_HPP
