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

#ifndef ORDMAT_ORACLE_HPP
#define ORDMAT_ORACLE_HPP

#include <vector>

#include "ordmat/element_set.hpp"
#include "ordmat/errors.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/matroid.hpp"
#include "ordmat/ordinal.hpp"

namespace ordmat {

inline constexpr int kOracleMaxGround = 24;

/// All bases of `m`, by depth-first search over ascending element ids with
/// independence pruning. Bases come out in lexicographic order.
inline std::vector<ElementSet> enumerate_bases(const MatroidDesc& m) {
  const int n = m.ground_size();
  if (n > kOracleMaxGround) {
    throw ResourceError("enumerate_bases: |E| = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kOracleMaxGround));
  }
  const int r = rank(m);
  std::vector<ElementSet> bases;
  std::vector<Element> current;
  current.reserve(r);

  auto dfs = [&](auto&& self, Element next) -> void {
    if (static_cast<int>(current.size()) == r) {
      bases.emplace_back(current);
      return;
    }
    // Not enough elements left to reach rank.
    for (Element e = next; e + (r - static_cast<int>(current.size())) <= n; ++e) {
      current.push_back(e);
      if (is_independent(m, std::span<const Element>(current))) self(self, e + 1);
      current.pop_back();
    }
  };
  dfs(dfs, 0);
  return bases;
}

/// Non-dominated outcomes over every basis, one witness each.
inline std::vector<OutcomePoint> oracle_nd(const Instance& inst, FilterMode mode) {
  inst.validate();
  std::vector<OutcomePoint> all;
  for (auto& b : enumerate_bases(inst.matroid)) all.push_back(outcome_of(inst, std::move(b)));
  return filter_nondominated(all, mode, inst.num_categories[0]);
}

}  // namespace ordmat

#endif  // ORDMAT_ORACLE_HPP
