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

#ifndef ORDMAT_GREEDY_HPP
#define ORDMAT_GREEDY_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "ordmat/errors.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/matroid.hpp"
#include "ordmat/ordinal.hpp"

namespace ordmat {

namespace detail {

template <typename Key>
std::vector<Element> order_by(int n, Key key) {
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return key(a) < key(b); });
  return order;
}

}  // namespace detail

/// Greedy on ascending category (ties by id). Its ordinal vector is the
/// unique ordinally non-dominated one; the same basis is lex-optimal for
/// both c^min and c^max.
inline OutcomePoint greedy_ordinal_basis(const Instance& inst, int objective = 0) {
  if (objective < 0 || objective >= inst.objectives()) {
    throw InputError("greedy_ordinal_basis: objective index out of range");
  }
  const auto order = detail::order_by(inst.ground_size(), [&](Element e) {
    return inst.category(objective, e);
  });
  ElementSet basis = extend_greedily(inst.matroid, ElementSet{}, order);
  if (basis.empty()) {
    throw InstanceError("greedy_ordinal_basis: matroid has rank 0");
  }
  return outcome_of(inst, std::move(basis));
}

/// Minimum-weight basis by greedy on ascending weight (ties by id).
inline OutcomePoint min_weight_basis(const Instance& inst) {
  const auto order = detail::order_by(inst.ground_size(),
                                      [&](Element e) { return inst.weights[e]; });
  return outcome_of(inst, extend_greedily(inst.matroid, ElementSet{}, order));
}

}  // namespace ordmat

#endif  // ORDMAT_GREEDY_HPP
