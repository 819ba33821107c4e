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

#ifndef ORDMAT_INSTANCE_HPP
#define ORDMAT_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ordmat/errors.hpp"
#include "ordmat/matroid.hpp"

namespace ordmat {

/// A matroid with one sum objective and p >= 1 ordinal objectives.
/// Categories are 1..K_i with 1 the best.
struct Instance {
  MatroidDesc matroid;
  std::vector<std::int64_t> weights;
  std::vector<std::vector<int>> ordinal;  // ordinal[i][e]
  std::vector<int> num_categories;        // K_i

  int ground_size() const noexcept { return matroid.ground_size(); }
  int objectives() const noexcept { return static_cast<int>(ordinal.size()); }
  int category(int objective, Element e) const { return ordinal[objective][e]; }

  void validate() const {
    const auto n = static_cast<std::size_t>(ground_size());
    if (weights.size() != n) throw InputError("instance: weights length differs from |E|");
    for (auto w : weights) {
      if (w < 0) throw InputError("instance: weights must be non-negative");
    }
    if (ordinal.empty()) throw InputError("instance: at least one ordinal objective required");
    if (ordinal.size() != num_categories.size()) {
      throw InputError("instance: num_categories length differs from objective count");
    }
    for (std::size_t i = 0; i < ordinal.size(); ++i) {
      if (num_categories[i] < 1) throw InputError("instance: K must be >= 1");
      if (ordinal[i].size() != n) {
        throw InputError("instance: ordinal objective " + std::to_string(i) +
                         " length differs from |E|");
      }
      for (int c : ordinal[i]) {
        if (c < 1 || c > num_categories[i]) {
          throw InputError("instance: category outside 1..K");
        }
      }
    }
  }
};

inline Instance make_instance(MatroidDesc matroid, std::vector<std::int64_t> weights,
                              std::vector<std::vector<int>> ordinal,
                              std::vector<int> num_categories) {
  Instance inst{std::move(matroid), std::move(weights), std::move(ordinal),
                std::move(num_categories)};
  inst.validate();
  return inst;
}

inline std::int64_t weight_of(const Instance& inst, const ElementSet& s) {
  std::int64_t total = 0;
  for (Element e : s) total += inst.weights[e];
  return total;
}

}  // namespace ordmat

#endif  // ORDMAT_INSTANCE_HPP
