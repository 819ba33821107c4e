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

#ifndef ORDMAT_ELEMENT_SET_HPP
#define ORDMAT_ELEMENT_SET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "ordmat/errors.hpp"

namespace ordmat {

/// Dense 0-based index into a ground set.
using Element = std::int32_t;

/// Largest supported ground set.
inline constexpr std::size_t kMaxGroundSize = std::size_t{1} << 16;

/// A subset of the ground set, stored as strictly increasing ids.
class ElementSet {
 public:
  ElementSet() = default;

  /// Sorts the input; duplicates or negative ids are rejected.
  explicit ElementSet(std::vector<Element> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    if (!members_.empty() && members_.front() < 0) {
      throw InputError("ElementSet: negative element id");
    }
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw InputError("ElementSet: duplicate element id");
    }
  }

  ElementSet(std::initializer_list<Element> ids)
      : ElementSet(std::vector<Element>(ids)) {}

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Element operator[](std::size_t i) const { return members_[i]; }
  std::span<const Element> members() const noexcept { return members_; }

  bool contains(Element e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
  }

  ElementSet with(Element e) const {
    ElementSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), e);
    if (it == out.members_.end() || *it != e) out.members_.insert(it, e);
    return out;
  }

  ElementSet without(Element e) const {
    ElementSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), e);
    if (it != out.members_.end() && *it == e) out.members_.erase(it);
    return out;
  }

  /// Elements of *this that are not in `other`.
  ElementSet minus(const ElementSet& other) const {
    ElementSet out;
    std::set_difference(members_.begin(), members_.end(), other.begin(),
                        other.end(), std::back_inserter(out.members_));
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    return os << '}';
  }

 private:
  std::vector<Element> members_;
};

}  // namespace ordmat

#endif  // ORDMAT_ELEMENT_SET_HPP
