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

#ifndef ORDMAT_ORDINAL_HPP
#define ORDMAT_ORDINAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <ranges>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ordmat/element_set.hpp"
#include "ordmat/errors.hpp"
#include "ordmat/instance.hpp"

namespace ordmat {

/// Sorted (non-decreasing) category profile of a set; 1 is the best category.
struct OrdinalVector {
  std::vector<int> cats;

  std::size_t size() const noexcept { return cats.size(); }
  friend bool operator==(const OrdinalVector&, const OrdinalVector&) = default;
  friend auto operator<=>(const OrdinalVector&, const OrdinalVector&) = default;
};

enum class Orientation {
  cmax,  // counts of categories 1..K (good first), lexicographically maximized
  cmin,  // counts of categories K..1 (bad first), lexicographically minimized
};

struct CountingVector {
  std::vector<int> counts;
  Orientation orientation = Orientation::cmax;

  friend bool operator==(const CountingVector&, const CountingVector&) = default;
};

/// Per-category upper bounds u_1..u_K for one scalarized subproblem.
struct BoundVector {
  std::vector<int> u;

  std::size_t size() const noexcept { return u.size(); }
  friend bool operator==(const BoundVector&, const BoundVector&) = default;
  friend auto operator<=>(const BoundVector&, const BoundVector&) = default;
};

/// Outcome of one basis: sum weight, one ordinal vector per ordinal
/// objective, and the basis itself.
struct OutcomePoint {
  std::int64_t w = 0;
  std::vector<OrdinalVector> ord;
  ElementSet witness;

  /// Equality of outcome vectors only; witnesses are ignored.
  bool same_outcome(const OutcomePoint& other) const {
    return w == other.w && ord == other.ord;
  }
};

enum class Dominance { dominates, dominated, equal, incomparable };
enum class LexOrder { less, equal, greater };
enum class FilterMode { ordinal, lexmin, lexmax };

inline std::ostream& operator<<(std::ostream& os, Dominance d) {
  switch (d) {
    case Dominance::dominates: return os << "dominates";
    case Dominance::dominated: return os << "dominated";
    case Dominance::equal: return os << "equal";
    case Dominance::incomparable: return os << "incomparable";
  }
  return os;
}

inline std::ostream& operator<<(std::ostream& os, LexOrder o) {
  switch (o) {
    case LexOrder::less: return os << "less";
    case LexOrder::equal: return os << "equal";
    case LexOrder::greater: return os << "greater";
  }
  return os;
}

inline std::ostream& operator<<(std::ostream& os, const OrdinalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v.cats[i];
  return os << ')';
}

inline OrdinalVector ordinal_of(const Instance& inst, const ElementSet& s,
                                int objective = 0) {
  OrdinalVector v;
  v.cats.reserve(s.size());
  for (Element e : s) v.cats.push_back(inst.category(objective, e));
  std::sort(v.cats.begin(), v.cats.end());
  return v;
}

inline OutcomePoint outcome_of(const Instance& inst, ElementSet basis) {
  OutcomePoint p;
  p.w = weight_of(inst, basis);
  for (int i = 0; i < inst.objectives(); ++i) p.ord.push_back(ordinal_of(inst, basis, i));
  p.witness = std::move(basis);
  return p;
}

inline CountingVector counting_of(const OrdinalVector& ov, int categories,
                                  Orientation orientation) {
  if (categories < 1) throw InputError("counting_of: K must be >= 1");
  CountingVector c{std::vector<int>(categories, 0), orientation};
  for (int cat : ov.cats) {
    if (cat < 1 || cat > categories) throw InputError("counting_of: category outside 1..K");
    ++c.counts[cat - 1];
  }
  if (orientation == Orientation::cmin) std::ranges::reverse(c.counts);
  return c;
}

namespace detail {

template <typename R1, typename R2>
void require_same_length(const R1& a, const R2& b, const char* what) {
  if (std::ranges::size(a) != std::ranges::size(b)) {
    throw InputError(std::string(what) + ": length mismatch");
  }
}

}  // namespace detail

/// Componentwise (Pareto) relation for minimization.
template <std::ranges::random_access_range R>
Dominance pareto_compare(const R& y1, const R& y2) {
  detail::require_same_length(y1, y2, "pareto_compare");
  bool le = true, ge = true;
  for (std::size_t i = 0; i < std::ranges::size(y1); ++i) {
    if (y1[i] < y2[i]) ge = false;
    if (y1[i] > y2[i]) le = false;
  }
  if (le && ge) return Dominance::equal;
  if (le) return Dominance::dominates;
  if (ge) return Dominance::dominated;
  return Dominance::incomparable;
}

template <std::ranges::random_access_range R>
LexOrder lex_compare(const R& y1, const R& y2) {
  detail::require_same_length(y1, y2, "lex_compare");
  for (std::size_t i = 0; i < std::ranges::size(y1); ++i) {
    if (y1[i] < y2[i]) return LexOrder::less;
    if (y1[i] > y2[i]) return LexOrder::greater;
  }
  return LexOrder::equal;
}

/// Ordinal dominance on sorted vectors of equal length: componentwise
/// "at least as good" with a smaller category index being better.
inline Dominance ordinal_compare(const OrdinalVector& y1, const OrdinalVector& y2) {
  return pareto_compare(y1.cats, y2.cats);
}

/// Combined ordering: Pareto on w together with ordinal dominance on every
/// ordinal objective, with at least one strict improvement.
inline bool combined_dominates(const OutcomePoint& p1, const OutcomePoint& p2) {
  if (p1.ord.size() != p2.ord.size()) throw InputError("combined_dominates: objective count mismatch");
  if (p1.w > p2.w) return false;
  bool strict = p1.w < p2.w;
  for (std::size_t i = 0; i < p1.ord.size(); ++i) {
    switch (ordinal_compare(p1.ord[i], p2.ord[i])) {
      case Dominance::dominates: strict = true; break;
      case Dominance::equal: break;
      default: return false;
    }
  }
  return strict;
}

/// A bound vector is suitable when it sums to r.
inline bool is_suitable(const BoundVector& u, int r) {
  int sum = 0;
  for (int v : u.u) {
    if (v < 0) return false;
    sum += v;
  }
  return sum == r;
}

/// Relaxed bound: entries in 0..r summing to at least r.
inline bool is_relaxed_bound(const BoundVector& u, int r) {
  int sum = 0;
  for (int v : u.u) {
    if (v < 0 || v > r) return false;
    sum += v;
  }
  return sum >= r;
}

inline BoundVector eps_to_u(const OrdinalVector& eps, int categories) {
  if (!std::ranges::is_sorted(eps.cats)) throw InputError("eps_to_u: eps must be non-decreasing");
  return BoundVector{counting_of(eps, categories, Orientation::cmax).counts};
}

inline OrdinalVector u_to_eps(const BoundVector& u) {
  OrdinalVector eps;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u.u[i] < 0) throw InputError("u_to_eps: negative count");
    eps.cats.insert(eps.cats.end(), u.u[i], static_cast<int>(i) + 1);
  }
  return eps;
}

/// C(r + K - 1, K - 1): the number of suitable bound vectors.
inline std::uint64_t occupancy_number(int r, int categories) {
  std::uint64_t result = 1;
  for (int i = 1; i <= categories - 1; ++i) {
    result = result * static_cast<std::uint64_t>(r + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

/// The bound read with the worst category first, i.e. in c^min layout.
inline std::vector<int> reversed(std::vector<int> v) {
  std::ranges::reverse(v);
  return v;
}

/// All u >= 0 with sum r, ordered lexicographically increasing in
/// (u_K, ..., u_1).
inline std::vector<BoundVector> enumerate_suitable_bounds(int r, int categories) {
  if (r < 0 || categories < 1) throw InputError("enumerate_suitable_bounds: need r >= 0 and K >= 1");
  std::vector<BoundVector> out;
  out.reserve(occupancy_number(r, categories));
  std::vector<int> rev(categories, 0);  // rev[j] = u_{K-j}
  auto fill = [&](auto&& self, int j, int left) -> void {
    if (j == categories - 1) {
      rev[j] = left;
      out.push_back(BoundVector{reversed(rev)});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      rev[j] = v;
      self(self, j + 1, left - v);
    }
  };
  fill(fill, 0, r);
  return out;
}

namespace detail {

inline std::vector<OutcomePoint> dedupe_outcomes(const std::vector<OutcomePoint>& points) {
  std::vector<OutcomePoint> unique;
  std::map<std::pair<std::int64_t, std::vector<OrdinalVector>>, bool> seen;
  for (const auto& p : points) {
    if (seen.emplace(std::make_pair(p.w, p.ord), true).second) unique.push_back(p);
  }
  return unique;
}

inline void sort_outcomes(std::vector<OutcomePoint>& points) {
  std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return std::tie(a.w, a.ord) < std::tie(b.w, b.ord);
  });
}

}  // namespace detail

/// Keeps one witness per non-dominated outcome vector (first one seen).
/// ordinal: combined ordering over w and all ordinal objectives.
/// lexmin / lexmax: w together with c^min (lex-min) / c^max (lex-max) of the
/// first ordinal objective, which has `categories` categories.
/// Output is sorted by (w, ordinal vectors).
inline std::vector<OutcomePoint> filter_nondominated(const std::vector<OutcomePoint>& points,
                                                     FilterMode mode, int categories) {
  std::vector<OutcomePoint> unique = detail::dedupe_outcomes(points);
  std::vector<OutcomePoint> kept;
  if (mode == FilterMode::ordinal) {
    for (std::size_t i = 0; i < unique.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < unique.size() && !dominated; ++j) {
        dominated = j != i && combined_dominates(unique[j], unique[i]);
      }
      if (!dominated) kept.push_back(unique[i]);
    }
    detail::sort_outcomes(kept);
    return kept;
  }

  const Orientation orient = mode == FilterMode::lexmin ? Orientation::cmin : Orientation::cmax;
  // Sort key flips c^max so that "better" is always lexicographically smaller.
  auto key = [&](const OutcomePoint& p) {
    auto c = counting_of(p.ord.at(0), categories, orient).counts;
    if (mode == FilterMode::lexmax) {
      for (int& v : c) v = -v;
    }
    return c;
  };
  std::vector<std::pair<std::vector<int>, std::size_t>> order;
  for (std::size_t i = 0; i < unique.size(); ++i) order.push_back({key(unique[i]), i});
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const auto wa = unique[a.second].w, wb = unique[b.second].w;
    return wa != wb ? wa < wb : a.first < b.first;
  });
  const std::vector<int>* best = nullptr;
  for (const auto& [k, idx] : order) {
    if (best == nullptr || k < *best) {
      kept.push_back(unique[idx]);
      best = &k;
    }
  }
  detail::sort_outcomes(kept);
  return kept;
}

}  // namespace ordmat

#endif  // ORDMAT_ORDINAL_HPP
