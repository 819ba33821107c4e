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

#ifndef ORDMAT_MIOC_HPP
#define ORDMAT_MIOC_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "ordmat/errors.hpp"
#include "ordmat/instance.hpp"
#include "ordmat/intersection.hpp"
#include "ordmat/ordinal.hpp"

namespace ordmat {

struct SolveOptions {
  std::uint64_t max_scalarizations = 1'000'000;
  // Worker threads for the independent bound loops of mioc / mioc_improved.
  unsigned threads = 1;
};

struct SolveResult {
  std::vector<OutcomePoint> points;
  // Matroid intersection subproblems actually solved.
  std::uint64_t scalarizations = 0;
  // mioc_multi: number of per-objective bound combinations visited.
  std::uint64_t bound_combinations = 0;
  // mioc_lexmin / mioc_lexmax: counting vectors of accepted incumbents
  // (c^min resp. c^max), in acceptance order.
  std::vector<std::vector<int>> incumbents;
};

namespace detail {

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}

  void charge(std::uint64_t n = 1) {
    count_ += n;
    if (count_ > cap_) {
      throw ResourceError("scalarization cap of " + std::to_string(cap_) + " exceeded");
    }
  }
  std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
};

inline void require_single_objective(const Instance& inst, const char* who) {
  inst.validate();
  if (inst.objectives() != 1) {
    throw InputError(std::string(who) + ": expects exactly one ordinal objective; use mioc_multi");
  }
}

inline int require_rank(const Scalarizer& s, const char* who) {
  if (s.rank() == 0) throw InstanceError(std::string(who) + ": matroid has rank 0");
  return s.rank();
}

inline std::vector<int> counts_of(const Instance& inst, const ElementSet& set) {
  return counting_of(ordinal_of(inst, set), inst.num_categories[0], Orientation::cmax).counts;
}

// Solves every bound in `bounds`, in parallel when requested, and returns
// the full-rank outcomes in bound order.
inline std::vector<OutcomePoint> solve_all(const Scalarizer& s,
                                           const std::vector<BoundVector>& bounds,
                                           unsigned threads) {
  std::vector<std::optional<MIResult>> solved(bounds.size());
  if (threads <= 1 || bounds.size() < 2) {
    for (std::size_t i = 0; i < bounds.size(); ++i) solved[i] = s.solve(bounds[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = next++; i < bounds.size(); i = next++) {
              solved[i] = s.solve(bounds[i]);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<OutcomePoint> out;
  for (auto& mi : solved) {
    if (mi) out.push_back(outcome_of(s.instance(), std::move(mi->set)));
  }
  return out;
}

// Cached subproblem results keyed by bound vector. A bound whose region is
// contained in an already solved region reuses that answer when the stored
// optimum lies inside the smaller region (or the larger one was infeasible).
class BoundCache {
 public:
  using Result = std::optional<OutcomePoint>;

  // `contains(a, b)`: region(a) ⊇ region(b); `inside(p, b)`: p in region(b).
  template <typename Contains, typename Inside>
  const Result* find(const std::vector<int>& bound, Contains contains, Inside inside) const {
    if (auto it = cache_.find(bound); it != cache_.end()) return &it->second;
    for (const auto& [key, result] : cache_) {
      if (!contains(key, bound)) continue;
      if (!result || inside(*result, bound)) return &result;
    }
    return nullptr;
  }

  const Result& store(std::vector<int> bound, Result r) {
    return cache_.emplace(std::move(bound), std::move(r)).first->second;
  }

 private:
  std::map<std::vector<int>, Result> cache_;
};

inline bool componentwise_ge(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace detail

/// Solves the category-bounded subproblem for every suitable bound vector
/// and filters the collected bases under the combined ordering.
inline SolveResult mioc(const Instance& inst, const SolveOptions& opts = {}) {
  detail::require_single_objective(inst, "mioc");
  const Scalarizer s(inst);
  const int r = detail::require_rank(s, "mioc");
  const int K = inst.num_categories[0];

  const auto bounds = enumerate_suitable_bounds(r, K);
  detail::Budget budget(opts.max_scalarizations);
  budget.charge(bounds.size());

  SolveResult res;
  res.scalarizations = budget.count();
  res.points = filter_nondominated(detail::solve_all(s, bounds, opts.threads),
                                   FilterMode::ordinal, K);
  return res;
}

/// mioc with the w-minimal basis B* computed first under the complete
/// relaxation u = (r, ..., r); only bounds with (u_K, ..., u_1) <=_lex
/// c^min(B*) are solved afterwards. The bound equal to c(B*) is answered
/// by B* itself.
inline SolveResult mioc_improved(const Instance& inst, const SolveOptions& opts = {}) {
  detail::require_single_objective(inst, "mioc_improved");
  const Scalarizer s(inst);
  const int r = detail::require_rank(s, "mioc_improved");
  const int K = inst.num_categories[0];

  detail::Budget budget(opts.max_scalarizations);
  budget.charge();
  auto first = s.solve(BoundVector{std::vector<int>(K, r)});
  if (!first) throw std::logic_error("mioc_improved: complete relaxation infeasible");
  OutcomePoint best = outcome_of(inst, std::move(first->set));
  const std::vector<int> counts = detail::counts_of(inst, best.witness);
  const std::vector<int> cmin = reversed(counts);

  std::vector<BoundVector> bounds;
  for (auto& u : enumerate_suitable_bounds(r, K)) {
    if (u.u == counts) continue;
    if (lex_compare(reversed(u.u), cmin) == LexOrder::greater) continue;
    bounds.push_back(std::move(u));
  }
  budget.charge(bounds.size());

  std::vector<OutcomePoint> found{best};
  for (auto& p : detail::solve_all(s, bounds, opts.threads)) found.push_back(std::move(p));

  SolveResult res;
  res.scalarizations = budget.count();
  res.points = filter_nondominated(found, FilterMode::ordinal, K);
  return res;
}

/// Non-dominated set of (w, lexmin c^min). Starting from the w-minimal
/// basis, each round solves the child bounds
///   (c_1 - 1, r, ..., r), (c_1, c_2 - 1, r, ..., r), ...
/// (in c^min layout) of the incumbent c = c^min, whose regions together
/// are exactly {x <_lex c}; the best child answer (min w, then lex-min
/// c^min) becomes the next incumbent.
inline SolveResult mioc_lexmin(const Instance& inst, const SolveOptions& opts = {}) {
  detail::require_single_objective(inst, "mioc_lexmin");
  const Scalarizer s(inst);
  const int r = detail::require_rank(s, "mioc_lexmin");
  const int K = inst.num_categories[0];

  detail::Budget budget(opts.max_scalarizations);
  budget.charge();
  auto first = s.solve(BoundVector{std::vector<int>(K, r)});
  if (!first) throw std::logic_error("mioc_lexmin: complete relaxation infeasible");

  SolveResult res;
  std::vector<OutcomePoint> found{outcome_of(inst, std::move(first->set))};
  auto cmin_of = [&](const OutcomePoint& p) { return reversed(detail::counts_of(inst, p.witness)); };

  detail::BoundCache cache;
  auto contains = [](const std::vector<int>& a, const std::vector<int>& b) {
    return detail::componentwise_ge(a, b);
  };
  auto inside = [&](const OutcomePoint& p, const std::vector<int>& u) {
    return detail::componentwise_ge(u, detail::counts_of(inst, p.witness));
  };

  std::vector<int> incumbent = cmin_of(found.front());
  res.incumbents.push_back(incumbent);
  while (true) {
    std::optional<OutcomePoint> next;
    std::vector<int> next_cmin;
    for (int j = 0; j + 1 < K; ++j) {
      if (incumbent[j] == 0) continue;
      std::vector<int> child(K, r);
      std::copy_n(incumbent.begin(), j, child.begin());
      child[j] = incumbent[j] - 1;
      std::vector<int> u = reversed(child);

      const detail::BoundCache::Result* hit = cache.find(u, contains, inside);
      if (hit == nullptr) {
        budget.charge();
        auto mi = s.solve(BoundVector{u});
        detail::BoundCache::Result r_opt;
        if (mi) r_opt = outcome_of(inst, std::move(mi->set));
        hit = &cache.store(u, std::move(r_opt));
      }
      if (!*hit) continue;
      const OutcomePoint& cand = **hit;
      std::vector<int> cand_cmin = cmin_of(cand);
      if (!next || cand.w < next->w || (cand.w == next->w && cand_cmin < next_cmin)) {
        next = cand;
        next_cmin = std::move(cand_cmin);
      }
    }
    if (!next) break;
    found.push_back(*next);
    incumbent = std::move(next_cmin);
    res.incumbents.push_back(incumbent);
  }

  res.scalarizations = budget.count();
  res.points = filter_nondominated(found, FilterMode::lexmin, K);
  return res;
}

/// Mirror of mioc_lexmin for (w, lexmax c^max). The region {x >_lex c} is
/// covered by prefix lower bounds
///   x_1 + ... + x_l >= c_1 + ... + c_l  (l <= j),  x_1 + ... + x_{j+1} >= c_1 + ... + c_{j+1} + 1,
/// which are upper bounds on nested suffixes of the category order, i.e.
/// a laminar matroid rather than a partition matroid.
inline SolveResult mioc_lexmax(const Instance& inst, const SolveOptions& opts = {}) {
  detail::require_single_objective(inst, "mioc_lexmax");
  const Scalarizer s(inst);
  const int r = detail::require_rank(s, "mioc_lexmax");
  const int K = inst.num_categories[0];

  detail::Budget budget(opts.max_scalarizations);
  budget.charge();
  auto first = s.solve(BoundVector{std::vector<int>(K, r)});
  if (!first) throw std::logic_error("mioc_lexmax: complete relaxation infeasible");

  SolveResult res;
  std::vector<OutcomePoint> found{outcome_of(inst, std::move(first->set))};
  auto cmax_of = [&](const OutcomePoint& p) { return detail::counts_of(inst, p.witness); };

  // caps[t]: at most caps[t] elements from categories t+1..K (0-based t).
  auto suffix_counts = [&](const std::vector<int>& counts) {
    std::vector<int> suffix(K, 0);
    int acc = 0;
    for (int t = K - 1; t >= 0; --t) {
      acc += counts[t];
      suffix[t] = acc;
    }
    return suffix;
  };

  detail::BoundCache cache;
  auto contains = [](const std::vector<int>& a, const std::vector<int>& b) {
    return detail::componentwise_ge(a, b);
  };
  auto inside = [&](const OutcomePoint& p, const std::vector<int>& caps) {
    return detail::componentwise_ge(caps, suffix_counts(cmax_of(p)));
  };

  std::vector<int> incumbent = cmax_of(found.front());
  res.incumbents.push_back(incumbent);
  while (true) {
    std::optional<OutcomePoint> next;
    std::vector<int> next_cmax;
    const std::vector<int> inc_suffix = suffix_counts(incumbent);
    for (int j = 0; j + 1 < K; ++j) {
      // Categories 1..j unchanged in prefix sum, category j+1 strictly more.
      if (inc_suffix[j + 1] == 0) continue;
      std::vector<int> caps(K);
      caps[0] = r;
      for (int t = 1; t <= j; ++t) caps[t] = inc_suffix[t];
      for (int t = j + 1; t < K; ++t) caps[t] = inc_suffix[j + 1] - 1;

      const detail::BoundCache::Result* hit = cache.find(caps, contains, inside);
      if (hit == nullptr) {
        budget.charge();
        auto mi = s.solve_suffix_caps(caps);
        detail::BoundCache::Result r_opt;
        if (mi) r_opt = outcome_of(inst, std::move(mi->set));
        hit = &cache.store(caps, std::move(r_opt));
      }
      if (!*hit) continue;
      const OutcomePoint& cand = **hit;
      std::vector<int> cand_cmax = cmax_of(cand);
      if (!next || cand.w < next->w || (cand.w == next->w && cand_cmax > next_cmax)) {
        next = cand;
        next_cmax = std::move(cand_cmax);
      }
    }
    if (!next) break;
    found.push_back(*next);
    incumbent = std::move(next_cmax);
    res.incumbents.push_back(incumbent);
  }

  res.scalarizations = budget.count();
  res.points = filter_nondominated(found, FilterMode::lexmax, K);
  return res;
}

/// Several ordinal objectives. Elements are grouped into joint cells by
/// their category tuple; for every combination of per-objective suitable
/// bounds, each cell-count table with those marginals defines a partition
/// matroid on the cells, intersected with the instance matroid. Results are
/// filtered under the combined ordering (w, o^1, ..., o^p).
inline SolveResult mioc_multi(const Instance& inst, const SolveOptions& opts = {}) {
  inst.validate();
  const int p = inst.objectives();
  const Scalarizer s(inst);
  const int r = detail::require_rank(s, "mioc_multi");
  const int n = inst.ground_size();

  // Joint cells, numbered in order of first appearance.
  std::map<std::vector<int>, int> cell_index;
  std::vector<std::vector<int>> cell_cats;
  std::vector<int> cell_size;
  std::vector<int> label(n);
  for (Element e = 0; e < n; ++e) {
    std::vector<int> key(p);
    for (int i = 0; i < p; ++i) key[i] = inst.category(i, e) - 1;
    auto [it, inserted] = cell_index.emplace(key, static_cast<int>(cell_cats.size()));
    if (inserted) {
      cell_cats.push_back(key);
      cell_size.push_back(0);
    }
    label[e] = it->second;
    ++cell_size[it->second];
  }
  const int cells = static_cast<int>(cell_cats.size());

  std::vector<std::vector<BoundVector>> per_objective;
  for (int i = 0; i < p; ++i) {
    per_objective.push_back(enumerate_suitable_bounds(r, inst.num_categories[i]));
  }

  detail::Budget budget(opts.max_scalarizations);
  SolveResult res;
  std::vector<OutcomePoint> found;
  std::vector<int> table(cells, 0);
  std::vector<std::vector<int>> remaining(p);

  auto fill = [&](auto&& self, int c) -> void {
    if (c == cells) {
      for (const auto& rem : remaining) {
        for (int v : rem) {
          if (v != 0) return;
        }
      }
      budget.charge();
      if (auto mi = s.solve_with(partition_by_label(label, table))) {
        found.push_back(outcome_of(inst, std::move(mi->set)));
      }
      return;
    }
    int hi = cell_size[c];
    for (int i = 0; i < p; ++i) hi = std::min(hi, remaining[i][cell_cats[c][i]]);
    for (int v = hi; v >= 0; --v) {
      table[c] = v;
      for (int i = 0; i < p; ++i) remaining[i][cell_cats[c][i]] -= v;
      self(self, c + 1);
      for (int i = 0; i < p; ++i) remaining[i][cell_cats[c][i]] += v;
    }
    table[c] = 0;
  };

  std::vector<std::size_t> pick(p, 0);
  while (true) {
    ++res.bound_combinations;
    for (int i = 0; i < p; ++i) remaining[i] = per_objective[i][pick[i]].u;
    fill(fill, 0);
    int i = p - 1;
    while (i >= 0 && ++pick[i] == per_objective[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }

  res.scalarizations = budget.count();
  res.points = filter_nondominated(found, FilterMode::ordinal, inst.num_categories[0]);
  return res;
}

}  // namespace ordmat

#endif  // ORDMAT_MIOC_HPP
