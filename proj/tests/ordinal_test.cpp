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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ordmat/ordinal.hpp"

namespace {

using namespace ordmat;

OutcomePoint point(std::int64_t w, std::vector<int> o) {
  OutcomePoint p;
  p.w = w;
  p.ord.push_back(OrdinalVector{std::move(o)});
  return p;
}

std::vector<OutcomePoint> all_bases_points() {
  const auto inst = fixtures::all_bases_instance();
  std::vector<OutcomePoint> pts;
  for (const auto& b : fixtures::all_bases_table()) pts.push_back(outcome_of(inst, b.set));
  return pts;
}

std::set<fixtures::NaiveOutcome> outcomes_of(std::initializer_list<int> basis_numbers) {
  const auto inst = fixtures::all_bases_instance();
  const auto table = fixtures::all_bases_table();
  std::set<fixtures::NaiveOutcome> s;
  for (int k : basis_numbers) s.insert(fixtures::to_naive(outcome_of(inst, table[k - 1].set)));
  return s;
}

TEST(OrdinalOf, SortedCategories) {
  const auto inst = fixtures::all_bases_instance();
  EXPECT_EQ(ordinal_of(inst, ElementSet{1, 2, 3, 4, 5}).cats, (std::vector<int>{2, 2, 2, 3, 3}));
  EXPECT_EQ(ordinal_of(inst, ElementSet{0, 2, 3, 4, 6}).cats, (std::vector<int>{1, 1, 2, 2, 2}));
  EXPECT_EQ(ordinal_of(inst, ElementSet{0}).cats, (std::vector<int>{1}));
}

TEST(CountingOf, BothOrientations) {
  const OrdinalVector o{{2, 2, 2, 3, 3}};
  EXPECT_EQ(counting_of(o, 3, Orientation::cmax).counts, (std::vector<int>{0, 3, 2}));
  EXPECT_EQ(counting_of(o, 3, Orientation::cmin).counts, (std::vector<int>{2, 3, 0}));
  EXPECT_EQ(counting_of(OrdinalVector{{1, 1, 1, 1}}, 3, Orientation::cmax).counts,
            (std::vector<int>{4, 0, 0}));
  EXPECT_THROW(counting_of(OrdinalVector{{4}}, 3, Orientation::cmax), InputError);
}

TEST(CountingOf, TableValuesForAllBases) {
  const auto inst = fixtures::all_bases_instance();
  for (const auto& b : fixtures::all_bases_table()) {
    const auto o = ordinal_of(inst, b.set);
    EXPECT_EQ(o.cats, b.o) << b.name;
    EXPECT_EQ(counting_of(o, 3, Orientation::cmin).counts, b.cmin) << b.name;
    EXPECT_EQ(counting_of(o, 3, Orientation::cmax).counts, b.cmax) << b.name;
    EXPECT_EQ(weight_of(inst, b.set), b.w) << b.name;
  }
}

TEST(Compare, Pareto) {
  EXPECT_EQ(pareto_compare(std::vector{1, 2}, std::vector{1, 3}), Dominance::dominates);
  EXPECT_EQ(pareto_compare(std::vector{1, 3}, std::vector{1, 2}), Dominance::dominated);
  EXPECT_EQ(pareto_compare(std::vector{1, 2}, std::vector{1, 2}), Dominance::equal);
  EXPECT_EQ(pareto_compare(std::vector{1, 3}, std::vector{2, 2}), Dominance::incomparable);
  EXPECT_THROW(pareto_compare(std::vector{1}, std::vector{1, 2}), InputError);
}

TEST(Compare, Lex) {
  EXPECT_EQ(lex_compare(std::vector{1, 3, 1}, std::vector{2, 1, 2}), LexOrder::less);
  EXPECT_EQ(lex_compare(std::vector{2, 1, 2}, std::vector{1, 3, 1}), LexOrder::greater);
  EXPECT_EQ(lex_compare(std::vector{4, 4}, std::vector{4, 4}), LexOrder::equal);
  EXPECT_THROW(lex_compare(std::vector{1}, std::vector<int>{}), InputError);
}

TEST(Compare, OrdinalIncludingIncomparableTrees) {
  EXPECT_EQ(ordinal_compare(OrdinalVector{{1, 2, 2, 2, 3}}, OrdinalVector{{1, 1, 2, 3, 3}}),
            Dominance::incomparable);
  EXPECT_EQ(ordinal_compare(OrdinalVector{{1, 1, 2}}, OrdinalVector{{1, 2, 2}}), Dominance::dominates);
  EXPECT_EQ(ordinal_compare(OrdinalVector{{1, 2, 3}}, OrdinalVector{{1, 2, 3}}), Dominance::equal);
}

TEST(Compare, Combined) {
  const auto pts = all_bases_points();
  EXPECT_TRUE(combined_dominates(pts[1], pts[2]));   // B2 over B3
  EXPECT_FALSE(combined_dominates(pts[2], pts[1]));
  EXPECT_FALSE(combined_dominates(pts[0], pts[0]));
  EXPECT_FALSE(combined_dominates(pts[0], pts[8]));  // B1 vs B9
  EXPECT_FALSE(combined_dominates(pts[8], pts[0]));
}

TEST(Bounds, EpsRoundTrip) {
  EXPECT_EQ(eps_to_u(OrdinalVector{{1, 1, 2, 2, 2}}, 3).u, (std::vector<int>{2, 3, 0}));
  EXPECT_EQ(u_to_eps(BoundVector{{4, 0, 0}}).cats, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_THROW(eps_to_u(OrdinalVector{{2, 1}}, 3), InputError);
  for (int r = 0; r <= 6; ++r) {
    for (int K = 1; K <= 4; ++K) {
      for (const auto& u : enumerate_suitable_bounds(r, K)) {
        ASSERT_EQ(eps_to_u(u_to_eps(u), K).u, u.u);
      }
    }
  }
}

TEST(Bounds, EnumerationCountOrderAndSums) {
  EXPECT_EQ(enumerate_suitable_bounds(6, 3).size(), 28u);
  EXPECT_EQ(enumerate_suitable_bounds(9, 5).size(), 715u);
  const auto single = enumerate_suitable_bounds(4, 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].u, std::vector<int>{4});
  for (int r = 0; r <= 7; ++r) {
    for (int K = 1; K <= 5; ++K) {
      const auto all = enumerate_suitable_bounds(r, K);
      ASSERT_EQ(all.size(), fixtures::binomial(r + K - 1, K - 1));
      ASSERT_EQ(all.size(), occupancy_number(r, K));
      std::set<std::vector<int>> seen;
      for (std::size_t i = 0; i < all.size(); ++i) {
        ASSERT_TRUE(is_suitable(all[i], r));
        ASSERT_TRUE(seen.insert(all[i].u).second);
        if (i > 0) {
          ASSERT_LT(reversed(all[i - 1].u), reversed(all[i].u));
        }
      }
    }
  }
}

TEST(Bounds, RelaxedAndSuitable) {
  EXPECT_TRUE(is_relaxed_bound(BoundVector{{5, 5, 5}}, 5));
  EXPECT_FALSE(is_relaxed_bound(BoundVector{{6, 0, 0}}, 5));
  EXPECT_FALSE(is_relaxed_bound(BoundVector{{1, 1, 1}}, 5));
  EXPECT_TRUE(is_suitable(BoundVector{{2, 3, 0}}, 5));
  EXPECT_FALSE(is_suitable(BoundVector{{2, 3, 1}}, 5));
}

TEST(Filter, AllBasesOrdinal) {
  const auto nd = filter_nondominated(all_bases_points(), FilterMode::ordinal, 3);
  EXPECT_EQ(fixtures::outcome_set(nd), outcomes_of({1, 2, 4, 5, 6, 7, 9}));
  EXPECT_EQ(nd.size(), 6u);  // B4 and B5 share one outcome
}

TEST(Filter, AllBasesLexmin) {
  const auto nd = filter_nondominated(all_bases_points(), FilterMode::lexmin, 3);
  EXPECT_EQ(fixtures::outcome_set(nd), outcomes_of({1, 2, 4, 5, 7, 9}));
}

TEST(Filter, AllBasesLexmax) {
  const auto nd = filter_nondominated(all_bases_points(), FilterMode::lexmax, 3);
  EXPECT_EQ(fixtures::outcome_set(nd), outcomes_of({1, 2, 6, 7, 9}));
}

TEST(Filter, KeepsFirstWitness) {
  const auto inst = fixtures::all_bases_instance();
  const auto table = fixtures::all_bases_table();
  std::vector<OutcomePoint> pts{outcome_of(inst, table[4].set), outcome_of(inst, table[3].set)};
  const auto nd = filter_nondominated(pts, FilterMode::ordinal, 3);
  ASSERT_EQ(nd.size(), 1u);
  EXPECT_EQ(nd[0].witness, table[4].set);
}

TEST(Filter, AntichainAndCoverageOnRandomPoints) {
  fixtures::SmallRandom rnd(11);
  for (int t = 0; t < 200; ++t) {
    const int r = rnd.pick(1, 5), K = rnd.pick(1, 4);
    std::vector<OutcomePoint> pts;
    for (int i = 0; i < rnd.pick(1, 30); ++i) {
      std::vector<int> o(r);
      for (int& c : o) c = rnd.pick(1, K);
      std::sort(o.begin(), o.end());
      pts.push_back(point(rnd.pick(0, 8), o));
    }
    for (auto mode : {FilterMode::ordinal, FilterMode::lexmin, FilterMode::lexmax}) {
      const auto nd = filter_nondominated(pts, mode, K);
      const auto naive_mode = mode == FilterMode::ordinal  ? fixtures::NaiveMode::ordinal
                              : mode == FilterMode::lexmin ? fixtures::NaiveMode::lexmin
                                                           : fixtures::NaiveMode::lexmax;
      std::set<fixtures::NaiveOutcome> expect;
      for (const auto& x : pts) {
        bool dom = false;
        for (const auto& y : pts) {
          dom = dom || fixtures::naive_dominates(fixtures::to_naive(y), fixtures::to_naive(x), K, naive_mode);
        }
        if (!dom) expect.insert(fixtures::to_naive(x));
      }
      ASSERT_EQ(fixtures::outcome_set(nd), expect);
      ASSERT_EQ(nd.size(), expect.size());
    }
  }
}

TEST(DominanceImpliesLex, RandomPairsAndCounterexample) {
  fixtures::SmallRandom rnd(12);
  int checked = 0;
  for (int t = 0; t < 5000; ++t) {
    const int r = rnd.pick(1, 10), K = rnd.pick(1, 5);
    std::vector<int> a(r), b(r);
    for (int& c : a) c = rnd.pick(1, K);
    std::sort(a.begin(), a.end());
    // Bias towards dominated pairs: b is a worsened copy of a.
    for (int i = 0; i < r; ++i) b[i] = std::min(K, a[i] + rnd.pick(0, 1));
    std::sort(b.begin(), b.end());
    if (ordinal_compare(OrdinalVector{a}, OrdinalVector{b}) != Dominance::dominates) continue;
    ++checked;
    ASSERT_EQ(lex_compare(counting_of(OrdinalVector{a}, K, Orientation::cmin).counts,
                          counting_of(OrdinalVector{b}, K, Orientation::cmin).counts),
              LexOrder::less);
    ASSERT_EQ(lex_compare(counting_of(OrdinalVector{a}, K, Orientation::cmax).counts,
                          counting_of(OrdinalVector{b}, K, Orientation::cmax).counts),
              LexOrder::greater);
  }
  EXPECT_GT(checked, 1000);
  // Lex-better in both orientations without ordinal dominance.
  const OrdinalVector b4{{1, 2, 2, 2, 3}}, b6{{1, 1, 2, 3, 3}};
  EXPECT_EQ(lex_compare(counting_of(b4, 3, Orientation::cmin).counts,
                        counting_of(b6, 3, Orientation::cmin).counts),
            LexOrder::less);
  EXPECT_EQ(ordinal_compare(b4, b6), Dominance::incomparable);
}

}  // namespace
