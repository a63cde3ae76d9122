#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "wcn/error.hpp"
#include "wcn/folding.hpp"

using namespace wcn;

TEST(Folding, Validity) {
  EXPECT_TRUE(is_valid_folding(parse_word("x0 X0"), {{{1, 2}}}));
  EXPECT_FALSE(is_valid_folding(parse_word("x0 x1 X0 X1"), {{{1, 3}, {2, 4}}}));
  EXPECT_FALSE(is_valid_folding(parse_word("x0 x0"), {{{1, 2}}}));
  EXPECT_FALSE(is_valid_folding(parse_word("x0 X0 x0"), {{{1, 2}, {2, 3}}}));
  EXPECT_THROW(is_valid_folding(parse_word("x0 X0"), {{{1, 3}}}), DomainError);
  EXPECT_THROW(is_valid_folding(parse_word("x0 X0"), {{{0, 2}}}), DomainError);
}

TEST(Folding, Cost) {
  const WeightTable unit = WeightTable::unit();
  EXPECT_DOUBLE_EQ(folding_cost(parse_word("x0 x1 X0"), unit, {{{1, 3}}}), 1.0);
  EXPECT_DOUBLE_EQ(folding_cost(parse_word("x0 x1 x2 X0 X1 X2"), unit, {}), 6.0);
  EXPECT_THROW(folding_cost(parse_word("x0 x0"), unit, {{{1, 2}}}), DomainError);
}

TEST(Folding, Linked) {
  EXPECT_TRUE(linked({1, 3}, {2, 4}));
  EXPECT_TRUE(linked({2, 4}, {1, 3}));
  EXPECT_FALSE(linked({1, 4}, {2, 3}));
  EXPECT_FALSE(linked({1, 2}, {3, 4}));
}

TEST(Folding, EnumerationIsCompleteAndValid) {
  // Count every valid pair set by brute force over subsets and compare.
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    Word w = oracle::random_word(rng, 1 + t % 8, 2);
    std::set<std::vector<FoldPair>> seen;
    for_each_folding(w, [&](const Folding& f) {
      EXPECT_TRUE(is_valid_folding(w, f));
      Folding g = f;
      g.normalize();
      EXPECT_TRUE(seen.insert(g.pairs).second);
    });
    std::vector<FoldPair> all;
    for (std::size_t i = 1; i <= w.size(); ++i) {
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        if (w[i - 1] == w[j - 1].inverse()) all.push_back({i, j});
      }
    }
    std::size_t count = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
      Folding f;
      for (std::size_t b = 0; b < all.size(); ++b) {
        if (mask >> b & 1) f.pairs.push_back(all[b]);
      }
      if (is_valid_folding(w, f)) ++count;
    }
    EXPECT_EQ(seen.size(), count);
  }
}

TEST(Folding, ReductionTraceLiftsCostPreserving) {
  const WeightTable unit = WeightTable::unit();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    Word w = oracle::random_word(rng, t % 20, 2);
    ReductionTrace tr = reduce_with_trace(w);
    EXPECT_EQ(tr.reduced, free_reduce(w));
    EXPECT_EQ(tr.kept.size(), tr.reduced.size());
    Folding lifted = lift_folding(tr, {});
    EXPECT_TRUE(is_valid_folding(w, lifted));
    EXPECT_DOUBLE_EQ(folding_cost(w, unit, lifted), static_cast<double>(tr.reduced.size()));
  }
}
