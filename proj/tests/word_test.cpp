#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "wcn/error.hpp"
#include "wcn/word.hpp"

using namespace wcn;

TEST(Word, ParseTokens) {
  EXPECT_EQ(parse_word("x0 x1 X0"), (Word{pos(0), pos(1), neg(0)}));
  EXPECT_TRUE(parse_word("1").empty());
  EXPECT_EQ(parse_word("x0 x1 x2 X0 X1 X2").size(), 6u);
  EXPECT_EQ(parse_word("  x12\tX3 \n"), (Word{pos(12), neg(3)}));
}

TEST(Word, ParseErrorsNameTokenAndPosition) {
  try {
    parse_word("x0 y1 X0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'y1'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos);
  }
  EXPECT_THROW(parse_word("x"), ParseError);
  EXPECT_THROW(parse_word("x-1"), ParseError);
  EXPECT_THROW(parse_word("1 x0"), ParseError);
}

TEST(Word, FormatRoundTrip) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Word w = oracle::random_word(rng, t % 9, 5);
    EXPECT_EQ(parse_word(format_word(w)), w);
  }
  EXPECT_EQ(format_word({}), "1");
}

TEST(Word, LetterInverse) {
  for (Generator g = 0; g < 5; ++g) {
    for (int s : {1, -1}) {
      Letter l(g, s);
      EXPECT_EQ(l.inverse(), Letter(g, -s));
      EXPECT_EQ(l.inverse().inverse(), l);
      EXPECT_NE(l.inverse(), l);
    }
  }
}

TEST(Word, InverseAndConcat) {
  EXPECT_EQ(inverse(Word{pos(0), pos(1)}), (Word{neg(1), neg(0)}));
  EXPECT_TRUE(inverse(Word{}).empty());
  EXPECT_EQ(concat({pos(0)}, {pos(1)}), (Word{pos(0), pos(1)}));
  EXPECT_TRUE(power({pos(0), pos(1)}, 0).empty());
  EXPECT_EQ(power({pos(0), pos(1)}, 2), (Word{pos(0), pos(1), pos(0), pos(1)}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    Word w = oracle::random_word(rng, t % 13, 3);
    EXPECT_EQ(inverse(inverse(w)), w);
    EXPECT_TRUE(free_reduce(concat(w, inverse(w))).empty());
    EXPECT_EQ(free_reduce(inverse(w)), inverse(free_reduce(w)));
  }
}

TEST(Word, FreeReduce) {
  EXPECT_TRUE(free_reduce({pos(0), neg(0)}).empty());
  EXPECT_EQ(free_reduce({pos(0), pos(1), neg(1), pos(2)}), (Word{pos(0), pos(2)}));
}

TEST(Word, FreeReduceConfluentUnderRandomOrder) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Word w = oracle::random_word(rng, 1 + t % 50, 2);
    Word v = w;
    // Cancel a random adjacent inverse pair until none is left.
    for (;;) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i + 1] == v[i].inverse()) spots.push_back(i);
      }
      if (spots.empty()) break;
      std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
      v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
    }
    EXPECT_EQ(v, free_reduce(w));
    EXPECT_EQ(free_reduce(free_reduce(w)), free_reduce(w));
  }
}

TEST(Word, CyclicReduce) {
  auto r = cyclic_reduce({pos(0), pos(1), neg(0)});
  EXPECT_EQ(r.core, (Word{pos(1)}));
  EXPECT_EQ(r.conjugator, (Word{pos(0)}));
  auto id = cyclic_reduce({pos(0), pos(1)});
  EXPECT_EQ(id.core, (Word{pos(0), pos(1)}));
  EXPECT_TRUE(id.conjugator.empty());

  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    Word w = oracle::random_word(rng, t % 13, 2);
    auto c = cyclic_reduce(w);
    if (c.core.size() > 1) EXPECT_NE(c.core.front(), c.core.back().inverse());
    EXPECT_EQ(free_reduce(concat(concat(c.conjugator, c.core), inverse(c.conjugator))),
              free_reduce(w));
    // Rotations of the core have the same core up to rotation.
    for (std::size_t k = 0; k < c.core.size(); ++k) {
      Word other = cyclic_reduce(rotate(c.core, k)).core;
      bool found = false;
      for (std::size_t s = 0; s < other.size() && !found; ++s) found = rotate(other, s) == c.core;
      EXPECT_TRUE(found || c.core.empty());
    }
  }
}

TEST(Word, Homomorphism) {
  HomomorphismImages img{{0, {pos(1), pos(2)}}};
  EXPECT_EQ(apply_homomorphism(img, {neg(0)}), (Word{neg(2), neg(1)}));
  HomomorphismImages ident{{0, {pos(0)}}, {1, {pos(1)}}};
  EXPECT_EQ(apply_homomorphism(ident, {pos(0), neg(1)}), (Word{pos(0), neg(1)}));
  try {
    apply_homomorphism(img, {pos(3)});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("x3"), std::string::npos);
  }
  std::mt19937_64 rng(5);
  HomomorphismImages phi{{0, {pos(1), neg(0), pos(1)}}, {1, {neg(1)}}};
  for (int t = 0; t < 100; ++t) {
    Word u = oracle::random_word(rng, t % 7, 2);
    Word v = oracle::random_word(rng, t % 5, 2);
    EXPECT_EQ(free_reduce(apply_homomorphism(phi, concat(u, v))),
              free_reduce(concat(apply_homomorphism(phi, u), apply_homomorphism(phi, v))));
  }
}

TEST(Word, ExponentSum) {
  EXPECT_EQ(exponent_sum(parse_word("x0 x1 X0 X0 x2"), 0), -1);
  EXPECT_EQ(exponent_sum(parse_word("x0 x1 X0 X0 x2"), 1), 1);
}

TEST(Weights, TableBehaviour) {
  WeightTable wt;
  wt.set(0, 2.5);
  EXPECT_DOUBLE_EQ(wt(neg(0)), 2.5);
  EXPECT_THROW(wt.at(1), DomainError);
  EXPECT_THROW(wt.set(1, -1.0), DomainError);
  EXPECT_DOUBLE_EQ(WeightTable::unit().at(17), 1.0);
  wt.set(3, 0.0);
  EXPECT_DOUBLE_EQ(wt.at(3), 0.0);
}

TEST(Weights, Parse) {
  WeightTable wt = parse_weights("# areas\nx0 2\n\nx3 0.5\n");
  EXPECT_DOUBLE_EQ(wt.at(0), 2.0);
  EXPECT_DOUBLE_EQ(wt.at(3), 0.5);
  EXPECT_DOUBLE_EQ(wt.at(1), 1.0);
  EXPECT_THROW(parse_weights("x0"), ParseError);
  EXPECT_THROW(parse_weights("y0 1"), ParseError);
  EXPECT_THROW(parse_weights("x0 -3"), Error);
}
