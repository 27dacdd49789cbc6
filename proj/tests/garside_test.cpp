#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "braidnf/garside.hpp"
#include "braidnf/oracle.hpp"
#include "support.hpp"

namespace braidnf {
namespace {

using testing::word;

std::vector<GeneratorSet> all_index_sets(int n) {
  std::vector<GeneratorSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) out.push_back(GeneratorSet::from_mask(m));
  return out;
}

TEST(SimpleFactor, LettersRebuildFactor) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    SimpleFactor s = SimpleFactor::identity(n);
    for (int k = 0; k < 10; ++k) {
      const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      if (!(s.right_descents() & atom_bit(i))) s.multiply_right(i);
    }
    SimpleFactor rebuilt = SimpleFactor::identity(n);
    for (int a : s.letters()) rebuilt.multiply_right(a);
    EXPECT_EQ(rebuilt, s);
    EXPECT_EQ(static_cast<int>(s.letters().size()), s.length());
  }
}

TEST(SimpleFactor, HalfTwistHasAllDescents) {
  const SimpleFactor d = SimpleFactor::half_twist(5);
  EXPECT_EQ(d.right_descents(), 0b1111U);
  EXPECT_EQ(d.left_descents(), 0b1111U);
  EXPECT_EQ(d.length(), 10);
  EXPECT_EQ(d.flipped(), d);
}

TEST(Greedy, BraidRelationGivesSameForm) {
  EXPECT_EQ(greedy(word("1 2 1", 3)), greedy(word("2 1 2", 3)));
  EXPECT_EQ(greedy(word("1 3", 4)), greedy(word("3 1", 4)));
  EXPECT_NE(greedy(word("1 2", 3)), greedy(word("2 1", 3)));
  EXPECT_TRUE(greedy(PositiveWord(3)).is_identity());
}

TEST(Greedy, KnownDivisibility) {
  EXPECT_TRUE(right_divides(word("2 1 2", 3), Generator{1}));
  EXPECT_FALSE(right_divides(word("2", 3), Generator{1}));
  EXPECT_THROW(quotient(word("2", 3), Generator{1}), NotARightDivisor);
  EXPECT_TRUE(equivalent(quotient(word("2 1 2", 3), Generator{1}), word("1 2", 3)));
}

TEST(Greedy, LeftQuotientOfDelta) {
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      const PositiveWord c = left_quotient_delta(Generator{i}, n);
      EXPECT_TRUE(equivalent(power(n, Generator{i}, 1) * c, delta(n))) << n << " " << i;
    }
  }
}

TEST(Greedy, TailOfDeltaSquared) {
  const TailSplit t = tail(power(delta(4), 2), GeneratorSet{1, 2});
  EXPECT_TRUE(equivalent(t.tail, power(delta(3), 2).with_strands(4)));
  EXPECT_TRUE(equivalent(t.rest, word("3 2 1 1 2 3", 4)));
  EXPECT_TRUE(equivalent(t.rest * t.tail, power(delta(4), 2)));
}

// Every word of a small lattice: the greedy form is right normal, has the
// word's length, and its divisors agree with exhaustive class search.
class GreedyLattice : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(GreedyLattice, AgreesWithOracle) {
  const auto [n, max_len] = GetParam();
  for (const auto& w : all_words_up_to(n, static_cast<std::size_t>(max_len))) {
    const GreedyForm g = greedy(w);
    ASSERT_TRUE(g.is_right_normal()) << format(w);
    ASSERT_EQ(g.length(), static_cast<int>(w.size()));
    const auto cls = equivalence_class(w);
    for (int i = 1; i < n; ++i) {
      const bool oracle = std::any_of(cls.words().begin(), cls.words().end(),
                                      [&](const PositiveWord& v) { return !v.empty() && v[v.size() - 1] == i; });
      ASSERT_EQ(g.right_divisible_by(i), oracle) << format(w) << " sigma_" << i;
    }
    ASSERT_TRUE(cls.contains(g.to_word())) << format(w);
  }
}

TEST_P(GreedyLattice, EquivalenceMatchesClasses) {
  const auto [n, max_len] = GetParam();
  const auto words = all_words(n, static_cast<std::size_t>(max_len));
  std::set<std::vector<int>> assigned;
  std::size_t classes = 0;
  std::size_t forms = 0;
  std::set<std::vector<int>> seen_forms;
  for (const auto& w : words) {
    if (!assigned.count(w.letters())) {
      ++classes;
      const auto cls = equivalence_class(w);
      for (const auto& v : cls.words()) assigned.insert(v.letters());
    }
    if (seen_forms.insert(greedy(w).to_word().letters()).second) ++forms;
  }
  EXPECT_EQ(classes, forms);
}

INSTANTIATE_TEST_SUITE_P(Small, GreedyLattice,
                         ::testing::Values(std::make_pair(3, 7), std::make_pair(4, 5), std::make_pair(5, 4)));

TEST(Greedy, TailMatchesOracleMaximalSuffix) {
  for (int n : {3, 4}) {
    const auto sets = all_index_sets(n);
    for (const auto& w : all_words_up_to(n, n == 3 ? 6 : 5)) {
      for (const auto& set : sets) {
        const TailSplit t = tail(w, set);
        const PositiveWord o = oracle_tail(w, set);
        ASSERT_EQ(t.tail.size(), o.size()) << format(w);
        ASSERT_TRUE(equivalent(t.tail, o)) << format(w);
        ASSERT_TRUE(equivalent(t.rest * t.tail, w));
      }
    }
  }
}

TEST(Greedy, TailIsTransitive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 4;
    const PositiveWord z = testing::random_word_up_to(rng, n, 14);
    const std::uint64_t outer = rng() & ((std::uint64_t{1} << (n - 1)) - 1);
    const std::uint64_t inner = outer & rng();
    const PositiveWord once = tail(tail(z, GeneratorSet::from_mask(outer)).tail, GeneratorSet::from_mask(inner)).tail;
    EXPECT_TRUE(equivalent(once, tail(z, GeneratorSet::from_mask(inner)).tail)) << format(z);
  }
}

TEST(Greedy, LongWordsStayNormalUnderMixedOperations) {
  std::mt19937_64 rng(5);
  for (int n : {4, 6, 9, 17}) {
    GreedyForm g(n);
    std::vector<int> letters;
    for (int step = 0; step < 2000; ++step) {
      const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      if (step % 3 == 2 && g.right_divisor_mask()) {
        const std::uint64_t m = g.right_divisor_mask();
        const int j = std::countr_zero(m) + 1;
        g.divide_right(j);
      } else {
        g.multiply_right(i);
      }
      if (step % 97 == 0) {
        ASSERT_TRUE(g.is_right_normal());
      }
    }
    ASSERT_TRUE(g.is_right_normal());
    // Canonical: rebuilding from the form's own word yields the same form.
    EXPECT_EQ(greedy(g.to_word()), g);
  }
}

TEST(Greedy, DivisionUndoesMultiplication) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 5;
    const PositiveWord w = testing::random_word_up_to(rng, n, 30);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    GreedyForm g = greedy(w);
    g.multiply_right(i);
    ASSERT_TRUE(g.right_divisible_by(i));
    g.divide_right(i);
    ASSERT_EQ(g, greedy(w));
  }
}

TEST(Greedy, FlipCommutesWithNormalization) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const PositiveWord w = testing::random_word_up_to(rng, n, 25);
    GreedyForm g = greedy(w);
    g.flip();
    EXPECT_EQ(g, greedy(flip(w)));
  }
}

TEST(Greedy, EquivalentEmbedsSmallerStrandCounts) {
  EXPECT_TRUE(equivalent(word("1 2 1", 3), word("2 1 2", 5)));
  EXPECT_FALSE(equivalent(word("1 2", 3), word("1 2 1", 3)));
}

TEST(Greedy, WorksOnManyStrands) {
  PositiveWord w(40);
  for (int i = 39; i >= 1; --i) w.push_back(i);
  const GreedyForm g = greedy(w);
  EXPECT_EQ(g.factors().size(), 1U);
  EXPECT_EQ(g.right_divisor_mask(), atom_bit(1));
}

}  // namespace
}  // namespace braidnf
