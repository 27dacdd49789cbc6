#include <gtest/gtest.h>

#include "braidnf/oracle.hpp"
#include "support.hpp"

namespace braidnf {
namespace {

using testing::word;

TEST(EquivalenceClass, SmallClasses) {
  const auto a = equivalence_class(word("1 2 1", 3));
  EXPECT_EQ(a.size(), 2U);
  EXPECT_TRUE(a.contains(word("2 1 2", 3)));
  EXPECT_EQ(equivalence_class(word("1 3", 4)).size(), 2U);
  EXPECT_EQ(equivalence_class(word("1 2", 3)).size(), 1U);
  EXPECT_EQ(equivalence_class(PositiveWord(3)).size(), 1U);
}

TEST(EquivalenceClass, HalfTwistOnFourStrands) {
  // Reduced words of the longest permutation of S_4.
  EXPECT_EQ(equivalence_class(delta(4)).size(), 16U);
  EXPECT_EQ(equivalence_class(delta(5), OracleLimits{10}).size(), 768U);
}

TEST(EquivalenceClass, MembersShareLength) {
  const auto cls = equivalence_class(power(delta(3), 3));
  for (const auto& v : cls.words()) EXPECT_EQ(v.size(), 9U);
  EXPECT_TRUE(std::is_sorted(cls.words().begin(), cls.words().end()));
}

TEST(Oracle, Divisibility) {
  EXPECT_TRUE(oracle_right_divides(word("2 1 2", 3), Generator{1}));
  EXPECT_FALSE(oracle_right_divides(word("1 2", 3), Generator{1}));
  EXPECT_TRUE(oracle_equivalent(word("1 2 1", 3), word("2 1 2", 3)));
  EXPECT_FALSE(oracle_equivalent(word("1 2", 3), word("2 1", 3)));
  EXPECT_FALSE(oracle_equivalent(word("1", 3), word("1 1", 3)));
}

TEST(Oracle, Tail) {
  const PositiveWord t = oracle_tail(power(delta(3), 2).with_strands(4), GeneratorSet{1});
  EXPECT_EQ(t, word("1 1", 4));
  EXPECT_TRUE(oracle_tail(word("2 2", 3), GeneratorSet{1}).empty());
}

TEST(Oracle, MinimalRepresentative) {
  EXPECT_EQ(burckel_normal_of(word("2 1 2", 3)), word("1 2 1", 3));
  EXPECT_EQ(burckel_normal_of(power(delta(4), 2), OracleLimits{12}), word("3 2 1 1 2 3 2 1 1 2 1 1", 4));
  EXPECT_EQ(burckel_normal_of(word("1 1", 2)), word("1 1", 2));
}

TEST(Oracle, Bounds) {
  EXPECT_EQ(default_oracle_length(3), 12U);
  EXPECT_EQ(default_oracle_length(4), 9U);
  EXPECT_EQ(default_oracle_length(5), 8U);
  EXPECT_EQ(default_oracle_length(7), 7U);
  EXPECT_THROW(equivalence_class(power(delta(4), 2)), OracleBoundExceeded);
  EXPECT_THROW(equivalence_class(delta(5), OracleLimits{10, 100}), OracleBoundExceeded);
  EXPECT_NO_THROW(equivalence_class(power(word("1", 2), 50)));
}

TEST(Enumeration, CountsAndOrder) {
  EXPECT_EQ(all_words(4, 3).size(), 27U);
  EXPECT_EQ(all_words_up_to(3, 4).size(), 31U);
  const auto w = all_words(3, 2);
  EXPECT_EQ(w.front(), word("1 1", 3));
  EXPECT_EQ(w.back(), word("2 2", 3));
  EXPECT_THROW(all_words(1, 2), ArgumentError);
}

}  // namespace
}  // namespace braidnf
