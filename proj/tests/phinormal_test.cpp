#include <gtest/gtest.h>

#include <map>

#include "braidnf/garside.hpp"
#include "braidnf/oracle.hpp"
#include "braidnf/phinormal.hpp"
#include "braidnf/splitting.hpp"
#include "support.hpp"

namespace braidnf {
namespace {

using testing::word;

const PositiveWord kDeltaSquared = word("1 2 1 3 2 1 1 2 1 3 2 1", 4);
const PositiveWord kNormalDeltaSquared = word("3 2 1 1 2 3 2 1 1 2 1 1", 4);

TEST(PhiNormalize, DeltaSquaredTrace) {
  std::vector<NormalizationStep> trace;
  EXPECT_EQ(phi_normalize(kDeltaSquared, &trace), kNormalDeltaSquared);

  struct Try {
    int m;
    const char* successor;
    int generator;
    bool divides;
  };
  // Per step: current address, then the attempts in order.
  const std::vector<std::pair<const char*, std::vector<Try>>> table{
      {"11", {{2, "11", 1, true}}},
      {"11", {{2, "11", 1, true}}},
      {"11", {{2, "11", 1, false}, {1, "12", 2, true}}},
      {"12", {{2, "12", 2, false}, {1, "11", 1, true}}},
      {"11", {{2, "11", 1, true}}},
      {"11", {{2, "11", 1, false}, {1, "12", 2, true}}},
      {"12", {{2, "12", 2, false}, {1, "11", 1, false}, {0, "21", 3, true}}},
      {"21", {{2, "21", 3, false}, {1, "22", 2, true}}},
      {"22", {{2, "22", 2, false}, {1, "21", 3, false}, {0, "11", 1, true}}},
      {"11", {{2, "11", 1, true}}},
      {"11", {{2, "11", 1, false}, {1, "12", 2, true}}},
      {"12", {{2, "12", 2, false}, {1, "11", 1, false}, {0, "21", 3, true}}},
      {"21", {}},
  };
  ASSERT_EQ(trace.size(), table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    const auto& row = trace[k];
    EXPECT_EQ(row.k, static_cast<int>(k));
    EXPECT_EQ(to_string(row.address), table[k].first) << k;
    ASSERT_EQ(row.attempts.size(), table[k].second.size()) << k;
    for (std::size_t j = 0; j < row.attempts.size(); ++j) {
      const auto& a = row.attempts[j];
      const auto& e = table[k].second[j];
      EXPECT_EQ(a.m, e.m);
      EXPECT_EQ(to_string(a.successor), e.successor);
      EXPECT_EQ(a.generator.index, e.generator);
      EXPECT_EQ(a.divides, e.divides);
    }
    // w_k w'_k stays equivalent to the input.
    EXPECT_TRUE(equivalent(row.remaining * row.produced, kDeltaSquared));
  }
}

TEST(PhiNormalize, SmallCases) {
  EXPECT_EQ(phi_normalize(word("2 1 2", 3)), word("1 2 1", 3));
  EXPECT_EQ(phi_normalize(word("2", 3)), word("2", 3));
  EXPECT_EQ(phi_normalize(PositiveWord(4)), PositiveWord(4));
  EXPECT_EQ(phi_normalize(word("1 1", 2)), word("1 1", 2));
}

TEST(PhiNormalize, IdempotentAndEquivalent) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 5;
    const PositiveWord w = testing::random_word_up_to(rng, n, 30);
    const PositiveWord nf = phi_normalize(w);
    ASSERT_TRUE(equivalent(nf, w));
    ASSERT_EQ(phi_normalize(nf), nf);
    ASSERT_TRUE(is_phi_normal(nf));
  }
}

TEST(PhiNormalize, ConstantOnClasses) {
  for (int n : {3, 4}) {
    for (const auto& w : all_words(n, n == 3 ? 7 : 6)) {
      const PositiveWord nf = phi_normalize(w);
      const auto cls = equivalence_class(w);
      for (const auto& v : cls.words()) ASSERT_EQ(phi_normalize(v), nf) << format(v);
    }
  }
}

TEST(PhiNormalize, ConstantOnSampledFiveStrandClasses) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const PositiveWord w = testing::random_word(rng, 5, 7);
    const PositiveWord nf = phi_normalize(w);
    const auto cls = equivalence_class(w);
    for (const auto& v : cls.words()) ASSERT_EQ(phi_normalize(v), nf) << format(v);
  }
}

TEST(Recognizers, Examples) {
  EXPECT_TRUE(is_phi_normal(kNormalDeltaSquared));
  EXPECT_FALSE(is_phi_normal(kDeltaSquared));
  EXPECT_FALSE(is_phi_normal(word("2 1 2", 3)));
  EXPECT_TRUE(is_phi_normal(word("1 2 1", 3)));
  EXPECT_TRUE(is_phi_normal(PositiveWord(5)));
}

TEST(Recognizers, AgreeAndCountOneWordPerClass) {
  for (int n : {3, 4, 5}) {
    const std::size_t max_len = n == 3 ? 8 : n == 4 ? 6 : 5;
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::map<std::vector<int>, int> normal_per_form;
      for (const auto& w : all_words(n, len)) {
        const bool a = is_phi_normal_by_addresses(w);
        const bool b = is_phi_normal_by_permutations(w);
        ASSERT_EQ(a, b) << format(w);
        ASSERT_EQ(a, phi_normalize(w) == w) << format(w);
        auto& count = normal_per_form[greedy(w).to_word().letters()];
        if (a) ++count;
      }
      for (const auto& [form, count] : normal_per_form) ASSERT_EQ(count, 1);
    }
  }
}

TEST(ThreeStrands, MinimumExponents) {
  EXPECT_EQ(b3_min_exponents(1), 0);
  EXPECT_EQ(b3_min_exponents(2), 1);
  EXPECT_EQ(b3_min_exponents(3), 2);
  EXPECT_EQ(b3_min_exponents(9), 2);
  EXPECT_THROW(b3_min_exponents(0), ArgumentError);
}

TEST(ThreeStrands, ClosedFormExamples) {
  EXPECT_TRUE(b3_normal_test({1, 2, 1, 2}));
  EXPECT_TRUE(b3_normal_test({1, 1, 1}));
  EXPECT_FALSE(b3_normal_test({1, 1, 0, 1}));
  EXPECT_TRUE(b3_normal_test({0}));
  EXPECT_TRUE(b3_normal_test({1, 0}));
  EXPECT_FALSE(b3_normal_test({1, 1, 1, 1}));
  EXPECT_EQ(b3_profile(word("2 1 2", 3)), (std::vector<int>{1, 1, 1, 0}));
}

TEST(ThreeStrands, ClosedFormMatchesRecognizer) {
  for (const auto& w : all_words_up_to(3, 9)) {
    ASSERT_EQ(is_phi_normal(w), b3_normal_test(b3_profile(w))) << format(w);
  }
}

}  // namespace
}  // namespace braidnf
