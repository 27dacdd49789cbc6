#pragma once

// The well-order <+ on B_n^+: ShortLex on exponent trees, two independent
// comparison routes, sign of signed words, and ordinal ranks on 3 strands.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidnf/iterated.hpp"
#include "braidnf/word.hpp"

namespace braidnf {

/// ShortLex on trees of equal depth: integers at depth 0, otherwise fewer
/// entries first, then entries compared from the left.
std::strong_ordering shortlex_compare(const ExponentTree& s, const ExponentTree& t);

/// The recursive splitting of a braid, kept for repeated comparisons: on two
/// strands the word length, otherwise the profiles of the splitting entries.
struct SplittingProfile {
  int strands = 2;
  int length = 0;
  std::vector<SplittingProfile> entries;
};

SplittingProfile splitting_profile(const PositiveWord& w, int n);
/// Breadth first, then entries from the left.
std::strong_ordering compare_profiles(const SplittingProfile& a, const SplittingProfile& b);

/// D_n* computed along base_sequence(n) by the generic covering algorithm.
ExponentTree canonical_exponents(const PositiveWord& w, int n);

/// Route A: recursive comparison of splittings.
std::strong_ordering compare_plus_by_splitting(const PositiveWord& x, const PositiveWord& y, int n);
/// Route B: ShortLex comparison of exponent trees.
std::strong_ordering compare_plus_by_exponents(const PositiveWord& x, const PositiveWord& y, int n);
/// x <+ y in B_n^+. Equal braids are detected first. Builds with assertions
/// enabled run both routes and throw InvariantBreach on disagreement;
/// release builds run route B only. Beyond the largest materialized
/// canonical covering only route A is available.
std::strong_ordering compare_plus(const PositiveWord& x, const PositiveWord& y, int n);

enum class Sign { negative, zero, positive };

std::string to_string(Sign s);

/// Position of the braid of w relative to 1 in the braid order. Uses
/// n = w.strands() unless given.
Sign sign(const SignedWord& w, std::optional<int> n = std::nullopt);

/// An ordinal below omega^omega in Cantor normal form: terms
/// omega^exponent * coefficient with strictly descending exponents.
class OrdinalCNF {
 public:
  struct Term {
    int exponent = 0;
    std::uint64_t coefficient = 1;
    friend bool operator==(const Term&, const Term&) = default;
  };

  OrdinalCNF() = default;
  /// Terms in any order; zero coefficients are dropped, equal exponents
  /// merged.
  explicit OrdinalCNF(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;

 private:
  std::vector<Term> terms_;
};

std::strong_ordering ordinal_compare(const OrdinalCNF& a, const OrdinalCNF& b);
/// E.g. "w^3*2 + w + 4"; "0" for zero.
std::string ordinal_format(const OrdinalCNF& a);

/// The rank of a 3-strand braid in (B_3^+, <+).
OrdinalCNF rank_b3(const PositiveWord& x);

/// The <+-least upper bound of the braids of n-breadth at most p: the zigzag
/// delta_hat(n, p - 1), and sigma_{n-1} for p = 1.
PositiveWord least_upper_bound_witness(int n, int p);

}  // namespace braidnf
