#pragma once

// Ground truth by exhaustion: the set of all positive words equivalent to a
// short word, and brute-force divisibility, equality, tails and minimal
// representatives built on it.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "braidnf/garside.hpp"
#include "braidnf/word.hpp"

namespace braidnf {

/// Raised when a word or its class exceeds the configured oracle bounds.
class OracleBoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct OracleLimits {
  /// Longest accepted word; 0 selects the per-strand default
  /// (12 for n = 3, 9 for n = 4, 8 for n = 5, 7 beyond, unbounded for n = 2).
  std::size_t max_length = 0;
  /// Largest accepted class.
  std::size_t max_class_size = 2'000'000;
};

std::size_t default_oracle_length(int n);

/// All positive words representing the same braid, sorted.
class EquivalenceClass {
 public:
  EquivalenceClass(int strands, std::vector<PositiveWord> words);

  int strands() const { return strands_; }
  const std::vector<PositiveWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(const PositiveWord& w) const;

 private:
  int strands_;
  std::vector<PositiveWord> words_;
};

/// Closure of {w} under the commutation and braid relations applied at every
/// position in both directions.
EquivalenceClass equivalence_class(const PositiveWord& w, const OracleLimits& limits = {});

/// Some member of the class ends with sigma_i.
bool oracle_right_divides(const PositiveWord& w, Generator g, const OracleLimits& limits = {});
bool oracle_equivalent(const PositiveWord& u, const PositiveWord& v, const OracleLimits& limits = {});
/// The longest suffix over the letters of I among all class members.
PositiveWord oracle_tail(const PositiveWord& w, GeneratorSet indices, const OracleLimits& limits = {});
/// The class member whose word exponent tree is ShortLex-minimal.
PositiveWord burckel_normal_of(const PositiveWord& w, const OracleLimits& limits = {});

/// Every positive word of the given length over n strands, in lexicographic
/// order.
std::vector<PositiveWord> all_words(int n, std::size_t length);
/// Every positive word of length at most max_length.
std::vector<PositiveWord> all_words_up_to(int n, std::size_t max_length);

}  // namespace braidnf
