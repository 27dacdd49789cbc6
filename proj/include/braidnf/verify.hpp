#pragma once

// Agreement checks between the fast algorithms and the exhaustive oracle on
// complete lattices of short words.

#include <cstddef>
#include <string>
#include <vector>

#include "braidnf/word.hpp"

namespace braidnf {

struct CheckResult {
  std::string name;
  int strands = 0;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  /// The first disagreement, empty when there is none.
  std::string example;

  bool passed() const { return mismatches == 0; }
};

/// right_divides against class membership, for every word and atom.
CheckResult check_right_divides(int n, const std::vector<PositiveWord>& words);
/// equivalent against the oracle partition, for every pair of equal length.
CheckResult check_equivalent(int n, const std::vector<PositiveWord>& words);
/// tail against the longest suffix over the class, for every index set.
CheckResult check_tails(int n, const std::vector<PositiveWord>& words);
/// phi_normalize against the ShortLex-minimal class member.
CheckResult check_normal_forms(int n, const std::vector<PositiveWord>& words);
/// Both recognizers against phi_normalize(w) == w.
CheckResult check_recognizers(int n, const std::vector<PositiveWord>& words);
/// The two comparison routes on every ordered pair.
CheckResult check_route_agreement(int n, const std::vector<PositiveWord>& words);

enum class VerifyLevel { quick, full };

struct VerifyReport {
  VerifyLevel level = VerifyLevel::quick;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// quick: B_3 up to length 6 and B_4 up to length 4.
/// full: B_3 up to length 7 and B_4 up to length 6.
VerifyReport run_verification(VerifyLevel level);

std::string to_string(VerifyLevel level);

}  // namespace braidnf
