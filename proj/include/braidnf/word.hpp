#pragma once

// Braid words: positive and signed words over the Artin generators, the
// distinguished braids Delta_n, delta_n and the zigzags Delta-hat_{n,d}, the
// flip automorphism, and the textual wire format.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidnf {

/// Raised for malformed input: bad tokens, out-of-range generators,
/// inconsistent strand counts.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (two independent routes
/// disagree, a computed object violates its defining property).
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Artin generator sigma_i, 1-based.
struct Generator {
  int index = 1;

  friend constexpr bool operator==(Generator, Generator) = default;
  friend constexpr auto operator<=>(Generator, Generator) = default;
};

/// Largest supported strand count. Simple factors keep descent sets in a
/// 64-bit mask.
inline constexpr int kMaxStrands = 64;

/// A word in the free monoid on sigma_1 .. sigma_{n-1}. Letters are 1-based
/// generator indices.
class PositiveWord {
 public:
  explicit PositiveWord(int strands);
  PositiveWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  void push_back(int letter);
  void append(const PositiveWord& other);
  /// The same letters viewed on a different number of strands.
  PositiveWord with_strands(int strands) const;

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
  friend auto operator<=>(const PositiveWord&, const PositiveWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

PositiveWord operator*(const PositiveWord& lhs, const PositiveWord& rhs);

/// sigma_i^exponent on `strands` strands.
PositiveWord power(int strands, Generator g, int exponent);

/// u^exponent.
PositiveWord power(const PositiveWord& u, int exponent);

/// Letter with a sign: +i is sigma_i, -i is sigma_i^{-1}.
struct SignedLetter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

class SignedWord {
 public:
  explicit SignedWord(int strands);
  SignedWord(int strands, std::vector<SignedLetter> letters);
  /// The positive word viewed as a signed word.
  explicit SignedWord(const PositiveWord& w);

  int strands() const { return strands_; }
  const std::vector<SignedLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_positive() const;
  /// Throws ArgumentError when a negative letter occurs.
  PositiveWord to_positive() const;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;

 private:
  int strands_;
  std::vector<SignedLetter> letters_;
};

/// The group inverse: letters reversed, signs negated.
SignedWord inverse(const SignedWord& w);
SignedWord operator*(const SignedWord& lhs, const SignedWord& rhs);

/// Phi_n: sigma_i -> sigma_{n-i}, letter order preserved.
PositiveWord flip(const PositiveWord& w);
/// Phi_n applied `times` times (only the parity matters).
PositiveWord flip(const PositiveWord& w, int times);
/// Letters in reverse order (the anti-automorphism fixing every relation).
PositiveWord reversed(const PositiveWord& w);

/// Delta_n, built as sigma_1 ... sigma_{n-1} Delta_{n-1}.
PositiveWord delta(int n);
/// delta_n = sigma_{n-1} ... sigma_1.
PositiveWord delta_small(int n);
/// Delta-hat_{n,d} = Phi^d(delta_n) ... Phi^2(delta_n) Phi(delta_n),
/// a zigzag of length d(n-1) ending with sigma_{n-1}.
PositiveWord delta_hat(int n, int d);

/// Parses the wire format: whitespace or comma separated signed integers.
/// Without `strands`, n is 1 + max |index| (at least 2).
SignedWord parse_signed(std::string_view text, std::optional<int> strands = std::nullopt);
/// As parse_signed, rejecting negative letters.
PositiveWord parse_positive(std::string_view text, std::optional<int> strands = std::nullopt);

std::string format(const PositiveWord& w);
std::string format(const SignedWord& w);
/// Human rendering with exponents collapsed, e.g. "s3 s2 s1^2"; "1" for the
/// empty word.
std::string pretty(const PositiveWord& w);

}  // namespace braidnf
