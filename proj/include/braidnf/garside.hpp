#pragma once

// Right division in the positive braid monoid B_n^+.
//
// A braid is kept in right greedy normal form s_k ... s_2 s_1 where every s_j
// is a simple braid (a permutation braid) and s_1 is the largest simple right
// divisor of the whole product. Right divisibility by an atom is then read
// off the right descent set of s_1, and dividing by an atom costs one sweep
// over the factors.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidnf/word.hpp"

namespace braidnf {

/// Raised by quotient() when the atom is not a right divisor.
class NotARightDivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A set of generator indices {i} generating the parabolic submonoid M_I.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  GeneratorSet(std::initializer_list<int> indices);
  static GeneratorSet from_mask(std::uint64_t mask);
  /// {1, ..., last}.
  static GeneratorSet range(int first, int last);

  bool contains(int index) const { return index >= 1 && index <= 64 && ((bits_ >> (index - 1)) & 1U); }
  void insert(int index);
  std::uint64_t mask() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::vector<int> indices() const;

  friend bool operator==(GeneratorSet, GeneratorSet) = default;
  friend GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return from_mask(a.bits_ | b.bits_); }

 private:
  std::uint64_t bits_ = 0;
};

/// Bit (i - 1) set for sigma_i.
constexpr std::uint64_t atom_bit(int index) { return std::uint64_t{1} << (index - 1); }

/// A simple braid, stored as its permutation in one-line notation
/// (perm[position] = value, 0-based). sigma_i swaps positions i-1 and i when
/// multiplied on the right, values i-1 and i when multiplied on the left.
class SimpleFactor {
 public:
  static SimpleFactor identity(int strands);
  static SimpleFactor atom(int strands, int index);
  /// The half twist Delta_n (the reversal permutation).
  static SimpleFactor half_twist(int strands);

  int strands() const { return strands_; }
  std::uint8_t operator[](int position) const { return perm_[position]; }

  bool is_identity() const;
  /// Number of crossings, i.e. the word length of the factor.
  int length() const;
  /// Atoms sigma_i with s = s' sigma_i.
  std::uint64_t right_descents() const;
  /// Atoms sigma_i with s = sigma_i s'.
  std::uint64_t left_descents() const;

  /// s <- s sigma_i; requires sigma_i not a right descent.
  void multiply_right(int index);
  /// s <- s sigma_i^{-1}; requires sigma_i a right descent.
  void divide_right(int index);
  /// s <- sigma_i s; requires sigma_i not a left descent.
  void multiply_left(int index);
  /// s <- sigma_i^{-1} s; requires sigma_i a left descent.
  void divide_left(int index);

  /// Conjugate by Delta_n.
  SimpleFactor flipped() const;
  /// A positive word for the factor, generator letters 1-based.
  std::vector<int> letters() const;

  friend bool operator==(const SimpleFactor& a, const SimpleFactor& b) {
    return a.strands_ == b.strands_ && a.perm_ == b.perm_;
  }

 private:
  explicit SimpleFactor(int strands);
  int position_of(int value) const;

  int strands_;
  std::array<std::uint8_t, kMaxStrands> perm_{};
};

/// A positive braid in right greedy normal form. The factor list runs left
/// to right; back() is the rightmost factor s_1. No factor is the identity.
class GreedyForm {
 public:
  explicit GreedyForm(int strands);
  static GreedyForm from_word(const PositiveWord& w);

  int strands() const { return strands_; }
  const std::vector<SimpleFactor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }
  /// Word length of the braid.
  int length() const;

  /// Atoms sigma_i right-dividing the braid, as a mask.
  std::uint64_t right_divisor_mask() const {
    return factors_.empty() ? 0 : factors_.back().right_descents();
  }
  bool right_divisible_by(int index) const { return (right_divisor_mask() & atom_bit(index)) != 0; }

  void multiply_right(int index);
  void multiply_right(const PositiveWord& w);
  /// x <- x sigma_i^{-1}; throws NotARightDivisor.
  void divide_right(int index);
  /// Replaces the braid by its image under Phi_n.
  void flip();

  PositiveWord to_word() const;
  /// Checks right normality of every adjacent pair.
  bool is_right_normal() const;

  friend bool operator==(const GreedyForm& a, const GreedyForm& b) {
    return a.strands_ == b.strands_ && a.factors_ == b.factors_;
  }

 private:
  void renormalize_leftward(std::size_t modified);

  int strands_;
  std::vector<SimpleFactor> factors_;
};

/// The canonical right greedy form of w.
GreedyForm greedy(const PositiveWord& w);

bool right_divides(const PositiveWord& w, Generator g);

/// A word v with v sigma_i equivalent to w. Throws NotARightDivisor.
PositiveWord quotient(const PositiveWord& w, Generator g);

/// A positive word c with sigma_i c equivalent to Delta_n.
PositiveWord left_quotient_delta(Generator g, int n);

struct TailSplit {
  PositiveWord tail;  ///< maximal right divisor lying in M_I
  PositiveWord rest;  ///< rest * tail is equivalent to w
};

/// The M_I-tail of w together with the remaining left factor.
TailSplit tail(const PositiveWord& w, GeneratorSet indices);
/// Same, peeling atoms off a greedy form; the form is left holding the rest.
PositiveWord extract_tail(GreedyForm& x, GeneratorSet indices);

/// True iff u and v represent the same braid. Words on fewer strands are
/// embedded in the larger braid monoid.
bool equivalent(const PositiveWord& u, const PositiveWord& v);

}  // namespace braidnf
