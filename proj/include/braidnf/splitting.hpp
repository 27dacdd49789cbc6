#pragma once

// n-splittings: the alternating decomposition of x in B_n^+ along
// (Phi_n(B_{n-1}^+), B_{n-1}^+), at braid and at word level, and the
// recursive decomposition D_n built from them.

#include <string>
#include <vector>

#include "braidnf/iterated.hpp"
#include "braidnf/word.hpp"

namespace braidnf {

/// The n-splitting (x_p, ..., x_1), entries left to right, each a word on
/// n - 1 strands. The trivial braid splits as (1).
struct Splitting {
  int strands = 3;
  std::vector<PositiveWord> entries;

  /// The n-breadth p.
  int breadth() const { return static_cast<int>(entries.size()); }
  /// Phi^{p-1}(x_p) ... Phi(x_2) x_1 on n strands.
  PositiveWord reconstruct() const;
};

Splitting braid_splitting(const PositiveWord& w, int n);

/// D_n(w): the decomposition along the canonical covering, by recursion on n.
PowerTree braid_decomposition(const PositiveWord& w, int n);

/// D_n*(w).
ExponentTree exponent_sequence(const PowerTree& d);

/// The syntactic splitting of the literal word: strip the longest suffix
/// avoiding sigma_{n-1}, flip the prefix, repeat.
Splitting word_splitting(const PositiveWord& w, int n);

/// Recursive bracketing of the literal word.
PowerTree word_decomposition(const PositiveWord& w, int n);
ExponentTree word_exponents(const PositiveWord& w, int n);

/// Outcome of validate_splitting. For n = 3 the test is exact; for n >= 4
/// only necessary conditions are checked, and passing them does not show
/// that some braid has this splitting.
struct SplittingVerdict {
  bool valid = true;
  bool exact = false;
  std::string violated;
};

/// Checks entries (x_p, ..., x_1) on n - 1 strands against the constraints
/// every n-splitting satisfies: x_p >= sigma_1, x_r >= delta_{n-1} sigma_1
/// for p > r >= 3, x_2 >= delta_{n-1} when p >= 3 (all in the order <+).
SplittingVerdict validate_splitting(const std::vector<PositiveWord>& entries, int n);

/// Semicolon separated entries, e.g. "1 ; 2 1 1 ; 2 1 ; 1 2 1 1 2 1". A
/// trivial entry prints as "()".
std::string format(const Splitting& s);

}  // namespace braidnf
