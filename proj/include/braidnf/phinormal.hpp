#pragma once

// The Phi-normal form: the letterwise normal form along the canonical flip
// covering, with two independent recognizers and the closed-form test on
// three strands.

#include <vector>

#include "braidnf/covering.hpp"
#include "braidnf/word.hpp"

namespace braidnf {

/// The Phi-normal word equivalent to w (on w.strands() strands). When
/// `trace` is given it receives one row per produced letter plus a final row.
PositiveWord phi_normalize(const PositiveWord& w, std::vector<NormalizationStep>* trace = nullptr);

/// Recognizer replaying binary addresses along the canonical covering.
bool is_phi_normal_by_addresses(const PositiveWord& w);
/// Recognizer replaying the permutation automaton: the state lists the
/// atoms in the order they are tried, and is updated without addresses.
bool is_phi_normal_by_permutations(const PositiveWord& w);
/// Runs both recognizers; throws InvariantBreach if they disagree.
bool is_phi_normal(const PositiveWord& w);

/// e_r^min: 0 for r = 1, 1 for r = 2, 2 beyond.
int b3_min_exponents(int r);
/// Whether sigma_[p]^{e_p} ... sigma_2^{e_2} sigma_1^{e_1} is Phi-normal,
/// given the exponents (e_p, ..., e_1) listed left to right.
bool b3_normal_test(const std::vector<int>& exponents);
/// The block exponents (e_p, ..., e_1) of a three-strand word, read from the
/// right with sigma_1 blocks at odd positions.
std::vector<int> b3_profile(const PositiveWord& w);

}  // namespace braidnf
