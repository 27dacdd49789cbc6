#pragma once

// Atomic coverings of B_n^+ by binary trees of single-generator submonoids,
// the canonical flip covering, and decompositions along a covering.

#include <optional>
#include <string>
#include <vector>

#include "braidnf/garside.hpp"
#include "braidnf/iterated.hpp"
#include "braidnf/word.hpp"

namespace braidnf {

/// A complete binary tree of depth k whose leaves are atoms of B_n^+. The
/// leaf at binary address d_1 ... d_k sits under child d_1 of the root, and
/// so on; child 2 is drawn on the left.
class CoveringTree {
 public:
  /// `leaves` lists the leaf generators left to right (address 2...2 first,
  /// 1...1 last). Throws ArgumentError unless every atom of B_n^+ occurs and
  /// there are exactly 2^depth leaves.
  CoveringTree(int strands, int depth, std::vector<int> leaves);

  /// Parses nested 2-arrays of generator indices, e.g. [[2,3],[2,1]].
  static CoveringTree from_json(const std::string& text, int strands);
  std::string to_json() const;

  int strands() const { return strands_; }
  int depth() const { return depth_; }
  const std::vector<int>& leaves() const { return leaves_; }

  Generator leaf(const BinaryAddress& alpha) const;
  /// Generators occurring below the node at `prefix` (the submonoid M_[prefix]).
  GeneratorSet submonoid(const BinaryAddress& prefix) const;

  /// Whether every internal node satisfies the no-gap condition.
  bool is_dense() const { return dense_; }

 private:
  std::size_t block_of(const BinaryAddress& prefix) const;

  int strands_;
  int depth_;
  std::vector<int> leaves_;
  // masks_[m][b]: generator mask of block b at level m.
  std::vector<std::vector<std::uint64_t>> masks_;
  bool dense_ = false;
};

/// Largest strand count for which the canonical covering is materialized.
inline constexpr int kMaxCoveringStrands = 22;

/// The canonical covering g_n: g_2 = sigma_1, g_n = (Phi_n(g_{n-1}), g_{n-1}).
CoveringTree base_sequence(int n);

/// The leaf of base_sequence(n) at alpha, by closed form.
Generator address_to_generator(const BinaryAddress& alpha, int n);

bool is_dense(const CoveringTree& c);

/// The (M_I2, M_I1)-decomposition (x_p, ..., x_1), listed left to right.
/// Odd-indexed entries lie in M_I1, even-indexed ones in M_I2. The trivial
/// braid yields the single entry (1).
std::vector<PositiveWord> alternating_decomposition(const PositiveWord& w, GeneratorSet i2, GeneratorSet i1);

/// One step of the iterated decomposition: x_r is extracted at address
/// theta, leaving `remainder` = x^(r).
struct DecompositionStep {
  int r = 0;
  GeneralAddress theta;
  BinaryAddress binary;
  Power entry;
  PositiveWord remainder{2};
};

struct IteratedDecomposition {
  PowerTree tree;
  std::vector<DecompositionStep> trace;
};

/// Decomposes w along the covering. Entries are listed with their address.
/// Throws ArgumentError when the covering is for a different strand count.
IteratedDecomposition iterated_decomposition(const PositiveWord& w, const CoveringTree& c, bool record_remainders = true);

/// One attempted division in the letterwise normal form algorithm.
struct NormalizationAttempt {
  int m = 0;
  BinaryAddress successor;
  Generator generator;
  bool divides = false;
};

/// Row k: the remaining braid w_k, the letters produced so far w'_k, the
/// current address, and the attempts that located the next letter.
struct NormalizationStep {
  int k = 0;
  PositiveWord remaining{2};
  PositiveWord produced{2};
  BinaryAddress address;
  std::vector<NormalizationAttempt> attempts;
};

/// The M-normal word equivalent to w. Throws ArgumentError on non-dense
/// coverings, for which a letterwise normal form need not exist.
PositiveWord mnormal(const PositiveWord& w, const CoveringTree& c,
                     std::vector<NormalizationStep>* trace = nullptr);

/// Replaces each exponent e at address theta by g_[theta]^e and concatenates.
PositiveWord reconstruct(const ExponentTree& exponents, const CoveringTree& c);

}  // namespace braidnf
