#pragma once

// Addresses and iterated sequences (trees of uniform depth).

#include <cstdint>
#include <string>
#include <vector>

#include "braidnf/word.hpp"

namespace braidnf {

/// A fixed-length sequence of positive digits locating an entry in an
/// iterated sequence. Digits count entries from the right, starting at 1.
struct GeneralAddress {
  std::vector<int> digits;

  std::size_t size() const { return digits.size(); }
  friend bool operator==(const GeneralAddress&, const GeneralAddress&) = default;
};

/// A fixed-length sequence over {1, 2} locating a node of a covering
/// skeleton.
struct BinaryAddress {
  std::vector<int> digits;

  std::size_t size() const { return digits.size(); }
  /// The prefix of length m.
  BinaryAddress prefix(std::size_t m) const;
  friend bool operator==(const BinaryAddress&, const BinaryAddress&) = default;
};

/// 1^length.
GeneralAddress ones_general(std::size_t length);
BinaryAddress ones_binary(std::size_t length);

/// The m-successor: keep m digits, increment the next, pad with 1s.
GeneralAddress successor(const GeneralAddress& theta, std::size_t m);
/// The binary m-successor [theta^(m)].
BinaryAddress binary_successor(const BinaryAddress& alpha, std::size_t m);
/// [theta]: odd digits become 1, even digits become 2.
BinaryAddress binary_projection(const GeneralAddress& theta);

/// Digits concatenated ("3612"); dot separated when some digit exceeds 9.
std::string to_string(const GeneralAddress& theta);
std::string to_string(const BinaryAddress& alpha);
/// Parses "1212" or "3.12.1".
GeneralAddress parse_general_address(const std::string& text);
BinaryAddress parse_binary_address(const std::string& text);

/// An entry g^e of an atomic decomposition.
struct Power {
  int generator = 1;
  int exponent = 0;

  friend bool operator==(const Power&, const Power&) = default;
};

/// A k-sequence: a single entry for k = 0, a sequence of (k-1)-sequences
/// otherwise. Children are stored left to right, so children()[0] is the
/// entry with the largest index p.
template <class Leaf>
class IteratedSequence {
 public:
  IteratedSequence() = default;

  static IteratedSequence leaf(Leaf value) {
    IteratedSequence s;
    s.is_leaf_ = true;
    s.value_ = std::move(value);
    return s;
  }

  static IteratedSequence node(std::vector<IteratedSequence> children) {
    IteratedSequence s;
    s.is_leaf_ = false;
    s.children_ = std::move(children);
    return s;
  }

  bool is_leaf() const { return is_leaf_; }
  const Leaf& value() const { return value_; }
  const std::vector<IteratedSequence>& children() const { return children_; }
  std::vector<IteratedSequence>& children() { return children_; }
  std::size_t size() const { return children_.size(); }

  /// Depth along the leftmost path (uniform for well-formed trees).
  int depth() const { return is_leaf_ || children_.empty() ? 0 : 1 + children_.front().depth(); }

  bool has_uniform_depth(int expected) const {
    if (is_leaf_) return expected == 0;
    if (expected == 0 || children_.empty()) return false;
    for (const auto& c : children_) {
      if (!c.has_uniform_depth(expected - 1)) return false;
    }
    return true;
  }

  /// Leaves, left to right.
  std::vector<Leaf> unbracketing() const {
    std::vector<Leaf> out;
    collect(out);
    return out;
  }

  /// Addresses of the leaves, left to right.
  std::vector<GeneralAddress> address_list() const {
    std::vector<GeneralAddress> out;
    std::vector<int> prefix;
    collect_addresses(prefix, out);
    return out;
  }

  template <class F>
  auto map(F&& f) const -> IteratedSequence<decltype(f(std::declval<const Leaf&>()))> {
    using Out = IteratedSequence<decltype(f(std::declval<const Leaf&>()))>;
    if (is_leaf_) return Out::leaf(f(value_));
    std::vector<Out> mapped;
    mapped.reserve(children_.size());
    for (const auto& c : children_) mapped.push_back(c.map(f));
    return Out::node(std::move(mapped));
  }

  friend bool operator==(const IteratedSequence& a, const IteratedSequence& b) {
    if (a.is_leaf_ != b.is_leaf_) return false;
    return a.is_leaf_ ? a.value_ == b.value_ : a.children_ == b.children_;
  }

 private:
  void collect(std::vector<Leaf>& out) const {
    if (is_leaf_) {
      out.push_back(value_);
      return;
    }
    for (const auto& c : children_) c.collect(out);
  }

  void collect_addresses(std::vector<int>& prefix, std::vector<GeneralAddress>& out) const {
    if (is_leaf_) {
      out.push_back(GeneralAddress{prefix});
      return;
    }
    const int p = static_cast<int>(children_.size());
    for (int j = 0; j < p; ++j) {
      prefix.push_back(p - j);
      children_[j].collect_addresses(prefix, out);
      prefix.pop_back();
    }
  }

  bool is_leaf_ = true;
  Leaf value_{};
  std::vector<IteratedSequence> children_;
};

using PowerTree = IteratedSequence<Power>;
using ExponentTree = IteratedSequence<int>;

/// Rebuilds a tree from its unbracketing and address list (both left to
/// right). Throws ArgumentError when the addresses do not describe a tree.
template <class Leaf>
IteratedSequence<Leaf> assemble(const std::vector<Leaf>& entries, const std::vector<GeneralAddress>& addresses,
                                std::size_t level = 0, std::size_t begin = 0, std::size_t end = SIZE_MAX) {
  if (end == SIZE_MAX) {
    if (entries.size() != addresses.size() || entries.empty()) {
      throw ArgumentError("unbracketing and address list must be nonempty and of equal length");
    }
    end = entries.size();
  }
  if (level == addresses[begin].size()) {
    if (end - begin != 1) throw ArgumentError("duplicate address in address list");
    return IteratedSequence<Leaf>::leaf(entries[begin]);
  }
  std::vector<IteratedSequence<Leaf>> children;
  std::size_t k = begin;
  int expected = addresses[begin].digits.at(level);
  while (k < end) {
    const int digit = addresses[k].digits.at(level);
    if (digit != expected) throw ArgumentError("address list is not a complete tree");
    std::size_t j = k;
    while (j < end && addresses[j].digits.at(level) == digit) ++j;
    children.push_back(assemble(entries, addresses, level + 1, k, j));
    --expected;
    k = j;
  }
  if (expected != 0) throw ArgumentError("address list is not a complete tree");
  return IteratedSequence<Leaf>::node(std::move(children));
}

/// "((s3), (s2, s1^2), ...)" with "1" for trivial leaves.
std::string to_string(const PowerTree& tree);
/// "((1), (1, 2), ...)".
std::string to_string(const ExponentTree& tree);

/// The exponent sequence: each g^e replaced by e.
ExponentTree exponents(const PowerTree& tree);
/// Concatenation of the entries as a word.
PositiveWord concatenate(const PowerTree& tree, int strands);

}  // namespace braidnf
