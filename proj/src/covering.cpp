#include "braidnf/covering.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace braidnf {

namespace {

std::uint64_t all_atoms(int n) { return n <= 1 ? 0 : (n - 1 == 64 ? ~std::uint64_t{0} : atom_bit(n) - 1); }

}  // namespace

CoveringTree::CoveringTree(int strands, int depth, std::vector<int> leaves)
    : strands_(strands), depth_(depth), leaves_(std::move(leaves)) {
  if (strands < 2 || strands > kMaxStrands) throw ArgumentError("covering strand count out of range");
  if (depth < 0 || depth > 30) throw ArgumentError("covering depth out of range");
  if (leaves_.size() != (std::size_t{1} << depth)) {
    throw ArgumentError("covering of depth " + std::to_string(depth) + " needs " +
                        std::to_string(std::size_t{1} << depth) + " leaves");
  }
  for (int g : leaves_) {
    if (g < 1 || g >= strands) throw ArgumentError("covering leaf sigma_" + std::to_string(g) + " out of range");
  }

  masks_.resize(static_cast<std::size_t>(depth) + 1);
  masks_[depth].resize(leaves_.size());
  for (std::size_t b = 0; b < leaves_.size(); ++b) masks_[depth][b] = atom_bit(leaves_[b]);
  for (int m = depth - 1; m >= 0; --m) {
    const auto& below = masks_[m + 1];
    auto& level = masks_[m];
    level.resize(below.size() / 2);
    for (std::size_t b = 0; b < level.size(); ++b) level[b] = below[2 * b] | below[2 * b + 1];
  }
  if (masks_[0][0] != all_atoms(strands)) throw ArgumentError("covering leaves do not generate every atom");

  // No-gap condition at every internal node beta:
  //   M_beta = M_beta1 + <g_{beta2 1...1}>  and  M_beta = M_beta2 + <g_{beta1 1...1}>.
  // In block terms the children of block b are 2b (digit 2) and 2b+1 (digit 1);
  // the rightmost leaf of a block is its last leaf.
  dense_ = true;
  for (int m = 0; m < depth && dense_; ++m) {
    const std::size_t span = std::size_t{1} << (depth - m - 1);
    for (std::size_t b = 0; b < masks_[m].size(); ++b) {
      const std::uint64_t whole = masks_[m][b];
      const std::uint64_t left = masks_[m + 1][2 * b];
      const std::uint64_t right = masks_[m + 1][2 * b + 1];
      const std::uint64_t left_last = atom_bit(leaves_[(2 * b + 1) * span - 1]);
      const std::uint64_t right_last = atom_bit(leaves_[(2 * b + 2) * span - 1]);
      if ((right | left_last) != whole || (left | right_last) != whole) {
        dense_ = false;
        break;
      }
    }
  }
}

std::size_t CoveringTree::block_of(const BinaryAddress& prefix) const {
  if (prefix.size() > static_cast<std::size_t>(depth_)) throw ArgumentError("address longer than covering depth");
  std::size_t b = 0;
  for (int d : prefix.digits) {
    if (d != 1 && d != 2) throw ArgumentError("binary address digits must be 1 or 2");
    b = 2 * b + static_cast<std::size_t>(2 - d);
  }
  return b;
}

Generator CoveringTree::leaf(const BinaryAddress& alpha) const {
  if (alpha.size() != static_cast<std::size_t>(depth_)) throw ArgumentError("leaf address has wrong length");
  return Generator{leaves_[block_of(alpha)]};
}

GeneratorSet CoveringTree::submonoid(const BinaryAddress& prefix) const {
  return GeneratorSet::from_mask(masks_[prefix.size()][block_of(prefix)]);
}

namespace {

int json_depth(const nlohmann::json& j) {
  if (j.is_number_integer()) return 0;
  if (!j.is_array() || j.size() != 2) throw ArgumentError("covering JSON must be nested 2-arrays of integers");
  const int a = json_depth(j[0]);
  const int b = json_depth(j[1]);
  if (a != b) throw ArgumentError("covering JSON must have uniform depth");
  return a + 1;
}

void json_leaves(const nlohmann::json& j, std::vector<int>& out) {
  if (j.is_number_integer()) {
    out.push_back(j.get<int>());
    return;
  }
  json_leaves(j[0], out);
  json_leaves(j[1], out);
}

nlohmann::json json_block(const std::vector<int>& leaves, std::size_t begin, std::size_t end) {
  if (end - begin == 1) return leaves[begin];
  const std::size_t mid = begin + (end - begin) / 2;
  return nlohmann::json::array({json_block(leaves, begin, mid), json_block(leaves, mid, end)});
}

}  // namespace

CoveringTree CoveringTree::from_json(const std::string& text, int strands) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("covering JSON: ") + e.what());
  }
  const int depth = json_depth(j);
  std::vector<int> leaves;
  json_leaves(j, leaves);
  return CoveringTree(strands, depth, std::move(leaves));
}

std::string CoveringTree::to_json() const { return json_block(leaves_, 0, leaves_.size()).dump(); }

CoveringTree base_sequence(int n) {
  if (n < 2) throw ArgumentError("base sequence requires n >= 2");
  if (n > kMaxCoveringStrands) {
    throw ArgumentError("base sequence is materialized only up to " + std::to_string(kMaxCoveringStrands) +
                        " strands");
  }
  std::vector<int> leaves{1};
  for (int m = 3; m <= n; ++m) {
    std::vector<int> next;
    next.reserve(2 * leaves.size());
    for (int g : leaves) next.push_back(m - g);
    next.insert(next.end(), leaves.begin(), leaves.end());
    leaves = std::move(next);
  }
  return CoveringTree(n, n - 2, std::move(leaves));
}

Generator address_to_generator(const BinaryAddress& alpha, int n) {
  if (n < 2 || alpha.size() != static_cast<std::size_t>(n - 2)) {
    throw ArgumentError("address length must be n - 2");
  }
  int sum = 0;
  int r = 0;
  for (std::size_t pos = 0; pos < alpha.size(); ++pos) {
    if (alpha.digits[pos] == 2) {
      ++r;
      sum += (r % 2 == 1 ? -1 : 1) * static_cast<int>(pos + 1);
    } else if (alpha.digits[pos] != 1) {
      throw ArgumentError("binary address digits must be 1 or 2");
    }
  }
  return Generator{sum + (r % 2 == 0 ? 1 : n)};
}

bool is_dense(const CoveringTree& c) { return c.is_dense(); }

std::vector<PositiveWord> alternating_decomposition(const PositiveWord& w, GeneratorSet i2, GeneratorSet i1) {
  const int n = w.strands();
  if ((i1 | i2).mask() != all_atoms(n)) throw ArgumentError("index sets must together cover every generator");
  GreedyForm x = greedy(w);
  std::vector<PositiveWord> entries;
  for (int r = 1;; ++r) {
    entries.push_back(extract_tail(x, r % 2 == 1 ? i1 : i2));
    if (x.is_identity()) break;
  }
  std::reverse(entries.begin(), entries.end());
  return entries;
}

IteratedDecomposition iterated_decomposition(const PositiveWord& w, const CoveringTree& c, bool record_remainders) {
  if (w.strands() != c.strands()) throw ArgumentError("word and covering have different strand counts");
  const auto k = static_cast<std::size_t>(c.depth());
  GreedyForm x = greedy(w);
  GeneralAddress theta = ones_general(k);
  std::vector<Power> entries;
  std::vector<GeneralAddress> addresses;
  IteratedDecomposition out;

  for (int r = 1;; ++r) {
    const BinaryAddress alpha = binary_projection(theta);
    const Generator g = c.leaf(alpha);
    int e = 0;
    while (x.right_divisible_by(g.index)) {
      x.divide_right(g.index);
      ++e;
    }
    entries.push_back(Power{g.index, e});
    addresses.push_back(theta);
    DecompositionStep step;
    step.r = r;
    step.theta = theta;
    step.binary = alpha;
    step.entry = Power{g.index, e};
    if (record_remainders) step.remainder = x.to_word();
    out.trace.push_back(std::move(step));
    if (x.is_identity()) break;

    // Longest proper prefix whose submonoid still meets the remainder.
    std::optional<std::size_t> m;
    for (std::size_t len = k; len-- > 0;) {
      if ((c.submonoid(alpha.prefix(len)).mask() & x.right_divisor_mask()) != 0) {
        m = len;
        break;
      }
    }
    if (!m) throw InvariantBreach("covering does not reach a right divisor of the remainder");
    theta = successor(theta, *m);
  }

  std::reverse(entries.begin(), entries.end());
  std::reverse(addresses.begin(), addresses.end());
  out.tree = assemble(entries, addresses);
  return out;
}

PositiveWord mnormal(const PositiveWord& w, const CoveringTree& c, std::vector<NormalizationStep>* trace) {
  if (w.strands() != c.strands()) throw ArgumentError("word and covering have different strand counts");
  if (!c.is_dense()) throw ArgumentError("covering is not dense; no letterwise normal form");
  const auto k = static_cast<std::size_t>(c.depth());
  GreedyForm x = greedy(w);
  BinaryAddress alpha = ones_binary(k);
  std::vector<int> reversed_letters;
  if (trace) trace->clear();

  auto produced = [&] {
    return PositiveWord(w.strands(), std::vector<int>(reversed_letters.rbegin(), reversed_letters.rend()));
  };

  for (int step = 0;; ++step) {
    NormalizationStep row;
    if (trace) {
      row.k = step;
      row.remaining = x.to_word();
      row.produced = produced();
      row.address = alpha;
    }
    if (x.is_identity()) {
      if (trace) trace->push_back(std::move(row));
      break;
    }
    bool found = false;
    for (std::size_t m = k + 1; m-- > 0;) {
      const BinaryAddress next = binary_successor(alpha, m);
      const Generator g = c.leaf(next);
      const bool divides = x.right_divisible_by(g.index);
      if (trace) row.attempts.push_back({static_cast<int>(m), next, g, divides});
      if (divides) {
        x.divide_right(g.index);
        reversed_letters.push_back(g.index);
        alpha = next;
        found = true;
        break;
      }
    }
    if (trace) trace->push_back(std::move(row));
    if (!found) throw InvariantBreach("no successor generator divides the remainder");
  }
  return produced();
}

PositiveWord reconstruct(const ExponentTree& exponents, const CoveringTree& c) {
  if (!exponents.has_uniform_depth(c.depth())) throw ArgumentError("exponent tree shape does not match covering depth");
  const auto values = exponents.unbracketing();
  const auto addresses = exponents.address_list();
  PositiveWord out(c.strands());
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 0) throw ArgumentError("negative exponent in exponent tree");
    const Generator g = c.leaf(binary_projection(addresses[j]));
    for (int e = 0; e < values[j]; ++e) out.push_back(g.index);
  }
  return out;
}

}  // namespace braidnf
