#include "braidnf/garside.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace braidnf {

GeneratorSet::GeneratorSet(std::initializer_list<int> indices) {
  for (int i : indices) insert(i);
}

GeneratorSet GeneratorSet::from_mask(std::uint64_t mask) {
  GeneratorSet s;
  s.bits_ = mask;
  return s;
}

GeneratorSet GeneratorSet::range(int first, int last) {
  GeneratorSet s;
  for (int i = first; i <= last; ++i) s.insert(i);
  return s;
}

void GeneratorSet::insert(int index) {
  if (index < 1 || index > 64) throw ArgumentError("generator index out of range: " + std::to_string(index));
  bits_ |= atom_bit(index);
}

std::vector<int> GeneratorSet::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

// ---------------------------------------------------------------------------
// SimpleFactor

SimpleFactor::SimpleFactor(int strands) : strands_(strands) {
  if (strands < 1 || strands > kMaxStrands) throw ArgumentError("strand count out of range");
  for (int k = 0; k < strands; ++k) perm_[k] = static_cast<std::uint8_t>(k);
}

SimpleFactor SimpleFactor::identity(int strands) { return SimpleFactor(strands); }

SimpleFactor SimpleFactor::atom(int strands, int index) {
  SimpleFactor s(strands);
  s.multiply_right(index);
  return s;
}

SimpleFactor SimpleFactor::half_twist(int strands) {
  SimpleFactor s(strands);
  for (int k = 0; k < strands; ++k) s.perm_[k] = static_cast<std::uint8_t>(strands - 1 - k);
  return s;
}

bool SimpleFactor::is_identity() const {
  for (int k = 0; k < strands_; ++k) {
    if (perm_[k] != k) return false;
  }
  return true;
}

int SimpleFactor::length() const {
  int inversions = 0;
  for (int a = 0; a < strands_; ++a) {
    for (int b = a + 1; b < strands_; ++b) inversions += perm_[a] > perm_[b];
  }
  return inversions;
}

std::uint64_t SimpleFactor::right_descents() const {
  std::uint64_t mask = 0;
  for (int i = 1; i < strands_; ++i) {
    if (perm_[i - 1] > perm_[i]) mask |= atom_bit(i);
  }
  return mask;
}

std::uint64_t SimpleFactor::left_descents() const {
  std::array<std::uint8_t, kMaxStrands> where{};
  for (int k = 0; k < strands_; ++k) where[perm_[k]] = static_cast<std::uint8_t>(k);
  std::uint64_t mask = 0;
  for (int i = 1; i < strands_; ++i) {
    if (where[i] < where[i - 1]) mask |= atom_bit(i);
  }
  return mask;
}

int SimpleFactor::position_of(int value) const {
  for (int k = 0; k < strands_; ++k) {
    if (perm_[k] == value) return k;
  }
  return -1;
}

void SimpleFactor::multiply_right(int index) { std::swap(perm_[index - 1], perm_[index]); }

void SimpleFactor::divide_right(int index) { std::swap(perm_[index - 1], perm_[index]); }

void SimpleFactor::multiply_left(int index) {
  const int a = position_of(index - 1);
  const int b = position_of(index);
  std::swap(perm_[a], perm_[b]);
}

void SimpleFactor::divide_left(int index) { multiply_left(index); }

SimpleFactor SimpleFactor::flipped() const {
  SimpleFactor out(strands_);
  for (int k = 0; k < strands_; ++k) {
    out.perm_[k] = static_cast<std::uint8_t>(strands_ - 1 - perm_[strands_ - 1 - k]);
  }
  return out;
}

std::vector<int> SimpleFactor::letters() const {
  SimpleFactor rest = *this;
  std::vector<int> reversed_letters;
  for (;;) {
    const std::uint64_t d = rest.right_descents();
    if (d == 0) break;
    const int i = std::countr_zero(d) + 1;
    rest.divide_right(i);
    reversed_letters.push_back(i);
  }
  return {reversed_letters.rbegin(), reversed_letters.rend()};
}

// ---------------------------------------------------------------------------
// GreedyForm

GreedyForm::GreedyForm(int strands) : strands_(strands) {
  if (strands < 1 || strands > kMaxStrands) throw ArgumentError("strand count out of range");
}

GreedyForm GreedyForm::from_word(const PositiveWord& w) {
  GreedyForm g(w.strands());
  g.multiply_right(w);
  return g;
}

int GreedyForm::length() const {
  int total = 0;
  for (const auto& s : factors_) total += s.length();
  return total;
}

// A pair (a, b) is right normal iff every right descent of a is a left
// descent of b, i.e. no atom can move from a into b keeping b simple.
// Restoring normality after factor `modified` grew on the left or shrank on
// the right takes one sweep toward the front; the sweep stops at the first
// pair that needs no transfer.
void GreedyForm::renormalize_leftward(std::size_t modified) {
  std::size_t j = modified;
  while (j > 0) {
    SimpleFactor& a = factors_[j - 1];
    SimpleFactor& b = factors_[j];
    bool moved = false;
    for (;;) {
      const std::uint64_t movable = a.right_descents() & ~b.left_descents();
      if (movable == 0) break;
      const int i = std::countr_zero(movable) + 1;
      a.divide_right(i);
      b.multiply_left(i);
      moved = true;
    }
    if (!moved) break;
    --j;
  }
  // Emptied factors bubble to the front.
  auto first_nontrivial =
      std::find_if(factors_.begin(), factors_.end(), [](const SimpleFactor& s) { return !s.is_identity(); });
  factors_.erase(factors_.begin(), first_nontrivial);
}

void GreedyForm::multiply_right(int index) {
  if (index < 1 || index >= strands_) throw ArgumentError("generator index out of range");
  factors_.push_back(SimpleFactor::atom(strands_, index));
  renormalize_leftward(factors_.size() - 1);
}

void GreedyForm::multiply_right(const PositiveWord& w) {
  for (int a : w.letters()) multiply_right(a);
}

void GreedyForm::divide_right(int index) {
  if (!right_divisible_by(index)) {
    throw NotARightDivisor("sigma_" + std::to_string(index) + " is not a right divisor");
  }
  factors_.back().divide_right(index);
  if (factors_.back().is_identity()) {
    factors_.pop_back();
    return;
  }
  renormalize_leftward(factors_.size() - 1);
}

void GreedyForm::flip() {
  for (auto& s : factors_) s = s.flipped();
}

PositiveWord GreedyForm::to_word() const {
  std::vector<int> letters;
  for (const auto& s : factors_) {
    const auto part = s.letters();
    letters.insert(letters.end(), part.begin(), part.end());
  }
  return PositiveWord(strands_, std::move(letters));
}

bool GreedyForm::is_right_normal() const {
  for (const auto& s : factors_) {
    if (s.is_identity()) return false;
  }
  for (std::size_t j = 1; j < factors_.size(); ++j) {
    if ((factors_[j - 1].right_descents() & ~factors_[j].left_descents()) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

GreedyForm greedy(const PositiveWord& w) { return GreedyForm::from_word(w); }

bool right_divides(const PositiveWord& w, Generator g) {
  if (g.index < 1 || g.index >= w.strands()) throw ArgumentError("generator index out of range");
  return greedy(w).right_divisible_by(g.index);
}

PositiveWord quotient(const PositiveWord& w, Generator g) {
  if (g.index < 1 || g.index >= w.strands()) throw ArgumentError("generator index out of range");
  GreedyForm x = greedy(w);
  x.divide_right(g.index);
  return x.to_word();
}

PositiveWord left_quotient_delta(Generator g, int n) {
  if (n < 2 || g.index < 1 || g.index >= n) throw ArgumentError("generator index out of range");
  SimpleFactor d = SimpleFactor::half_twist(n);
  d.divide_left(g.index);
  return PositiveWord(n, d.letters());
}

PositiveWord extract_tail(GreedyForm& x, GeneratorSet indices) {
  std::vector<int> reversed_tail;
  for (;;) {
    const std::uint64_t candidates = x.right_divisor_mask() & indices.mask();
    if (candidates == 0) break;
    const int i = std::countr_zero(candidates) + 1;
    x.divide_right(i);
    reversed_tail.push_back(i);
  }
  return PositiveWord(x.strands(), std::vector<int>(reversed_tail.rbegin(), reversed_tail.rend()));
}

TailSplit tail(const PositiveWord& w, GeneratorSet indices) {
  GreedyForm x = greedy(w);
  PositiveWord t = extract_tail(x, indices);
  return {std::move(t), x.to_word()};
}

bool equivalent(const PositiveWord& u, const PositiveWord& v) {
  if (u.size() != v.size()) return false;
  const int n = std::max(u.strands(), v.strands());
  return greedy(u.with_strands(n)) == greedy(v.with_strands(n));
}

}  // namespace braidnf
