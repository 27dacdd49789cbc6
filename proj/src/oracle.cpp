#include "braidnf/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

#include "braidnf/ordering.hpp"
#include "braidnf/splitting.hpp"

namespace braidnf {

std::size_t default_oracle_length(int n) {
  switch (n) {
    case 1:
    case 2:
      return SIZE_MAX;
    case 3:
      return 12;
    case 4:
      return 9;
    case 5:
      return 8;
    default:
      return 7;
  }
}

EquivalenceClass::EquivalenceClass(int strands, std::vector<PositiveWord> words)
    : strands_(strands), words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
}

bool EquivalenceClass::contains(const PositiveWord& w) const {
  return std::binary_search(words_.begin(), words_.end(), w.with_strands(strands_));
}

namespace {

using Key = std::string;

Key key_of(const std::vector<int>& letters) { return Key(letters.begin(), letters.end()); }

}  // namespace

EquivalenceClass equivalence_class(const PositiveWord& w, const OracleLimits& limits) {
  const std::size_t bound = limits.max_length ? limits.max_length : default_oracle_length(w.strands());
  if (w.size() > bound) {
    throw OracleBoundExceeded("word of length " + std::to_string(w.size()) + " exceeds the oracle bound " +
                              std::to_string(bound));
  }
  std::unordered_set<Key> seen{key_of(w.letters())};
  std::deque<Key> frontier{key_of(w.letters())};
  auto visit = [&](Key&& k) {
    if (seen.insert(k).second) {
      if (seen.size() > limits.max_class_size) throw OracleBoundExceeded("equivalence class exceeds size bound");
      frontier.push_back(std::move(k));
    }
  };
  while (!frontier.empty()) {
    Key cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      const int a = cur[j];
      const int b = cur[j + 1];
      if (std::abs(a - b) >= 2) {
        Key next = cur;
        std::swap(next[j], next[j + 1]);
        visit(std::move(next));
      } else if (std::abs(a - b) == 1 && j + 2 < cur.size() && cur[j + 2] == a) {
        Key next = cur;
        next[j] = static_cast<char>(b);
        next[j + 1] = static_cast<char>(a);
        next[j + 2] = static_cast<char>(b);
        visit(std::move(next));
      }
    }
  }
  std::vector<PositiveWord> words;
  words.reserve(seen.size());
  for (const auto& k : seen) words.emplace_back(w.strands(), std::vector<int>(k.begin(), k.end()));
  return EquivalenceClass(w.strands(), std::move(words));
}

bool oracle_right_divides(const PositiveWord& w, Generator g, const OracleLimits& limits) {
  const auto cls = equivalence_class(w, limits);
  return std::any_of(cls.words().begin(), cls.words().end(),
                     [&](const PositiveWord& v) { return !v.empty() && v[v.size() - 1] == g.index; });
}

bool oracle_equivalent(const PositiveWord& u, const PositiveWord& v, const OracleLimits& limits) {
  if (u.size() != v.size()) return false;
  const int n = std::max(u.strands(), v.strands());
  return equivalence_class(u.with_strands(n), limits).contains(v.with_strands(n));
}

PositiveWord oracle_tail(const PositiveWord& w, GeneratorSet indices, const OracleLimits& limits) {
  const auto cls = equivalence_class(w, limits);
  const PositiveWord* best = nullptr;
  std::size_t best_len = 0;
  for (const auto& v : cls.words()) {
    std::size_t len = 0;
    while (len < v.size() && indices.contains(v[v.size() - 1 - len])) ++len;
    if (!best || len > best_len) {
      best = &v;
      best_len = len;
    }
  }
  const auto& letters = best->letters();
  return PositiveWord(w.strands(), std::vector<int>(letters.end() - static_cast<std::ptrdiff_t>(best_len), letters.end()));
}

PositiveWord burckel_normal_of(const PositiveWord& w, const OracleLimits& limits) {
  const int n = w.strands();
  const auto cls = equivalence_class(w, limits);
  if (n < 3) return cls.words().front();
  const PositiveWord* best = nullptr;
  ExponentTree best_tree;
  for (const auto& v : cls.words()) {
    ExponentTree t = word_exponents(v, n);
    if (!best || shortlex_compare(t, best_tree) < 0) {
      best = &v;
      best_tree = std::move(t);
    }
  }
  return *best;
}

std::vector<PositiveWord> all_words(int n, std::size_t length) {
  if (n < 2) throw ArgumentError("enumeration requires n >= 2");
  std::vector<PositiveWord> out;
  std::vector<int> letters(length, 1);
  for (;;) {
    out.emplace_back(n, letters);
    std::size_t j = length;
    while (j > 0 && letters[j - 1] == n - 1) letters[--j] = 1;
    if (j == 0) break;
    ++letters[j - 1];
  }
  return out;
}

std::vector<PositiveWord> all_words_up_to(int n, std::size_t max_length) {
  std::vector<PositiveWord> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    auto part = all_words(n, len);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace braidnf
