#include "braidnf/splitting.hpp"

#include <algorithm>

#include "braidnf/garside.hpp"
#include "braidnf/ordering.hpp"

namespace braidnf {

namespace {

void check_splitting_strands(const PositiveWord& w, int n) {
  if (n < 3) throw ArgumentError("splitting requires n >= 3");
  if (w.strands() > n) {
    for (int a : w.letters()) {
      if (a >= n) throw ArgumentError("word uses a generator outside B_" + std::to_string(n));
    }
  }
}

// Re-indexes a tree decomposed on m strands as one on m + 1 strands,
// flipped `times` times.
PowerTree lift(const PowerTree& t, int strands, int times) {
  return t.map([&](const Power& p) {
    return Power{times % 2 ? strands - p.generator : p.generator, p.exponent};
  });
}

PowerTree assemble_entries(const std::vector<PositiveWord>& entries, int n,
                           PowerTree (*recurse)(const PositiveWord&, int)) {
  const int p = static_cast<int>(entries.size());
  std::vector<PowerTree> children;
  children.reserve(entries.size());
  for (int j = 0; j < p; ++j) children.push_back(lift(recurse(entries[j], n - 1), n, p - 1 - j));
  return PowerTree::node(std::move(children));
}

}  // namespace

PositiveWord Splitting::reconstruct() const {
  PositiveWord out(strands);
  const int p = breadth();
  for (int j = 0; j < p; ++j) out.append(flip(entries[j].with_strands(strands), p - 1 - j));
  return out;
}

Splitting braid_splitting(const PositiveWord& w, int n) {
  check_splitting_strands(w, n);
  GreedyForm x = greedy(w.with_strands(n));
  const GeneratorSet lower = GeneratorSet::range(1, n - 2);
  Splitting s;
  s.strands = n;
  for (;;) {
    s.entries.push_back(greedy(extract_tail(x, lower)).to_word().with_strands(n - 1));
    if (x.is_identity()) break;
    x.flip();
  }
  std::reverse(s.entries.begin(), s.entries.end());
  return s;
}

PowerTree braid_decomposition(const PositiveWord& w, int n) {
  if (n == 2) {
    if (w.strands() > 2 && std::any_of(w.letters().begin(), w.letters().end(), [](int a) { return a != 1; })) {
      throw ArgumentError("word uses a generator outside B_2");
    }
    return PowerTree::leaf(Power{1, static_cast<int>(w.size())});
  }
  return assemble_entries(braid_splitting(w, n).entries, n, &braid_decomposition);
}

ExponentTree exponent_sequence(const PowerTree& d) { return exponents(d); }

Splitting word_splitting(const PositiveWord& w, int n) {
  check_splitting_strands(w, n);
  std::vector<int> rest = w.letters();
  Splitting s;
  s.strands = n;
  for (;;) {
    auto cut = rest.end();
    while (cut != rest.begin() && *(cut - 1) != n - 1) --cut;
    s.entries.emplace_back(n - 1, std::vector<int>(cut, rest.end()));
    rest.erase(cut, rest.end());
    if (rest.empty()) break;
    for (int& a : rest) a = n - a;
  }
  std::reverse(s.entries.begin(), s.entries.end());
  return s;
}

PowerTree word_decomposition(const PositiveWord& w, int n) {
  if (n == 2) {
    if (w.strands() > 2 && std::any_of(w.letters().begin(), w.letters().end(), [](int a) { return a != 1; })) {
      throw ArgumentError("word uses a generator outside B_2");
    }
    return PowerTree::leaf(Power{1, static_cast<int>(w.size())});
  }
  return assemble_entries(word_splitting(w, n).entries, n, &word_decomposition);
}

ExponentTree word_exponents(const PositiveWord& w, int n) { return exponents(word_decomposition(w, n)); }

SplittingVerdict validate_splitting(const std::vector<PositiveWord>& entries, int n) {
  if (n < 3) throw ArgumentError("splitting requires n >= 3");
  if (entries.empty()) throw ArgumentError("a splitting has at least one entry");
  for (const auto& x : entries) {
    for (int a : x.letters()) {
      if (a >= n - 1) throw ArgumentError("splitting entries must lie in B_" + std::to_string(n - 1));
    }
  }
  SplittingVerdict verdict;
  verdict.exact = n == 3;
  const int p = static_cast<int>(entries.size());
  if (p == 1) return verdict;

  auto fail = [&](std::string what) {
    verdict.valid = false;
    verdict.violated = std::move(what);
    return verdict;
  };
  // entries[p - r] is x_r.
  auto entry = [&](int r) { return entries[static_cast<std::size_t>(p - r)].with_strands(n - 1); };

  if (n == 3) {
    // Entries are powers of sigma_1; only the exponents matter.
    if (entry(p).size() < 1) return fail("x_p >= sigma_1");
    for (int r = p - 1; r >= 3; --r) {
      if (entry(r).size() < 2) return fail("x_" + std::to_string(r) + " >= sigma_1^2");
    }
    if (p >= 3 && entry(2).size() < 1) return fail("x_2 >= sigma_1");
    return verdict;
  }

  const int m = n - 1;
  const PositiveWord s1 = power(m, Generator{1}, 1);
  const PositiveWord d = delta_small(m);
  const PositiveWord d_s1 = d * s1;
  if (compare_plus(entry(p), s1, m) == std::strong_ordering::less) return fail("x_p >= sigma_1");
  for (int r = p - 1; r >= 3; --r) {
    if (compare_plus(entry(r), d_s1, m) == std::strong_ordering::less) {
      return fail("x_" + std::to_string(r) + " >= delta_" + std::to_string(m) + " sigma_1");
    }
  }
  if (p >= 3 && compare_plus(entry(2), d, m) == std::strong_ordering::less) {
    return fail("x_2 >= delta_" + std::to_string(m));
  }
  return verdict;
}

std::string format(const Splitting& s) {
  std::string out;
  for (std::size_t j = 0; j < s.entries.size(); ++j) {
    if (j) out += " ; ";
    out += s.entries[j].empty() ? std::string("()") : braidnf::format(s.entries[j]);
  }
  return out;
}

}  // namespace braidnf
