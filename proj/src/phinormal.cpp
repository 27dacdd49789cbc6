#include "braidnf/phinormal.hpp"

#include <algorithm>

#include "braidnf/garside.hpp"
#include "braidnf/splitting.hpp"

namespace braidnf {

PositiveWord phi_normalize(const PositiveWord& w, std::vector<NormalizationStep>* trace) {
  if (w.strands() < 2) return w;
  return mnormal(w, base_sequence(w.strands()), trace);
}

bool is_phi_normal_by_addresses(const PositiveWord& w) {
  const int n = w.strands();
  if (n < 3) return true;
  GreedyForm x = greedy(w);
  BinaryAddress alpha = ones_binary(static_cast<std::size_t>(n - 2));
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    bool matched = false;
    for (std::size_t m = alpha.size() + 1; m-- > 0;) {
      const BinaryAddress next = binary_successor(alpha, m);
      const Generator g = address_to_generator(next, n);
      if (x.right_divisible_by(g.index)) {
        if (g.index != *it) return false;
        alpha = next;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
    x.divide_right(*it);
  }
  return true;
}

bool is_phi_normal_by_permutations(const PositiveWord& w) {
  const int n = w.strands();
  if (n < 3) return true;
  GreedyForm x = greedy(w);
  std::vector<int> pi(static_cast<std::size_t>(n - 1));
  for (int q = 0; q < n - 1; ++q) pi[q] = q + 1;

  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    std::size_t p = 0;
    while (p < pi.size() && !x.right_divisible_by(pi[p])) ++p;
    if (p == pi.size() || pi[p] != *it) return false;
    const int head = pi[p];
    std::vector<int> passed(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(p));
    const bool above = std::all_of(passed.begin(), passed.end(), [&](int v) { return v > head; });
    const bool below = std::all_of(passed.begin(), passed.end(), [&](int v) { return v < head; });
    if (!above && !below) throw InvariantBreach("permutation state splits around the selected atom");
    if (above) {
      std::sort(passed.begin(), passed.end());
    } else {
      std::sort(passed.begin(), passed.end(), std::greater<>());
    }
    pi[0] = head;
    std::copy(passed.begin(), passed.end(), pi.begin() + 1);
    x.divide_right(*it);
  }
  return true;
}

bool is_phi_normal(const PositiveWord& w) {
  const bool a = is_phi_normal_by_addresses(w);
  const bool b = is_phi_normal_by_permutations(w);
  if (a != b) throw InvariantBreach("normality recognizers disagree on " + format(w));
  return a;
}

int b3_min_exponents(int r) {
  if (r < 1) throw ArgumentError("block index starts at 1");
  return r == 1 ? 0 : r == 2 ? 1 : 2;
}

bool b3_normal_test(const std::vector<int>& exponents) {
  const int p = static_cast<int>(exponents.size());
  if (p == 0) throw ArgumentError("exponent profile is empty");
  for (int e : exponents) {
    if (e < 0) throw ArgumentError("negative exponent");
  }
  if (p == 1) return true;
  if (exponents.front() < 1) return false;
  for (int r = 1; r < p; ++r) {
    if (exponents[static_cast<std::size_t>(p - r)] < b3_min_exponents(r)) return false;
  }
  return true;
}

std::vector<int> b3_profile(const PositiveWord& w) {
  if (w.strands() != 3) throw ArgumentError("profile is defined on three strands");
  return word_exponents(w, 3).unbracketing();
}

}  // namespace braidnf
