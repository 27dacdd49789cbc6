#include "braidnf/ordering.hpp"

#include <algorithm>
#include <map>

#include "braidnf/covering.hpp"
#include "braidnf/garside.hpp"
#include "braidnf/phinormal.hpp"
#include "braidnf/splitting.hpp"

namespace braidnf {

std::strong_ordering shortlex_compare(const ExponentTree& s, const ExponentTree& t) {
  if (s.is_leaf() != t.is_leaf()) throw ArgumentError("ShortLex compares trees of equal depth");
  if (s.is_leaf()) return s.value() <=> t.value();
  if (auto c = s.size() <=> t.size(); c != 0) return c;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (auto c = shortlex_compare(s.children()[j], t.children()[j]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

PositiveWord on_strands(const PositiveWord& w, int n) {
  if (n < 2) throw ArgumentError("comparison requires n >= 2");
  for (int a : w.letters()) {
    if (a >= n) throw ArgumentError("word uses a generator outside B_" + std::to_string(n));
  }
  return w.with_strands(n);
}

}  // namespace

SplittingProfile splitting_profile(const PositiveWord& w, int n) {
  const PositiveWord x = on_strands(w, n);
  SplittingProfile out;
  out.strands = n;
  out.length = static_cast<int>(x.size());
  if (n == 2) return out;
  for (const auto& e : braid_splitting(x, n).entries) out.entries.push_back(splitting_profile(e, n - 1));
  return out;
}

std::strong_ordering compare_profiles(const SplittingProfile& a, const SplittingProfile& b) {
  if (a.strands != b.strands) throw ArgumentError("profiles on different strand counts");
  if (a.strands == 2) return a.length <=> b.length;
  if (auto c = a.entries.size() <=> b.entries.size(); c != 0) return c;
  for (std::size_t j = 0; j < a.entries.size(); ++j) {
    if (auto c = compare_profiles(a.entries[j], b.entries[j]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ExponentTree canonical_exponents(const PositiveWord& w, int n) {
  const PositiveWord x = on_strands(w, n);
  return exponents(iterated_decomposition(x, base_sequence(n), false).tree);
}

std::strong_ordering compare_plus_by_splitting(const PositiveWord& x, const PositiveWord& y, int n) {
  const PositiveWord a = on_strands(x, n);
  const PositiveWord b = on_strands(y, n);
  if (n == 2) return a.size() <=> b.size();
  const Splitting sa = braid_splitting(a, n);
  const Splitting sb = braid_splitting(b, n);
  if (auto c = sa.breadth() <=> sb.breadth(); c != 0) return c;
  for (std::size_t j = 0; j < sa.entries.size(); ++j) {
    if (auto c = compare_plus_by_splitting(sa.entries[j], sb.entries[j], n - 1); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_plus_by_exponents(const PositiveWord& x, const PositiveWord& y, int n) {
  return shortlex_compare(canonical_exponents(x, n), canonical_exponents(y, n));
}

std::strong_ordering compare_plus(const PositiveWord& x, const PositiveWord& y, int n) {
  const PositiveWord a = on_strands(x, n);
  const PositiveWord b = on_strands(y, n);
  if (equivalent(a, b)) return std::strong_ordering::equal;
  if (n > kMaxCoveringStrands) return compare_plus_by_splitting(a, b, n);
#ifdef NDEBUG
  return compare_plus_by_exponents(a, b, n);
#else
  const auto route_a = compare_plus_by_splitting(a, b, n);
  const auto route_b = compare_plus_by_exponents(a, b, n);
  if (route_a != route_b) {
    throw InvariantBreach("comparison routes disagree on " + format(a) + " vs " + format(b));
  }
  return route_a;
#endif
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative:
      return "negative";
    case Sign::zero:
      return "zero";
    case Sign::positive:
      return "positive";
  }
  return "zero";
}

Sign sign(const SignedWord& w, std::optional<int> strands) {
  const int n = strands.value_or(w.strands());
  for (const auto& l : w.letters()) {
    if (l.index >= n) throw ArgumentError("word uses a generator outside B_" + std::to_string(n));
  }
  if (n < 2) return Sign::zero;
  // w = Delta^{-k} P with P positive. R holds Phi^k(P); appending a letter to
  // P appends its Phi^k image to R, and sigma_i^{-1} = c Delta^{-1} with
  // sigma_i c = Delta only bumps k, since Phi^{k+1}(Phi(P c)) = Phi^k(P c).
  std::vector<int> r;
  int k = 0;
  std::map<int, std::vector<int>> complement;
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      r.push_back(k % 2 ? n - l.index : l.index);
      continue;
    }
    auto it = complement.find(l.index);
    if (it == complement.end()) {
      it = complement.emplace(l.index, left_quotient_delta(Generator{l.index}, n).letters()).first;
    }
    for (int a : it->second) r.push_back(k % 2 ? n - a : a);
    ++k;
  }
  const PositiveWord p = flip(PositiveWord(n, std::move(r)), k);
  const auto c = compare_plus(power(delta(n), k), p, n);
  return c < 0 ? Sign::positive : c > 0 ? Sign::negative : Sign::zero;
}

OrdinalCNF::OrdinalCNF(std::vector<Term> terms) {
  std::map<int, std::uint64_t, std::greater<>> merged;
  for (const auto& t : terms) {
    if (t.exponent < 0) throw ArgumentError("ordinal exponents are non-negative");
    merged[t.exponent] += t.coefficient;
  }
  for (const auto& [e, c] : merged) {
    if (c != 0) terms_.push_back({e, c});
  }
}

std::strong_ordering ordinal_compare(const OrdinalCNF& a, const OrdinalCNF& b) {
  const auto& s = a.terms();
  const auto& t = b.terms();
  for (std::size_t j = 0; j < std::min(s.size(), t.size()); ++j) {
    if (auto c = s[j].exponent <=> t[j].exponent; c != 0) return c;
    if (auto c = s[j].coefficient <=> t[j].coefficient; c != 0) return c;
  }
  return s.size() <=> t.size();
}

std::string ordinal_format(const OrdinalCNF& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += t.exponent == 1 ? "w" : "w^" + std::to_string(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

OrdinalCNF rank_b3(const PositiveWord& x) {
  if (x.strands() != 3) throw ArgumentError("rank is defined on three strands");
  const std::vector<int> e = exponents(braid_decomposition(x, 3)).unbracketing();
  const int p = static_cast<int>(e.size());
  std::vector<OrdinalCNF::Term> terms;
  // e[p - r] is e_r.
  terms.push_back({p - 1, static_cast<std::uint64_t>(e[0])});
  for (int r = p - 1; r >= 1; --r) {
    const int excess = e[static_cast<std::size_t>(p - r)] - b3_min_exponents(r);
    if (excess < 0) throw InvariantBreach("splitting exponent below its minimum");
    terms.push_back({r - 1, static_cast<std::uint64_t>(excess)});
  }
  return OrdinalCNF(std::move(terms));
}

PositiveWord least_upper_bound_witness(int n, int p) {
  if (n < 2) throw ArgumentError("least upper bound requires n >= 2");
  if (p < 1) throw ArgumentError("breadth bound must be at least 1");
  if (p == 1) return power(n, Generator{n - 1}, 1);
  return delta_hat(n, p - 1);
}

}  // namespace braidnf
