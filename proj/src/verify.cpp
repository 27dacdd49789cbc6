#include "braidnf/verify.hpp"

#include <algorithm>
#include <map>

#include "braidnf/garside.hpp"
#include "braidnf/oracle.hpp"
#include "braidnf/ordering.hpp"
#include "braidnf/phinormal.hpp"

namespace braidnf {

namespace {

void record(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (r.mismatches++ == 0) r.example = what;
}

// Oracle class index of every word, keyed by letters.
std::map<std::vector<int>, std::size_t> class_ids(const std::vector<PositiveWord>& words) {
  std::map<std::vector<int>, std::size_t> ids;
  std::size_t next = 0;
  for (const auto& w : words) {
    if (ids.count(w.letters())) continue;
    const auto cls = equivalence_class(w);
    for (const auto& v : cls.words()) ids.emplace(v.letters(), next);
    ++next;
  }
  return ids;
}

}  // namespace

CheckResult check_right_divides(int n, const std::vector<PositiveWord>& words) {
  CheckResult r{"right_divides", n, 0, 0, {}};
  for (const auto& w : words) {
    for (int i = 1; i < n; ++i) {
      record(r, right_divides(w, Generator{i}) == oracle_right_divides(w, Generator{i}),
             format(w) + " by sigma_" + std::to_string(i));
    }
  }
  return r;
}

CheckResult check_equivalent(int n, const std::vector<PositiveWord>& words) {
  CheckResult r{"equivalent", n, 0, 0, {}};
  const auto ids = class_ids(words);
  std::map<std::size_t, std::vector<const PositiveWord*>> by_length;
  for (const auto& w : words) by_length[w.size()].push_back(&w);
  for (const auto& [len, bucket] : by_length) {
    for (const auto* u : bucket) {
      const std::size_t iu = ids.at(u->letters());
      for (const auto* v : bucket) {
        record(r, equivalent(*u, *v) == (iu == ids.at(v->letters())), format(*u) + " ~ " + format(*v));
      }
    }
  }
  return r;
}

CheckResult check_tails(int n, const std::vector<PositiveWord>& words) {
  CheckResult r{"tail", n, 0, 0, {}};
  for (const auto& w : words) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
      const GeneratorSet set = GeneratorSet::from_mask(m);
      const TailSplit t = tail(w, set);
      const PositiveWord o = oracle_tail(w, set);
      const bool ok = t.tail.size() == o.size() && equivalent(t.tail, o) && equivalent(t.rest * t.tail, w);
      record(r, ok, format(w) + " mask " + std::to_string(m));
    }
  }
  return r;
}

CheckResult check_normal_forms(int n, const std::vector<PositiveWord>& words) {
  CheckResult r{"phi_normalize = burckel", n, 0, 0, {}};
  for (const auto& w : words) record(r, phi_normalize(w) == burckel_normal_of(w), format(w));
  return r;
}

CheckResult check_recognizers(int n, const std::vector<PositiveWord>& words) {
  CheckResult r{"recognizers", n, 0, 0, {}};
  for (const auto& w : words) {
    const bool expected = phi_normalize(w) == w;
    record(r, is_phi_normal_by_addresses(w) == expected && is_phi_normal_by_permutations(w) == expected, format(w));
  }
  return r;
}

CheckResult check_route_agreement(int n, const std::vector<PositiveWord>& words) {
  CheckResult r{"compare routes", n, 0, 0, {}};
  std::vector<SplittingProfile> profiles;
  std::vector<ExponentTree> trees;
  profiles.reserve(words.size());
  trees.reserve(words.size());
  for (const auto& w : words) {
    profiles.push_back(splitting_profile(w, n));
    trees.push_back(canonical_exponents(w, n));
  }
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      record(r, compare_profiles(profiles[a], profiles[b]) == shortlex_compare(trees[a], trees[b]),
             format(words[a]) + " vs " + format(words[b]));
    }
  }
  return r;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

VerifyReport run_verification(VerifyLevel level) {
  VerifyReport report;
  report.level = level;
  const bool full = level == VerifyLevel::full;
  for (const auto& [n, len] : {std::pair{3, full ? 7 : 6}, std::pair{4, full ? 6 : 4}}) {
    const auto words = all_words_up_to(n, static_cast<std::size_t>(len));
    report.checks.push_back(check_right_divides(n, words));
    report.checks.push_back(check_equivalent(n, words));
    report.checks.push_back(check_tails(n, words));
    report.checks.push_back(check_normal_forms(n, words));
    report.checks.push_back(check_recognizers(n, words));
    report.checks.push_back(check_route_agreement(n, words));
  }
  return report;
}

std::string to_string(VerifyLevel level) { return level == VerifyLevel::full ? "full" : "quick"; }

}  // namespace braidnf
