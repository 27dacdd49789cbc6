// Command-line front end. Words are lists of generator indices separated by
// spaces or commas ("1 2 -1"); the empty string is the trivial braid.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "braidnf/covering.hpp"
#include "braidnf/oracle.hpp"
#include "braidnf/ordering.hpp"
#include "braidnf/phinormal.hpp"
#include "braidnf/splitting.hpp"
#include "braidnf/verify.hpp"
#include "braidnf/walk.hpp"
#include "json.hpp"

namespace {

using braidnf::PositiveWord;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitOracle = 4;

const char* const kFooter = R"HELP(Words: generator indices separated by spaces or commas, negative for
inverses in `sign`. "" is the trivial braid. Without --strands the strand
count is one more than the largest index (at least 2).

Output: plain text by default; --json prints one JSON document.
  normalize  the word; --trace adds CSV rows
             k,address,m,successor,generator,divides
             (one row per attempted division, blank fields on the final row)
  split      entries from the left separated by " ; ", "()" for trivial
  decompose  the tree, e.g. ((s3), (s2, s1^2)); --trace adds tab-separated
             rows r, remainder, theta, [theta], entry
  compare    one of < = >
  sign       negative, zero or positive
  rank       Cantor normal form, w for omega, e.g. w^3*2 + w + 4
  walk       CSV: step,breadth_mean,breadth_var,c0_mean,c0_var,...
             c0 is the rightmost splitting entry; variances are population
             variances over the trials
  verify     one line per check: PASS|FAIL name n=.. cases=.. mismatches=..

Exit codes: 0 ok, 2 usage error, 3 internal invariant breach or failed
verification, 4 oracle bound exceeded.)HELP";

std::string power_label(const braidnf::Power& p) {
  if (p.exponent == 0) return "1";
  std::string s = "s" + std::to_string(p.generator);
  if (p.exponent != 1) s += "^" + std::to_string(p.exponent);
  return s;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw braidnf::ArgumentError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  int strands = 0;
  bool json_out = false;

  std::optional<int> n() const { return strands > 0 ? std::optional<int>(strands) : std::nullopt; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-n,--strands", c.strands, "Number of strands")->check(CLI::Range(2, braidnf::kMaxStrands));
  cmd->add_flag("--json", c.json_out, "Print JSON");
}

PositiveWord positive(const std::string& text, const Common& c) { return braidnf::parse_positive(text, c.n()); }

json trace_json(const std::vector<braidnf::NormalizationStep>& trace) {
  json rows = json::array();
  for (const auto& s : trace) {
    json attempts = json::array();
    for (const auto& a : s.attempts) {
      attempts.push_back({{"m", a.m},
                          {"successor", to_string(a.successor)},
                          {"generator", a.generator.index},
                          {"divides", a.divides}});
    }
    rows.push_back({{"k", s.k},
                    {"address", to_string(s.address)},
                    {"remaining", format(s.remaining)},
                    {"produced", format(s.produced)},
                    {"attempts", attempts}});
  }
  return rows;
}

int run_normalize(const Common& c, const std::string& text, bool trace) {
  const PositiveWord w = positive(text, c);
  std::vector<braidnf::NormalizationStep> steps;
  const PositiveWord nf = braidnf::phi_normalize(w, trace ? &steps : nullptr);
  if (c.json_out) {
    json out{{"strands", w.strands()}, {"word", format(nf)}};
    if (trace) out["trace"] = trace_json(steps);
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << format(nf) << '\n';
  if (!trace) return 0;
  std::cout << "k,address,m,successor,generator,divides\n";
  for (const auto& s : steps) {
    if (s.attempts.empty()) std::cout << s.k << ',' << to_string(s.address) << ",,,,\n";
    for (const auto& a : s.attempts) {
      std::cout << s.k << ',' << to_string(s.address) << ',' << a.m << ',' << to_string(a.successor) << ','
                << a.generator.index << ',' << (a.divides ? "yes" : "no") << '\n';
    }
  }
  return 0;
}

int run_split(const Common& c, const std::string& text) {
  const PositiveWord w = positive(text, c);
  const braidnf::Splitting s = braidnf::braid_splitting(w, w.strands());
  if (c.json_out) {
    json entries = json::array();
    for (const auto& e : s.entries) entries.push_back(format(e));
    std::cout << json{{"strands", s.strands}, {"breadth", s.breadth()}, {"entries", entries}}.dump() << '\n';
  } else {
    std::cout << format(s) << '\n';
  }
  return 0;
}

int run_decompose(const Common& c, const std::string& text, const std::string& covering_path, bool trace) {
  const PositiveWord w = positive(text, c);
  const braidnf::CoveringTree cov = covering_path.empty()
                                        ? braidnf::base_sequence(w.strands())
                                        : braidnf::CoveringTree::from_json(read_file(covering_path), w.strands());
  const auto d = braidnf::iterated_decomposition(w, cov, trace);
  if (c.json_out) {
    json out{{"strands", w.strands()}, {"tree", to_string(d.tree)}, {"exponents", to_string(exponents(d.tree))}};
    if (trace) {
      json rows = json::array();
      for (const auto& s : d.trace) {
        rows.push_back({{"r", s.r},
                        {"remainder", format(s.remainder)},
                        {"theta", to_string(s.theta)},
                        {"binary", to_string(s.binary)},
                        {"entry", power_label(s.entry)}});
      }
      out["trace"] = rows;
    }
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << to_string(d.tree) << '\n';
  if (!trace) return 0;
  std::cout << "r\tremainder\ttheta\t[theta]\tentry\n";
  std::cout << "0\t" << format(w) << "\t\t\t\n";
  for (const auto& s : d.trace) {
    std::cout << s.r << '\t' << format(s.remainder) << '\t' << to_string(s.theta) << '\t' << to_string(s.binary)
              << '\t' << power_label(s.entry) << '\n';
  }
  return 0;
}

int run_compare(const Common& c, const std::string& a, const std::string& b) {
  PositiveWord x = positive(a, c);
  PositiveWord y = positive(b, c);
  const int n = std::max(x.strands(), y.strands());
  const auto r = braidnf::compare_plus(x, y, n);
  const char* verdict = r < 0 ? "<" : r > 0 ? ">" : "=";
  if (c.json_out) {
    std::cout << json{{"strands", n}, {"verdict", verdict}}.dump() << '\n';
  } else {
    std::cout << verdict << '\n';
  }
  return 0;
}

int run_sign(const Common& c, const std::string& text) {
  const braidnf::SignedWord w = braidnf::parse_signed(text, c.n());
  const std::string s = to_string(braidnf::sign(w));
  if (c.json_out) {
    std::cout << json{{"strands", w.strands()}, {"sign", s}}.dump() << '\n';
  } else {
    std::cout << s << '\n';
  }
  return 0;
}

int run_rank(const Common& c, const std::string& text) {
  const PositiveWord w = braidnf::parse_positive(text, 3);
  const braidnf::OrdinalCNF r = braidnf::rank_b3(w);
  if (c.json_out) {
    json terms = json::array();
    for (const auto& t : r.terms()) terms.push_back({{"exponent", t.exponent}, {"coefficient", t.coefficient}});
    std::cout << json{{"rank", ordinal_format(r)}, {"terms", terms}}.dump() << '\n';
  } else {
    std::cout << ordinal_format(r) << '\n';
  }
  return 0;
}

int run_walk(const Common& c, braidnf::WalkOptions o) {
  if (c.strands > 0) o.strands = c.strands;
  const braidnf::WalkReport r = braidnf::random_walk(o);
  if (c.json_out) {
    json cps = json::array();
    for (const auto& cp : r.checkpoints) {
      json entries = json::array();
      for (std::size_t j = 0; j < cp.entries.size(); ++j) {
        entries.push_back({{"r", j}, {"mean", cp.entries[j].mean}, {"variance", cp.entries[j].variance}});
      }
      cps.push_back({{"step", cp.step},
                     {"breadth", {{"mean", cp.breadth.mean}, {"variance", cp.breadth.variance}}},
                     {"entries", entries}});
    }
    std::cout << json{{"strands", o.strands},
                      {"steps", o.steps},
                      {"trials", o.trials},
                      {"seed", o.seed},
                      {"direction", o.left ? "left" : "right"},
                      {"checkpoints", cps}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << "step,breadth_mean,breadth_var";
  for (int j = 0; j < o.entries; ++j) std::cout << ",c" << j << "_mean,c" << j << "_var";
  std::cout << '\n';
  for (const auto& cp : r.checkpoints) {
    std::cout << cp.step << ',' << fixed(cp.breadth.mean) << ',' << fixed(cp.breadth.variance);
    for (const auto& m : cp.entries) std::cout << ',' << fixed(m.mean) << ',' << fixed(m.variance);
    std::cout << '\n';
  }
  return 0;
}

int run_verify(const Common& c, const std::string& level) {
  const auto report = braidnf::run_verification(level == "full" ? braidnf::VerifyLevel::full : braidnf::VerifyLevel::quick);
  if (c.json_out) {
    json checks = json::array();
    for (const auto& k : report.checks) {
      checks.push_back({{"name", k.name},
                        {"strands", k.strands},
                        {"cases", k.cases},
                        {"mismatches", k.mismatches},
                        {"example", k.example},
                        {"passed", k.passed()}});
    }
    std::cout << json{{"level", level}, {"passed", report.passed()}, {"checks", checks}}.dump() << '\n';
  } else {
    for (const auto& k : report.checks) {
      std::cout << (k.passed() ? "PASS " : "FAIL ") << k.name << " n=" << k.strands << " cases=" << k.cases
                << " mismatches=" << k.mismatches;
      if (!k.passed()) std::cout << " first=" << k.example;
      std::cout << '\n';
    }
  }
  return report.passed() ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, splittings and the well-order of positive braids"};
  app.footer(kFooter);
  app.require_subcommand(1);

  Common common;
  std::string word;
  std::string word2;
  bool trace = false;
  std::string covering;
  std::string level = "quick";
  braidnf::WalkOptions walk;
  walk.threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  auto* normalize = app.add_subcommand("normalize", "Phi-normal word of a positive braid");
  add_common(normalize, common);
  normalize->add_flag("--trace", trace, "Append the per-letter trace as CSV");
  normalize->add_option("WORD", word, "Positive word")->required();

  auto* split = app.add_subcommand("split", "n-splitting of a positive braid");
  add_common(split, common);
  split->add_option("WORD", word, "Positive word")->required();

  auto* decompose = app.add_subcommand("decompose", "Iterated decomposition along a covering");
  add_common(decompose, common);
  decompose->add_option("--covering", covering, "JSON file with nested [digit-2, digit-1] pairs of atoms")
      ->check(CLI::ExistingFile);
  decompose->add_flag("--trace", trace, "Append the step-by-step trace");
  decompose->add_option("WORD", word, "Positive word")->required();

  auto* compare = app.add_subcommand("compare", "Compare two positive braids in the well-order");
  add_common(compare, common);
  compare->add_option("WORD1", word, "Positive word")->required();
  compare->add_option("WORD2", word2, "Positive word")->required();

  auto* sign = app.add_subcommand("sign", "Sign of a braid word in the braid order");
  add_common(sign, common);
  sign->add_option("SIGNEDWORD", word, "Signed word")->required();

  auto* rank = app.add_subcommand("rank", "Ordinal rank of a 3-strand positive braid");
  rank->add_flag("--json", common.json_out, "Print JSON");
  rank->add_option("WORD", word, "Positive word on 3 strands")->required();

  auto* walk_cmd = app.add_subcommand("walk", "Splitting statistics along random walks");
  add_common(walk_cmd, common);
  walk_cmd->add_option("--steps", walk.steps, "Walk length")->check(CLI::PositiveNumber);
  walk_cmd->add_option("--trials", walk.trials, "Independent walks")->check(CLI::PositiveNumber);
  walk_cmd->add_option("--seed", walk.seed, "Base seed; trial t uses a splitmix64-derived seed");
  walk_cmd->add_option("--every", walk.every, "Checkpoint spacing (default steps/20)")->check(CLI::NonNegativeNumber);
  walk_cmd->add_option("--entries", walk.entries, "Entries c_0.. tracked from the right")
      ->check(CLI::Range(0, 64));
  walk_cmd->add_option("--threads", walk.threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* left = walk_cmd->add_flag("--left", "Multiply on the left (default)");
  auto* right = walk_cmd->add_flag("--right", "Multiply on the right");
  left->excludes(right);
  bool csv = false;
  walk_cmd->add_flag("--csv", csv, "CSV output (default)")->excludes("--json");

  auto* verify = app.add_subcommand("verify", "Exhaustive agreement checks against the oracle");
  verify->add_flag("--json", common.json_out, "Print JSON");
  verify->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*normalize) return run_normalize(common, word, trace);
    if (*split) return run_split(common, word);
    if (*decompose) return run_decompose(common, word, covering, trace);
    if (*compare) return run_compare(common, word, word2);
    if (*sign) return run_sign(common, word);
    if (*rank) return run_rank(common, word);
    if (*walk_cmd) {
      walk.left = right->count() == 0;
      if (common.strands == 0) common.strands = walk.strands;
      return run_walk(common, walk);
    }
    if (*verify) return run_verify(common, level);
  } catch (const braidnf::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const braidnf::OracleBoundExceeded& e) {
    std::cerr << "oracle bound exceeded: " << e.what() << '\n';
    return kExitOracle;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant breach: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}
