#include "braidnf/walk.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <thread>

#include "braidnf/garside.hpp"
#include "braidnf/splitting.hpp"

namespace braidnf {

namespace {

std::vector<int> checkpoint_steps(const WalkOptions& o) {
  const int every = o.every > 0 ? o.every : std::max(1, o.steps / 20);
  std::vector<int> out;
  for (int k = every; k < o.steps; k += every) out.push_back(k);
  out.push_back(o.steps);
  return out;
}

// samples[c * (R + 1)] is the breadth at checkpoint c, followed by |c_0|..|c_{R-1}|.
std::vector<int> run_trial(const WalkOptions& o, const std::vector<int>& checkpoints, int trial) {
  const int n = o.strands;
  const auto width = static_cast<std::size_t>(o.entries + 1);
  std::vector<int> samples(checkpoints.size() * width, 0);
  std::mt19937_64 rng(trial_seed(o.seed, trial));
  std::uniform_int_distribution<int> pick(1, n - 1);
  // Left multiplication is right multiplication of the reversed braid.
  GreedyForm g(n);
  std::size_t next = 0;
  for (int k = 1; k <= o.steps; ++k) {
    g.multiply_right(pick(rng));
    if (k != checkpoints[next]) continue;
    const PositiveWord w = o.left ? reversed(g.to_word()) : g.to_word();
    const Splitting s = braid_splitting(w, n);
    const int p = s.breadth();
    int* row = samples.data() + next * width;
    row[0] = p;
    for (int r = 0; r < o.entries && r < p; ++r) row[r + 1] = static_cast<int>(s.entries[static_cast<std::size_t>(p - 1 - r)].size());
    ++next;
  }
  return samples;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

WalkReport random_walk(const WalkOptions& options) {
  const WalkOptions& o = options;
  if (o.strands < 3 || o.strands > kMaxStrands) throw ArgumentError("walk needs 3 <= strands <= 64");
  if (o.steps < 1) throw ArgumentError("walk needs at least one step");
  if (o.trials < 1) throw ArgumentError("walk needs at least one trial");
  if (o.entries < 0) throw ArgumentError("entry count must be non-negative");
  if (o.every < 0) throw ArgumentError("checkpoint spacing must be non-negative");
  const std::vector<int> checkpoints = checkpoint_steps(o);

  std::vector<std::vector<int>> results(static_cast<std::size_t>(o.trials));
  const int threads = std::clamp(o.threads, 1, o.trials);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int trial = t; trial < o.trials; trial += threads) {
          results[static_cast<std::size_t>(trial)] = run_trial(o, checkpoints, trial);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  WalkReport report;
  report.options = o;
  const auto width = static_cast<std::size_t>(o.entries + 1);
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    std::vector<Moments> m(width);
    for (std::size_t j = 0; j < width; ++j) {
      double sum = 0;
      double sq = 0;
      for (const auto& r : results) {
        const double v = r[c * width + j];
        sum += v;
        sq += v * v;
      }
      const double mean = sum / o.trials;
      m[j] = {mean, std::max(0.0, sq / o.trials - mean * mean)};
    }
    report.checkpoints.push_back({checkpoints[c], m[0], std::vector<Moments>(m.begin() + 1, m.end())});
  }
  return report;
}

}  // namespace braidnf
