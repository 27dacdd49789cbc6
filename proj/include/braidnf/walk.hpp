#pragma once

// Random walks X_{k+1} = sigma_i X_k (or X_k sigma_i) through B_n^+ with
// statistics of the n-splitting at checkpoints.

#include <cstdint>
#include <vector>

namespace braidnf {

struct WalkOptions {
  int strands = 4;
  int steps = 100;
  int trials = 10;
  std::uint64_t seed = 0;
  /// Multiply on the left (the default) or on the right.
  bool left = true;
  /// Checkpoint spacing; 0 picks steps / 20, at least 1. The final step is
  /// always a checkpoint.
  int every = 0;
  /// Number of splitting entries c_0 .. c_{R-1} tracked, counted from the
  /// right; missing entries count as length 0.
  int entries = 3;
  int threads = 1;
};

struct Moments {
  double mean = 0;
  /// Population variance over the trials.
  double variance = 0;
};

struct WalkCheckpoint {
  int step = 0;
  Moments breadth;
  std::vector<Moments> entries;
};

struct WalkReport {
  WalkOptions options;
  std::vector<WalkCheckpoint> checkpoints;
};

/// The seed of trial t: splitmix64 of the base seed advanced t + 1 times.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// Throws ArgumentError on bad options. Trials may run on several threads;
/// the report depends only on the options, not on the thread count.
WalkReport random_walk(const WalkOptions& options);

}  // namespace braidnf
