#ifndef LINPROBE_SIMULATE_HPP
#define LINPROBE_SIMULATE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "linprobe/exact.hpp"

namespace linprobe {

/// Hash values h_1..h_n, each in [0, m).
struct HashSequence {
  unsigned m = 0;
  std::vector<unsigned> values;
};

/// Result of inserting a whole hash sequence by linear probing.
struct InsertionOutcome {
  std::vector<unsigned> positions;        // cell taken by each item
  std::uint64_t total_displacement = 0;   // sum of (q_k − h_k) mod m
  bool confined = false;                  // cell 0 still empty at the end
};

/// Displacement histogram from enumeration or sampling.
struct EmpiricalDistribution {
  unsigned m = 0;
  unsigned n = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // d -> count
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
};

/// splitmix64: the output stage of Java's SplittableRandom. Chosen as the
/// frozen RNG for reproducibility; the exact algorithm is part of the
/// output contract, so identical seeds give identical histograms on every
/// platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, bound) by rejection, bias-free.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Inserts every item of the sequence into an initially empty table,
/// probing h, h+1, h+2, ... (mod m) until an empty cell is found.
/// Requires n < m so every insertion succeeds.
InsertionOutcome linear_probe_insert(const HashSequence& seq);

/// Histogram of total displacement over all m^n hash sequences
/// (odometer order), optionally restricted to confined sequences.
/// Guarded at m^n <= 10^8.
EmpiricalDistribution exhaustive_distribution(unsigned m, unsigned n,
                                              bool confined_only);

/// Histogram from `trials` seeded random sequences. Same seed and
/// parameters reproduce the histogram bit for bit.
EmpiricalDistribution monte_carlo(unsigned m, unsigned n, std::uint64_t trials,
                                  std::uint64_t seed);

/// Checks, over sampled sequences (or all of them when samples == 0), that
/// the m rotations (h_k + j) mod m of a sequence share one displacement and
/// that exactly m−n of them are confined. On violation returns false and
/// fills *witness with the offending base sequence if provided.
bool rotation_symmetry_check(unsigned m, unsigned n, std::uint64_t samples,
                             std::uint64_t seed,
                             HashSequence* witness = nullptr);

}  // namespace linprobe

#endif
