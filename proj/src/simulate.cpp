#include "linprobe/simulate.hpp"

#include <stdexcept>

namespace linprobe {

namespace {

constexpr std::uint64_t kExhaustiveGuard = 100000000ULL;  // 10^8 sequences

void check_instance(unsigned m, unsigned n) {
  if (m == 0 || n >= m)
    throw std::invalid_argument("linear probing instance requires n < m");
}

// m^n if it stays below the guard, otherwise 0
std::uint64_t sequence_count(unsigned m, unsigned n) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > kExhaustiveGuard / m) return 0;
    total *= m;
  }
  return total;
}

// Insertion without materializing positions; used by the bulk paths.
void simulate_displacement(const std::vector<unsigned>& values, unsigned m,
                           std::vector<char>& occupied, std::uint64_t& d,
                           bool& confined) {
  occupied.assign(m, 0);
  d = 0;
  for (unsigned h : values) {
    unsigned q = h;
    while (occupied[q]) {
      ++q;
      if (q == m) q = 0;
      ++d;
    }
    occupied[q] = 1;
  }
  confined = !occupied[0];
}

}  // namespace

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  // reject the tail that would make the modulus uneven
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

InsertionOutcome linear_probe_insert(const HashSequence& seq) {
  const unsigned m = seq.m;
  const unsigned n = static_cast<unsigned>(seq.values.size());
  check_instance(m, n);
  for (unsigned h : seq.values) {
    if (h >= m) throw std::invalid_argument("hash value out of range");
  }

  InsertionOutcome out;
  out.positions.reserve(n);
  std::vector<char> occupied(m, 0);
  for (unsigned h : seq.values) {
    unsigned q = h;
    unsigned displaced = 0;
    while (occupied[q]) {
      ++q;
      if (q == m) q = 0;
      ++displaced;
    }
    occupied[q] = 1;
    out.positions.push_back(q);
    out.total_displacement += displaced;
  }
  out.confined = !occupied[0];
  return out;
}

EmpiricalDistribution exhaustive_distribution(unsigned m, unsigned n,
                                              bool confined_only) {
  check_instance(m, n);
  const std::uint64_t total = sequence_count(m, n);
  if (total == 0)
    throw std::invalid_argument(
        "exhaustive_distribution: m^n exceeds the 10^8 guard");

  EmpiricalDistribution dist;
  dist.m = m;
  dist.n = n;
  dist.exhaustive = true;

  std::vector<unsigned> values(n, 0);
  std::vector<char> occupied;
  std::uint64_t d = 0;
  bool confined = false;
  for (std::uint64_t it = 0; it < total; ++it) {
    simulate_displacement(values, m, occupied, d, confined);
    if (!confined_only || confined) {
      ++dist.histogram[d];
      ++dist.trials;
    }
    // odometer step
    for (unsigned i = 0; i < n; ++i) {
      if (++values[i] < m) break;
      values[i] = 0;
    }
  }
  return dist;
}

EmpiricalDistribution monte_carlo(unsigned m, unsigned n, std::uint64_t trials,
                                  std::uint64_t seed) {
  check_instance(m, n);
  if (trials == 0)
    throw std::invalid_argument("monte_carlo: trials must be positive");

  EmpiricalDistribution dist;
  dist.m = m;
  dist.n = n;
  dist.trials = trials;
  dist.seed = seed;

  SplitMix64 rng(seed);
  std::vector<unsigned> values(n);
  std::vector<char> occupied;
  std::uint64_t d = 0;
  bool confined = false;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (unsigned i = 0; i < n; ++i)
      values[i] = static_cast<unsigned>(rng.next_below(m));
    simulate_displacement(values, m, occupied, d, confined);
    ++dist.histogram[d];
  }
  return dist;
}

bool rotation_symmetry_check(unsigned m, unsigned n, std::uint64_t samples,
                             std::uint64_t seed, HashSequence* witness) {
  if (m == 0 || n >= m)
    throw std::invalid_argument("rotation_symmetry_check: requires n < m");
  if (n == 0) return true;  // empty sequence, nothing to rotate

  const auto check_orbit = [&](const std::vector<unsigned>& base) {
    std::vector<char> occupied;
    std::uint64_t base_d = 0;
    bool confined = false;
    simulate_displacement(base, m, occupied, base_d, confined);
    unsigned confined_count = confined ? 1 : 0;

    std::vector<unsigned> rotated(n);
    for (unsigned j = 1; j < m; ++j) {
      for (unsigned i = 0; i < n; ++i) rotated[i] = (base[i] + j) % m;
      std::uint64_t d = 0;
      simulate_displacement(rotated, m, occupied, d, confined);
      if (d != base_d) return false;
      if (confined) ++confined_count;
    }
    return confined_count == m - n;
  };

  const auto fail_with = [&](const std::vector<unsigned>& base) {
    if (witness) *witness = HashSequence{m, base};
    return false;
  };

  if (samples == 0) {
    const std::uint64_t total = sequence_count(m, n);
    if (total == 0)
      throw std::invalid_argument(
          "rotation_symmetry_check: m^n exceeds the 10^8 guard");
    std::vector<unsigned> values(n, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
      if (!check_orbit(values)) return fail_with(values);
      for (unsigned i = 0; i < n; ++i) {
        if (++values[i] < m) break;
        values[i] = 0;
      }
    }
    return true;
  }

  SplitMix64 rng(seed);
  std::vector<unsigned> values(n);
  for (std::uint64_t t = 0; t < samples; ++t) {
    for (unsigned i = 0; i < n; ++i)
      values[i] = static_cast<unsigned>(rng.next_below(m));
    if (!check_orbit(values)) return fail_with(values);
  }
  return true;
}

}  // namespace linprobe
