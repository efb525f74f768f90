#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qst/errors.hpp"

namespace qst {

// Self-contained, portable PRNG utilities. Everything downstream (state
// generation, ensemble sampling, noise, trial seeding) goes through these so
// that a seed reproduces the same bytes on any platform; the standard
// <random> distributions are implementation-defined and would break that.

// One splitmix64 step. Also the workhorse behind seed derivation.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Splittable seed scheme: derive_seed(master, tag...) yields an independent
// stream seed, so any sub-task (a trial, a noise draw) can be re-run in
// isolation. Order of tags matters.
inline std::uint64_t derive_seed(std::uint64_t base) {
  std::uint64_t s = base;
  return splitmix64_next(s);
}

template <class... Tags>
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, Tags... rest) {
  std::uint64_t s = base;
  std::uint64_t mixed = splitmix64_next(s) ^ (tag * 0xbf58476d1ce4e5b9ULL + 0x2545f4914f6cdd1dULL);
  if constexpr (sizeof...(rest) == 0) {
    return derive_seed(mixed);
  } else {
    return derive_seed(mixed, rest...);
  }
}

// xoshiro256** seeded via splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection sampling keeps it exactly uniform.
  std::uint64_t bounded(std::uint64_t n) {
    if (n == 0) throw ParameterError("Rng::bounded: n must be positive");
    const std::uint64_t threshold = (0-n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // Standard normal via Box-Muller; the second deviate of each pair is cached.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// k distinct values drawn uniformly from {0, ..., population-1}, in random
// order. Partial Fisher-Yates over a sparse map: O(k) memory regardless of
// population size.
inline std::vector<std::uint64_t> sample_without_replacement(Rng& rng,
                                                             std::uint64_t population,
                                                             std::uint64_t k) {
  if (k > population) {
    throw CapacityError("sample_without_replacement: requested " + std::to_string(k) +
                        " of " + std::to_string(population));
  }
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + rng.bounded(population - i);
    auto it_j = displaced.find(j);
    const std::uint64_t value_j = (it_j == displaced.end()) ? j : it_j->second;
    auto it_i = displaced.find(i);
    const std::uint64_t value_i = (it_i == displaced.end()) ? i : it_i->second;
    out.push_back(value_j);
    displaced[j] = value_i;
  }
  return out;
}

}  // namespace qst
