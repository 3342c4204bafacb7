#ifndef SDG_RNG_HPP
#define SDG_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sdg/rational.hpp"

namespace sdg {

/// Deterministic seeded generator. The algorithm is std::mt19937_64, whose
/// output sequence for a given seed is fully specified by the C++ standard,
/// so streams are identical across platforms and must stay fixed across
/// versions of this project.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0, by rejection sampling on raw
  /// 64-bit words (no std::uniform_int_distribution, whose mapping is
  /// implementation-defined).
  BigInt next_below(const BigInt& bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Seed for trial `index` derived from a run seed via the splitmix64 output
/// function: mix(seed + (index+1) * 0x9E3779B97F4A7C15). Counter-based, so
/// any partition of trials across threads reproduces the serial run.
std::uint64_t trial_seed(std::uint64_t run_seed, std::uint64_t index);

/// Draws index i with probability weights[i] / sum(weights), exactly.
/// Throws std::invalid_argument if weights are empty, any is negative, or
/// they sum to zero.
std::size_t sample_categorical(SeededRng& rng, std::span<const Rational> weights);

inline std::size_t sample_categorical(SeededRng& rng, const std::vector<Rational>& weights) {
  return sample_categorical(rng, std::span<const Rational>(weights));
}

}  // namespace sdg

#endif  // SDG_RNG_HPP
