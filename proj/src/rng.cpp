#include "sdg/rng.hpp"

#include <stdexcept>

namespace sdg {

BigInt SeededRng::next_below(const BigInt& bound) {
  if (bound <= 0) {
    throw std::invalid_argument("next_below: bound must be positive");
  }
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
  const unsigned words = (bits + 63) / 64;
  for (;;) {
    BigInt candidate = 0;
    for (unsigned w = 0; w < words; ++w) {
      candidate <<= 64;
      candidate |= BigInt(next_u64());
    }
    candidate >>= (words * 64 - bits);  // keep only `bits` low bits
    if (candidate < bound) return candidate;
  }
}

std::uint64_t trial_seed(std::uint64_t run_seed, std::uint64_t index) {
  std::uint64_t z = run_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t sample_categorical(SeededRng& rng, std::span<const Rational> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("sample_categorical: empty weight list");
  }
  // Common denominator turns the weights into exact integer masses.
  BigInt den = 1;
  for (const Rational& w : weights) {
    if (w < Rational(0)) {
      throw std::invalid_argument("sample_categorical: negative weight");
    }
    den = boost::multiprecision::lcm(den, w.den());
  }
  std::vector<BigInt> mass(weights.size());
  BigInt total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    mass[i] = weights[i].num() * (den / weights[i].den());
    total += mass[i];
  }
  if (total == 0) {
    throw std::invalid_argument("sample_categorical: all weights are zero");
  }
  BigInt pick = rng.next_below(total);
  BigInt acc = 0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    acc += mass[i];
    if (pick < acc) return i;
  }
  return mass.size() - 1;  // unreachable
}

}  // namespace sdg
