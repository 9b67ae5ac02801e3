#pragma once

#include <cstdint>

namespace f2c {

/// SplitMix64 finaliser: a bijective 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Pure keyed mix: splitmix64(key ^ splitmix64(counter)). Used both as the
/// counter-based stream behind generator sampling and for deriving per-trial
/// seeds from a base seed.
constexpr std::uint64_t mix64(std::uint64_t key, std::uint64_t counter) noexcept {
  return splitmix64(key ^ splitmix64(counter));
}

/// Sequential generator over mix64(key, 0), mix64(key, 1), ...
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return mix64(key_, counter_++); }

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

} // namespace f2c
