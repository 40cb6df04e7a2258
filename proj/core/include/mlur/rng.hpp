#pragma once

#include <cstdint>
#include <limits>

namespace mlur {

/// Seedable, splittable counter-based generator.
///
/// Each draw hashes (key, counter) through the SplitMix64 finalizer, so the
/// output depends only on the key and the draw index. `split(i)` derives an
/// independent child stream from the key and i; Monte Carlo tasks use
/// `Rng(seed).split(task_index)` to stay reproducible regardless of the
/// order in which tasks run. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  Rng split(std::uint64_t index) const;

  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller (consumes two draws).
  double normal();
  /// Exponential with unit rate.
  double exponential();

  std::uint64_t counter() const { return counter_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  Rng(std::uint64_t key, std::uint64_t counter, int) : key_(key), counter_(counter) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace mlur
