#include "mlur/rng.hpp"

#include <cmath>
#include <numbers>

namespace mlur {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : key_(mix64(seed + kGolden)) {}

Rng Rng::split(std::uint64_t index) const {
  return Rng(mix64(key_ ^ mix64(index * kGolden + 0x632BE59BD9B4E019ULL)), 0, 0);
}

Rng::result_type Rng::operator()() {
  const std::uint64_t x = mix64(key_ + (++counter_) * kGolden);
  return mix64(x ^ key_);
}

double Rng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::exponential() { return -std::log(1.0 - uniform()); }

}  // namespace mlur
