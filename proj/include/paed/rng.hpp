#ifndef PAED_RNG_HPP
#define PAED_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace paed {

// Seeded RNG with hand-rolled uniform/normal draws. std::*_distribution is
// implementation-defined, and reruns must be byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    // Rejection-free modulo is fine here: ranges are tiny relative to 2^64.
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Box-Muller, one value per call.
  double normal(double mean, double stddev) {
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * M_PI * u2);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 step; used to derive independent per-trial seeds from a master
// seed without correlated low bits.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

} // namespace paed

#endif
