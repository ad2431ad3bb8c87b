#ifndef LPDEC_RNG_HPP
#define LPDEC_RNG_HPP

#include <cmath>
#include <cstdint>

namespace lpdec {

/// Small deterministic generator (splitmix64). Streams are cheap to fork by
/// mixing a counter into the seed, which keeps Monte-Carlo trials independent
/// of worker scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Standard normal via Box-Muller (avoids libstdc++-specific distributions
  /// so streams are reproducible across toolchains).
  double next_gaussian() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

/// Mixes a stream index into a base seed (fork for trial #index).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (0x632BE59BD9B4E019ULL * (index + 1)));
  return g.next_u64();
}

}  // namespace lpdec

#endif
