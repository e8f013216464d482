#pragma once

#include <cstdint>

namespace ellm {

// SplitMix64 (Vigna's public-domain generator). Chosen because the whole
// state transition is integer arithmetic, so streams are bit-identical on
// every platform.
//
// Stream-splitting rule: substream(seed, i) seeds a fresh generator with
//   mix(seed ^ mix(0x9E3779B97F4A7C15 * (i + 1)))
// where mix is the SplitMix64 finalizer. Parallel consumers that draw from
// substream(seed, trial_index) therefore see disjoint deterministic streams
// regardless of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 bits; the conversion is exact in IEEE double.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), bound >= 1, unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [-hi, hi].
  std::int64_t next_signed(std::int64_t hi) {
    return static_cast<std::int64_t>(next_below(2 * static_cast<std::uint64_t>(hi) + 1)) - hi;
  }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(0x9E3779B97F4A7C15ULL * (index + 1))));
  }

 private:
  std::uint64_t state_;
};

}  // namespace ellm
