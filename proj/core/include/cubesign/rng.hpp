#ifndef CUBESIGN_RNG_HPP
#define CUBESIGN_RNG_HPP

#include <cstdint>

namespace cubesign {

/// Counter-based splitmix64 stream. Each (seed, stream) pair yields an
/// independent deterministic sequence, so parallel trials can derive their
/// stream from (seed, trial index) without shared state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, bound), bound > 0. Rejection-free modulo is fine at
  /// desk scale; bias is < bound / 2^64.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace cubesign

#endif  // CUBESIGN_RNG_HPP
