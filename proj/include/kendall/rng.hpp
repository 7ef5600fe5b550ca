// Deterministic random number streams.
//
// Every simulated path owns an independent substream derived from the pair
// (seed, path_index) through a SplitMix64 mix, so results are reproducible
// for a fixed seed no matter how paths are distributed over threads or in
// which order they are evaluated.
#pragma once

#include <cstdint>
#include <random>

namespace kendall {

/// SplitMix64 finalizer.  Public-domain mixing function commonly used to
/// expand a small seed into well-distributed engine seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Collapse (seed, path_index) into one engine seed.  Two rounds keep
/// neighbouring path indices statistically unrelated.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t path_index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(path_index * 0x9e3779b97f4a7c15ULL + 1));
}

/// Random stream for one simulated path.
///
/// Wraps std::mt19937_64 (whose output sequence is fully specified by the
/// standard) and produces doubles in the open interval (0,1) directly from
/// the top 53 bits, avoiding the implementation-defined behaviour of
/// std::uniform_real_distribution.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t path_index)
      : engine_(substream_seed(seed, path_index)) {}

  /// Uniform draw in (0,1), both endpoints excluded.
  double uniform() {
    const std::uint64_t bits = engine_() >> 11;  // 53 random bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kendall
