#pragma once

// Counter-based random streams: every (seed, stream, index) triple maps to
// its own generator, so draws never depend on evaluation order.

#include <cstdint>
#include <limits>
#include <random>

namespace lcv {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic child seed; distinct (stream, index) give unrelated values.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index = 0) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ (index * 0xd1b54a32d192ed03ULL));
}

/// SplitMix64 as a UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  SplitMix64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept
      : state_(derive_seed(seed, stream, index)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double normal() {
    std::normal_distribution<double> dist;
    return dist(*this);
  }

 private:
  std::uint64_t state_;
};

/// Stream identifiers used by the simulator.
namespace stream {
inline constexpr std::uint64_t kPi = 0x100;        // + intermediary index
inline constexpr std::uint64_t kGamma = 0x200;
inline constexpr std::uint64_t kMixture = 0x300;
inline constexpr std::uint64_t kNoise1 = 0x400;
inline constexpr std::uint64_t kNoise2 = 0x401;
inline constexpr std::uint64_t kNoiseShared = 0x402;
inline constexpr std::uint64_t kLdPerturb = 0x500;
inline constexpr std::uint64_t kReplicate = 0x600;
inline constexpr std::uint64_t kSweep = 0x700;
}  // namespace stream

}  // namespace lcv
