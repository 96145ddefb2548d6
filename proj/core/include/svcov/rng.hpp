// rng.hpp - seeded, stream-splittable random number generation.
//
// Every stochastic routine in svcov draws from an RngStream: a
// (master_seed, stream_id) pair. Identical pairs reproduce identical draw
// sequences bit-for-bit; distinct stream_ids give statistically independent
// streams. The generator is xoshiro256++ (Blackman & Vigna, public domain),
// state-seeded by iterating splitmix64. The exact mixing constants below are
// part of the reproducibility contract and must not change.
#pragma once

#include <cstdint>

namespace svcov {

/// splitmix64 avalanche step (Vigna). Mixing constants are load-bearing:
/// 0x9E3779B97F4A7C15 (golden gamma), 0xBF58476D1CE4E5B9, 0x94D049BB133111EB.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Identifies one reproducible stream of randomness.
struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

/// Derives a child master seed for nested structures (replicates, grid cells).
/// child = avalanche of (master, tag): two splitmix64 steps keyed by tag.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64_next(s);
  s = a ^ tag;
  return splitmix64_next(s);
}

/// xoshiro256++ engine bound to an RngStream.
class Rng {
 public:
  explicit Rng(RngStream stream) {
    // State = 4 successive splitmix64 outputs of mix(master, stream_id).
    std::uint64_t s = derive_seed(stream.master_seed, stream.stream_id);
    for (auto& word : state_) word = splitmix64_next(s);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double strictly inside (0,1): (k + 0.5) / 2^53 over the top 53 bits.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

// Stream-id registry. Fixed so that simulated fields are regenerable in
// isolation (swapping the Z stream must not move the sigma field).
inline constexpr std::uint64_t kEtaStreamId = 1;
inline constexpr std::uint64_t kZStreamId = 2;
inline constexpr std::uint64_t kMarginalMcStreamId = 3;
inline constexpr std::uint64_t kPairMcStreamId = 4;

}  // namespace svcov
