#pragma once

#include <cstdint>

#include "cia/channel.hpp"

namespace cia {

// All pseudorandomness in the artifact is splitmix64-based and pinned, so any
// implementation can reproduce message sets, channels, and plans byte for
// byte from (seed, key) alone.

namespace rng {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sequential stream: state 0 yields 0xe220a8397b1dcdaf first.
inline std::uint64_t next(std::uint64_t& state) {
  state += kGolden;
  return finalize(state);
}

// Counter mode keyed by submessage identity: counter = (j<<36)|(i<<32)|m.
inline Word word_at(std::uint64_t seed, int j, int i, int m, int t) {
  const std::uint64_t counter = (std::uint64_t(j) << 36) |
                                (std::uint64_t(i) << 32) | std::uint64_t(m);
  return finalize(seed + (counter + 1) * kGolden) & word_mask(t);
}

}  // namespace rng

// One word per submessage of mm; same seed, same set.
MessageSet random_messages(const MessagingMatrix& mm, int t, std::uint64_t seed);

// Nine exponents drawn row-major from the sequential stream, each mod n.
DeltaChannel random_delta_channel(int n, std::uint64_t seed);

// Three uplink then three downlink exponents, each mod n.
YChannel random_y_channel(int n, std::uint64_t seed);

// One offset per submessage key in lex (j,i,m) order, each mod n.
OffsetPlan random_plan(Topology topology, const MessagingMatrix& mm, int n,
                       std::uint64_t seed);

}  // namespace cia
