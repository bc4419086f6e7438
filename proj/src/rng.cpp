#include "cia/rng.hpp"

namespace cia {

MessageSet random_messages(const MessagingMatrix& mm, int t, std::uint64_t seed) {
  MessageSet msgs;
  for (const SubKey& k : message_keys(mm))
    msgs[k] = rng::word_at(seed, k.dst, k.src, k.m, t);
  return msgs;
}

DeltaChannel random_delta_channel(int n, std::uint64_t seed) {
  std::uint64_t state = seed;
  std::array<std::array<int, 3>, 3> k{};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i)
      k[j][i] = static_cast<int>(rng::next(state) % std::uint64_t(n));
  return DeltaChannel(n, k);
}

YChannel random_y_channel(int n, std::uint64_t seed) {
  std::uint64_t state = seed;
  std::array<int, 3> a{}, b{};
  for (int i = 0; i < 3; ++i) a[i] = static_cast<int>(rng::next(state) % std::uint64_t(n));
  for (int j = 0; j < 3; ++j) b[j] = static_cast<int>(rng::next(state) % std::uint64_t(n));
  return YChannel(n, a, b);
}

OffsetPlan random_plan(Topology topology, const MessagingMatrix& mm, int n,
                       std::uint64_t seed) {
  std::uint64_t state = seed;
  OffsetPlan plan{topology, n, {}};
  for (const SubKey& k : message_keys(mm))
    plan.offsets[k] = static_cast<int>(rng::next(state) % std::uint64_t(n));
  return plan;
}

}  // namespace cia
