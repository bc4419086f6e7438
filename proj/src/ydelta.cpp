#include "cia/ydelta.hpp"

#include <algorithm>

#include "cia/errors.hpp"
#include "cia/simulate.hpp"

namespace cia {

DeltaChannel compose(const YChannel& y) {
  std::array<std::array<int, 3>, 3> k{};
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i)
      k[j - 1][i - 1] = reduce_exponent(y.a(i) + y.b(j), y.n());
  return DeltaChannel(y.n(), k);
}

std::optional<ProductDecomposition> decompose(const DeltaChannel& ch) {
  const int n = ch.n();
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i)
      if (reduce_exponent(ch.k(j, i) + ch.k(1, 1), n) !=
          reduce_exponent(ch.k(j, 1) + ch.k(1, i), n))
        return std::nullopt;
  ProductDecomposition d{};
  for (int i = 1; i <= 3; ++i)
    d.a[i - 1] = reduce_exponent(ch.k(1, i) - ch.k(1, 1), n);
  for (int j = 1; j <= 3; ++j) d.b[j - 1] = ch.k(j, 1);
  return d;
}

bool transfer_equivalence(const YChannel& y, const OffsetPlan& plan,
                          const MessageSet& msgs, int t) {
  const SimulationOutcome via_relay = run_y(y, plan, msgs, t);
  OffsetPlan direct = plan;
  direct.topology = Topology::Delta;
  // In the composed picture the aligned partner arrives over the receiver's
  // own loop-back link, so ordinary SIC already covers it.
  const SimulationOutcome composed = run_delta(compose(y), direct, msgs, t);
  return via_relay.success && composed.success &&
         via_relay.decoded == composed.decoded;
}

MimoConfig MimoConfig::sorted() const {
  std::array<int, 3> v{A1, A2, A3};
  std::sort(v.begin(), v.end(), std::greater<int>());
  return {v[0], v[1], v[2], AR};
}

long long mimo_dof_bound(const MimoConfig& cfg) {
  if (cfg.A1 < 1 || cfg.A2 < 1 || cfg.A3 < 1 || cfg.AR < 1)
    throw DimensionError("mimo_dof_bound: antenna counts must be positive");
  const MimoConfig s = cfg.sorted();
  return std::min<long long>({2LL * (s.A2 + s.A3), 1LL * s.A1 + s.A2 + s.A3,
                              2LL * s.AR});
}

MimoResult mimo_normalized_dof(const MimoConfig& cfg) {
  const long long bound = mimo_dof_bound(cfg);
  const MimoConfig s = cfg.sorted();
  char label = '-';
  if (s.A2 + s.A3 <= s.A1 && s.AR == s.A2 + s.A3)
    label = 'A';
  else if (s.A1 <= s.A2 + s.A3 && 2 * s.AR == s.A1 + s.A2 + s.A3)
    label = 'B';
  else if (s.AR <= s.A2 + s.A3 && 2 * s.AR <= s.A1 + s.A2 + s.A3)
    label = 'C';
  return {DofValue{bound, s.AR}, label};
}

}  // namespace cia
