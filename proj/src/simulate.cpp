#include "cia/simulate.hpp"

#include "cia/errors.hpp"

namespace cia {

namespace {

std::array<CyclicPoly, 3> encode_all(const OffsetPlan& plan,
                                     const MessageSet& msgs, int t) {
  return {encode(plan, msgs, 1, t), encode(plan, msgs, 2, t),
          encode(plan, msgs, 3, t)};
}

}  // namespace

SimulationOutcome run_delta(const DeltaChannel& ch, const OffsetPlan& plan,
                            const MessageSet& msgs, int t,
                            const SimulateOptions& opts) {
  if (ch.n() != plan.n)
    throw DimensionError("run_delta: plan and channel disagree on n");
  const auto u = encode_all(plan, msgs, t);
  const auto r = delta_receive(ch, u);

  SimulationOutcome out;
  out.success = true;
  for (int j = 1; j <= 3; ++j) {
    CyclicPoly y = r[j - 1];
    if (opts.sic) y = add(y, shift(u[j - 1], ch.k(j, j)));
    out.receiver_support[j - 1] = support(y);
    for (const auto& [key, sent] : msgs) {
      if (key.dst != j) continue;
      const int dim = reduce_exponent(ch.k(j, key.src) + plan.offsets.at(key), ch.n());
      const Word got = y.coeff(dim);
      out.decoded[key] = got;
      const bool ok = got == sent;
      out.per_message_ok[key] = ok;
      out.success = out.success && ok;
    }
  }
  return out;
}

SimulationOutcome run_y(const YChannel& ch, const OffsetPlan& plan,
                        const MessageSet& msgs, int t,
                        const SimulateOptions& opts) {
  if (ch.n() != plan.n)
    throw DimensionError("run_y: plan and channel disagree on n");
  const auto u = encode_all(plan, msgs, t);
  const CyclicPoly r_relay = y_uplink(ch, u);
  const auto down = y_downlink(ch, r_relay);

  SimulationOutcome out;
  out.success = true;
  out.relay_support = support(r_relay);
  for (int j = 1; j <= 3; ++j) {
    CyclicPoly y = down[j - 1];
    // The relay echoes everything, including the receiver's own uplink; SIC
    // removes that echo, which is what resolves the aligned XOR pairs.
    if (opts.sic) y = add(y, shift(u[j - 1], ch.a(j) + ch.b(j)));
    out.receiver_support[j - 1] = support(y);
    for (const auto& [key, sent] : msgs) {
      if (key.dst != j) continue;
      const int dim = reduce_exponent(
          ch.b(j) + ch.a(key.src) + plan.offsets.at(key), ch.n());
      const Word got = y.coeff(dim);
      out.decoded[key] = got;
      const bool ok = got == sent;
      out.per_message_ok[key] = ok;
      out.success = out.success && ok;
    }
  }
  return out;
}

}  // namespace cia
