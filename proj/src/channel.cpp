#include "cia/channel.hpp"

#include "cia/errors.hpp"

namespace cia {

MessagingMatrix::MessagingMatrix() : a_{} {}

MessagingMatrix::MessagingMatrix(const std::array<std::array<int, 3>, 3>& alpha)
    : a_(alpha) {
  for (int j = 0; j < 3; ++j) {
    if (a_[j][j] != 0)
      throw DimensionError("MessagingMatrix: diagonal entries must be zero");
    for (int i = 0; i < 3; ++i)
      if (a_[j][i] < 0)
        throw DimensionError("MessagingMatrix: counts must be non-negative");
  }
}

MessagingMatrix MessagingMatrix::uniform() {
  return MessagingMatrix({{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}});
}

int MessagingMatrix::total() const {
  int m = 0;
  for (const auto& row : a_)
    for (int v : row) m += v;
  return m;
}

DeltaChannel::DeltaChannel(int n, const std::array<std::array<int, 3>, 3>& k)
    : n_(n) {
  if (n < 1) throw DimensionError("DeltaChannel: n must be >= 1");
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) k_[j][i] = reduce_exponent(k[j][i], n);
}

DeltaChannel DeltaChannel::with_n(int n) const { return DeltaChannel(n, k_); }

YChannel::YChannel(int n, const std::array<int, 3>& a, const std::array<int, 3>& b)
    : n_(n) {
  if (n < 1) throw DimensionError("YChannel: n must be >= 1");
  for (int i = 0; i < 3; ++i) {
    a_[i] = reduce_exponent(a[i], n);
    b_[i] = reduce_exponent(b[i], n);
  }
}

YChannel YChannel::with_n(int n) const { return YChannel(n, a_, b_); }

std::vector<SubKey> message_keys(const MessagingMatrix& mm) {
  std::vector<SubKey> keys;
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i)
      for (int m = 1; m <= mm.alpha(j, i); ++m) keys.push_back({j, i, m});
  return keys;
}

void require_plan_matches(const OffsetPlan& plan, const MessagingMatrix& mm) {
  const auto keys = message_keys(mm);
  if (plan.offsets.size() != keys.size())
    throw PlanMismatchError("plan does not cover the messaging matrix");
  for (const SubKey& k : keys)
    if (!plan.offsets.contains(k))
      throw PlanMismatchError("plan is missing a submessage offset");
}

CyclicPoly encode(const OffsetPlan& plan, const MessageSet& msgs, int i, int t) {
  CyclicPoly u(plan.n, t);
  for (const auto& [key, word] : msgs) {
    if (key.src != i) continue;
    auto it = plan.offsets.find(key);
    if (it == plan.offsets.end())
      throw PlanMismatchError("encode: no offset for a submessage of this source");
    u.add_at(reduce_exponent(it->second, plan.n), word);
  }
  return u;
}

std::array<CyclicPoly, 3> delta_receive(const DeltaChannel& ch,
                                        const std::array<CyclicPoly, 3>& u) {
  for (const auto& ui : u)
    if (ui.n() != ch.n())
      throw DimensionError("delta_receive: signal dimension mismatch");
  const int t = u[0].t();
  std::array<CyclicPoly, 3> r{CyclicPoly(ch.n(), t), CyclicPoly(ch.n(), t),
                              CyclicPoly(ch.n(), t)};
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i)
      r[j - 1] = add(r[j - 1], shift(u[i - 1], ch.k(j, i)));
  return r;
}

CyclicPoly y_uplink(const YChannel& ch, const std::array<CyclicPoly, 3>& u) {
  for (const auto& ui : u)
    if (ui.n() != ch.n())
      throw DimensionError("y_uplink: signal dimension mismatch");
  CyclicPoly r(ch.n(), u[0].t());
  for (int i = 1; i <= 3; ++i) r = add(r, shift(u[i - 1], ch.a(i)));
  return r;
}

std::array<CyclicPoly, 3> y_downlink(const YChannel& ch, const CyclicPoly& r_relay) {
  if (r_relay.n() != ch.n())
    throw DimensionError("y_downlink: signal dimension mismatch");
  return {shift(r_relay, ch.b(1)), shift(r_relay, ch.b(2)),
          shift(r_relay, ch.b(3))};
}

}  // namespace cia
