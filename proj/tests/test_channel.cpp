#include <doctest.h>

#include "cia/channel.hpp"
#include "cia/errors.hpp"

using namespace cia;

namespace {

OffsetPlan canonical_delta_plan() {
  OffsetPlan plan{Topology::Delta, 3, {}};
  plan.offsets[{1, 2, 1}] = 0;
  plan.offsets[{1, 3, 1}] = 1;
  plan.offsets[{2, 1, 1}] = 0;
  plan.offsets[{2, 3, 1}] = 2;
  plan.offsets[{3, 1, 1}] = 1;
  plan.offsets[{3, 2, 1}] = 2;
  return plan;
}

MessageSet numbered_messages() {
  MessageSet msgs;
  Word w = 1;
  for (const SubKey& key : message_keys(MessagingMatrix::uniform()))
    msgs[key] = w++;
  return msgs;
}

}  // namespace

TEST_CASE("messaging matrix validates shape") {
  CHECK(MessagingMatrix().total() == 0);
  CHECK(MessagingMatrix::uniform().total() == 6);
  CHECK(MessagingMatrix::uniform().alpha(1, 2) == 1);
  CHECK(MessagingMatrix::uniform().alpha(1, 1) == 0);
  CHECK_THROWS_AS(MessagingMatrix({{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}}),
                  DimensionError);
  CHECK_THROWS_AS(MessagingMatrix({{{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}}),
                  DimensionError);
}

TEST_CASE("channel exponents are canonicalized on construction") {
  const DeltaChannel ch(3, {{{-1, 7, 0}, {0, 0, 0}, {0, 0, 0}}});
  CHECK(ch.k(1, 1) == 2);
  CHECK(ch.k(1, 2) == 1);
  CHECK(ch.with_n(2).k(1, 1) == 0);
  CHECK_THROWS_AS(DeltaChannel(0, {}), DimensionError);

  const YChannel y(4, {5, -1, 2}, {0, 1, 9});
  CHECK(y.a(1) == 1);
  CHECK(y.a(2) == 3);
  CHECK(y.b(3) == 1);
  CHECK(y.with_n(2).a(2) == 1);
}

TEST_CASE("message_keys enumerates (dst, src, m) lexicographically") {
  MessagingMatrix mm({{{0, 2, 0}, {1, 0, 0}, {0, 0, 0}}});
  const auto keys = message_keys(mm);
  REQUIRE(keys.size() == 3);
  CHECK(keys[0] == SubKey{1, 2, 1});
  CHECK(keys[1] == SubKey{1, 2, 2});
  CHECK(keys[2] == SubKey{2, 1, 1});
}

TEST_CASE("require_plan_matches rejects wrong key sets") {
  const OffsetPlan plan = canonical_delta_plan();
  CHECK_NOTHROW(require_plan_matches(plan, MessagingMatrix::uniform()));
  CHECK_THROWS_AS(require_plan_matches(plan, MessagingMatrix()),
                  PlanMismatchError);
  OffsetPlan wrong = plan;
  wrong.offsets.erase({3, 2, 1});
  wrong.offsets[{3, 2, 2}] = 0;
  CHECK_THROWS_AS(require_plan_matches(wrong, MessagingMatrix::uniform()),
                  PlanMismatchError);
}

TEST_CASE("encode places each source's words at their offsets") {
  const OffsetPlan plan = canonical_delta_plan();
  const MessageSet msgs = numbered_messages();
  const CyclicPoly u2 = encode(plan, msgs, 2, 8);
  CHECK(u2.coeff(0) == msgs.at({1, 2, 1}));
  CHECK(u2.coeff(1) == 0);
  CHECK(u2.coeff(2) == msgs.at({3, 2, 1}));
}

TEST_CASE("delta_receive sums all three inputs including loop-back") {
  const OffsetPlan plan = canonical_delta_plan();
  const MessageSet msgs = numbered_messages();
  const DeltaChannel ch(3, {});
  std::array<CyclicPoly, 3> u{encode(plan, msgs, 1, 8), encode(plan, msgs, 2, 8),
                              encode(plan, msgs, 3, 8)};
  const auto r = delta_receive(ch, u);
  CHECK(r[0].coeff(0) == (msgs.at({1, 2, 1}) ^ msgs.at({2, 1, 1})));
  CHECK(r[0].coeff(1) == (msgs.at({1, 3, 1}) ^ msgs.at({3, 1, 1})));
  CHECK(r[0].coeff(2) == (msgs.at({2, 3, 1}) ^ msgs.at({3, 2, 1})));
  CHECK(r[0] == r[1]);
  CHECK(r[1] == r[2]);
  CHECK_THROWS_AS(delta_receive(ch.with_n(4), u), DimensionError);
}

TEST_CASE("y_uplink aligns opposite directions and y_downlink shifts") {
  OffsetPlan plan = canonical_delta_plan();
  plan.topology = Topology::Y;
  const MessageSet msgs = numbered_messages();
  const YChannel ch(3, {0, 0, 0}, {1, 1, 1});
  std::array<CyclicPoly, 3> u{encode(plan, msgs, 1, 8), encode(plan, msgs, 2, 8),
                              encode(plan, msgs, 3, 8)};
  const CyclicPoly relay = y_uplink(ch, u);
  CHECK(relay.coeff(0) == (msgs.at({1, 2, 1}) ^ msgs.at({2, 1, 1})));
  CHECK(relay.coeff(1) == (msgs.at({1, 3, 1}) ^ msgs.at({3, 1, 1})));
  CHECK(relay.coeff(2) == (msgs.at({2, 3, 1}) ^ msgs.at({3, 2, 1})));
  const auto d = y_downlink(ch, relay);
  CHECK(d[0] == shift(relay, 1));
  CHECK(d[0] == d[1]);
}
