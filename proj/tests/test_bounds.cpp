#include <doctest.h>

#include "cia/bounds.hpp"
#include "cia/errors.hpp"

using namespace cia;

TEST_CASE("dof values compare as exact rationals") {
  CHECK(DofValue{6, 3} == DofValue{2, 1});
  CHECK(DofValue{7, 4} <= DofValue{2, 1});
  CHECK_FALSE(DofValue{2, 1} <= DofValue{7, 4});
  CHECK(to_string(DofValue{7, 4}) == "7/4");
}

TEST_CASE("x-channel bound on small grids") {
  const DofValue two_by_two = dof_upper_bound_xchannel({{1, 1}, {1, 1}});
  CHECK(two_by_two.num == 4);
  CHECK(two_by_two.den == 3);

  const DofValue three_full =
      dof_upper_bound_xchannel({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(three_full.num == 9);
  CHECK(three_full.den == 5);

  const DofValue empty = dof_upper_bound_xchannel({{0, 0}, {0, 0}});
  CHECK(empty.num == 0);
  CHECK(empty.den == 1);
}

TEST_CASE("multiway bound skips the diagonal") {
  const DofValue uniform = dof_upper_bound_multiway(MessagingMatrix::uniform());
  CHECK(uniform.num == 6);
  CHECK(uniform.den == 3);
  CHECK(uniform == DofValue{2, 1});

  const MessagingMatrix asym({{{0, 2, 1}, {1, 0, 1}, {1, 1, 0}}});
  const DofValue b = dof_upper_bound_multiway(asym);
  CHECK(b.num == 7);
  CHECK(b.den == 4);

  const MessagingMatrix lopsided({{{0, 0, 0}, {5, 0, 0}, {0, 0, 0}}});
  const DofValue l = dof_upper_bound_multiway(lopsided);
  CHECK(l.num == 5);
  CHECK(l.den == 5);

  const DofValue zero = dof_upper_bound_multiway(MessagingMatrix());
  CHECK(zero.num == 0);
  CHECK(zero.den == 1);
}

TEST_CASE("multiway denominator equals the dimension requirement") {
  for (int code = 0; code < 4 * 4 * 4; ++code) {
    const int a = code % 4, b = (code / 4) % 4, c = (code / 16) % 4;
    const MessagingMatrix mm({{{0, a, b}, {b, 0, c}, {c, a, 0}}});
    CHECK(dof_upper_bound_multiway(mm).den == dimension_requirement(mm).n);
  }
}

TEST_CASE("achieved dof is demand over plan dimension") {
  OffsetPlan plan{Topology::Delta, 3, {}};
  for (const SubKey& k : message_keys(MessagingMatrix::uniform()))
    plan.offsets[k] = 0;
  const DofValue d = achieved_dof(plan, MessagingMatrix::uniform());
  CHECK(d.num == 6);
  CHECK(d.den == 3);
  CHECK_THROWS_AS(achieved_dof(plan, MessagingMatrix()), PlanMismatchError);
}
