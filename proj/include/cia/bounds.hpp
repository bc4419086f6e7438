#pragma once

#include <string>
#include <vector>

#include "cia/alignment.hpp"
#include "cia/channel.hpp"

namespace cia {

// Exact rational DoF value. Kept unreduced: bounds read as M/n, e.g. 6/3 or
// 7/4, and comparisons cross-multiply, so reduction would only obscure the
// dimension count.
struct DofValue {
  long long num = 0;
  long long den = 1;

  bool operator==(const DofValue& o) const { return num * o.den == o.num * den; }
  bool operator<=(const DofValue& o) const { return num * o.den <= o.num * den; }
};

std::string to_string(const DofValue& v);

// General K_T x K_R X-channel bound: numerator = sum of the grid, denominator
// = max over all (j,i) of (row_j + col_i - alpha_ji).
DofValue dof_upper_bound_xchannel(const std::vector<std::vector<int>>& alpha);

// Multiway bound: same denominator expression, but the max skips the (zero)
// diagonal. Its denominator equals dimension_requirement(mm).n.
DofValue dof_upper_bound_multiway(const MessagingMatrix& mm);

// M / plan.n. The plan must cover mm; whether it passes its checker is the
// caller's business (DoF is only meaningful for passing plans).
DofValue achieved_dof(const OffsetPlan& plan, const MessagingMatrix& mm);

}  // namespace cia
