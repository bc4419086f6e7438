#include "cia/bounds.hpp"

#include <algorithm>

#include "cia/errors.hpp"

namespace cia {

std::string to_string(const DofValue& v) {
  return std::to_string(v.num) + "/" + std::to_string(v.den);
}

DofValue dof_upper_bound_xchannel(const std::vector<std::vector<int>>& alpha) {
  if (alpha.empty() || alpha[0].empty())
    throw DimensionError("dof_upper_bound_xchannel: empty grid");
  const size_t rows = alpha.size(), cols = alpha[0].size();
  long long total = 0;
  std::vector<long long> row(rows, 0), col(cols, 0);
  for (size_t j = 0; j < rows; ++j) {
    if (alpha[j].size() != cols)
      throw DimensionError("dof_upper_bound_xchannel: ragged grid");
    for (size_t i = 0; i < cols; ++i) {
      if (alpha[j][i] < 0)
        throw DimensionError("dof_upper_bound_xchannel: negative count");
      total += alpha[j][i];
      row[j] += alpha[j][i];
      col[i] += alpha[j][i];
    }
  }
  long long den = 0;
  for (size_t j = 0; j < rows; ++j)
    for (size_t i = 0; i < cols; ++i)
      den = std::max(den, row[j] + col[i] - alpha[j][i]);
  if (den == 0) den = 1;  // all-zero grid
  return {total, den};
}

DofValue dof_upper_bound_multiway(const MessagingMatrix& mm) {
  long long total = mm.total();
  long long den = 0;
  for (int j = 1; j <= 3; ++j) {
    long long row = 0;
    for (int i = 1; i <= 3; ++i) row += mm.alpha(j, i);
    for (int i = 1; i <= 3; ++i) {
      if (i == j) continue;
      long long col = 0;
      for (int jj = 1; jj <= 3; ++jj) col += mm.alpha(jj, i);
      den = std::max(den, row + col - mm.alpha(j, i));
    }
  }
  if (den == 0) den = 1;
  return {total, den};
}

DofValue achieved_dof(const OffsetPlan& plan, const MessagingMatrix& mm) {
  require_plan_matches(plan, mm);
  if (plan.n < 1) throw DimensionError("achieved_dof: plan has invalid n");
  return {mm.total(), plan.n};
}

}  // namespace cia
