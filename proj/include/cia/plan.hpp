#pragma once

#include <compare>
#include <map>

namespace cia {

enum class Topology { Delta, Y };

// Identifies one submessage W_ji^[m]: destination j, source i, index m.
// All three are 1-based, matching the j,i,m notation used everywhere.
struct SubKey {
  int dst;
  int src;
  int m;
  auto operator<=>(const SubKey&) const = default;
};

// An alignment scheme: one offset p_ji^[m] in [0, n) per submessage.
struct OffsetPlan {
  Topology topology = Topology::Delta;
  int n = 1;
  std::map<SubKey, int> offsets;
};

}  // namespace cia
