#pragma once

#include <optional>

#include "cia/bounds.hpp"
#include "cia/channel.hpp"

namespace cia {

// Effective Delta channel of a relay round trip: source i's uplink shift plus
// destination j's downlink shift, k_ji = (a_i + b_j) mod n.
DeltaChannel compose(const YChannel& y);

// Witness of k_ji = a_i + b_j, gauge-fixed to a_1 = 0. The product is
// invariant under (a + c, b - c), so the canonical representative makes
// round trips exact.
struct ProductDecomposition {
  std::array<int, 3> a;
  std::array<int, 3> b;
};

// Decomposable iff k_ji + k_11 = k_j1 + k_1i (mod n) for all i, j.
// Not-decomposable is a normal result, not an error.
std::optional<ProductDecomposition> decompose(const DeltaChannel& ch);

// Executable form of the product claim: the relay-mediated simulation and the
// composed direct-channel simulation succeed together and decode identically.
bool transfer_equivalence(const YChannel& y, const OffsetPlan& plan,
                          const MessageSet& msgs, int t);

// Antenna counts; canonical order A1 >= A2 >= A3.
struct MimoConfig {
  int A1;
  int A2;
  int A3;
  int AR;

  MimoConfig sorted() const;
};

// min(2(A2+A3), A1+A2+A3, 2 AR) on the sorted configuration.
long long mimo_dof_bound(const MimoConfig& cfg);

// Bound normalized by AR, with the matching case label:
//   A: AR = A2+A3 and A2+A3 <= A1
//   B: 2 AR = A1+A2+A3 and A1 <= A2+A3
//   C: AR <= A2+A3 and 2 AR <= A1+A2+A3
// Every in-case configuration normalizes to exactly 2; configurations
// matching no case get label '-' and the raw ratio.
struct MimoResult {
  DofValue dof;
  char case_label;  // 'A', 'B', 'C', or '-'
};
MimoResult mimo_normalized_dof(const MimoConfig& cfg);

}  // namespace cia
