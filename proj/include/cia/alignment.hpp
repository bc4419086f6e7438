#pragma once

#include <optional>
#include <vector>

#include "cia/channel.hpp"
#include "cia/plan.hpp"

namespace cia {

enum class ConditionKind { MultipleAccess, IntraUser, InterUser };

struct Violation {
  ConditionKind kind;
  SubKey a;
  SubKey b;
  int dim;  // arrival dimension (offset itself for intra-user)
};

struct SeparabilityReport {
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

// Separability audit at every receiver. Submessages transmitted by the
// receiving user itself are exempt everywhere: the receiver regenerates and
// XORs them out (SIC), whether they arrive over the loop-back link (Delta) or
// echoed by the relay (Y). Violations are enumerated exhaustively.
SeparabilityReport check_delta(const OffsetPlan& plan, const DeltaChannel& ch,
                               const MessagingMatrix& mm);
SeparabilityReport check_y(const OffsetPlan& plan, const YChannel& ch,
                           const MessagingMatrix& mm);

// Dimension requirement of a messaging matrix:
// n_j = alpha_ji + alpha_jk + max(alpha_ik, alpha_ki), n = max_j n_j,
// floored to 1 so the degenerate all-zero matrix stays well-defined.
struct DimensionRequirement {
  int n1;
  int n2;
  int n3;
  int n;
};
DimensionRequirement dimension_requirement(const MessagingMatrix& mm);

// Scheme constructors. Offsets are searched in lexicographic (j,i,m) order
// with ascending values, index-swapped partners forced through the alignment
// congruence, so outputs are deterministic. If the aligned search deadlocks,
// an unrestricted search at the same n is tried before giving up.
// The try_* forms return nullopt when no plan exists at dimension n; the
// named constructors throw InfeasibleError instead.
std::optional<OffsetPlan> try_construct_delta(const DeltaChannel& ch,
                                              const MessagingMatrix& mm, int n);
std::optional<OffsetPlan> try_construct_y(const YChannel& ch,
                                          const MessagingMatrix& mm, int n);

OffsetPlan construct_delta_elementary(const DeltaChannel& ch);  // n = 3
OffsetPlan construct_y_elementary(const YChannel& ch);          // n = 3

struct GeneralConstruction {
  OffsetPlan plan;
  int n;
};
GeneralConstruction construct_delta_general(const DeltaChannel& ch,
                                            const MessagingMatrix& mm);
GeneralConstruction construct_y_general(const YChannel& ch,
                                        const MessagingMatrix& mm);

namespace detail {

// Pairwise form of the separability conditions, used for search pruning.
bool pair_violates_delta(const DeltaChannel& ch, const SubKey& k1, int p1,
                         const SubKey& k2, int p2);
bool pair_violates_y(const YChannel& ch, const SubKey& k1, int p1,
                     const SubKey& k2, int p2);

}  // namespace detail

}  // namespace cia
