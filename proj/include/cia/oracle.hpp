#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cia/alignment.hpp"
#include "cia/channel.hpp"

namespace cia {

inline constexpr long long kDefaultBudget = 1'000'000'000;

enum class SearchStatus { Feasible, Infeasible, Inconclusive };

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<OffsetPlan> witness;  // present iff Feasible; passes the checker
  long long nodes_explored = 0;

  bool feasible() const { return status == SearchStatus::Feasible; }
};

// Ground-truth engine: plain backtracking over every offset assignment in
// lexicographic (j,i,m) order with ascending values, pruning on the first
// pairwise violation. Independent of the constructors; Inconclusive when the
// node budget runs out before an answer.
SearchResult feasible_plan_search(const DeltaChannel& ch,
                                  const MessagingMatrix& mm, int n,
                                  long long budget = kDefaultBudget);
SearchResult feasible_plan_search(const YChannel& ch, const MessagingMatrix& mm,
                                  int n, long long budget = kDefaultBudget);

// Smallest n <= n_max at which a separable plan exists. Channel exponents are
// reinterpreted modulo each candidate n. conclusive is false when a budget
// ran out before the answer was pinned down.
struct MinimalNResult {
  std::optional<int> n;
  bool conclusive = true;
  long long nodes_explored = 0;
};
MinimalNResult minimal_n(const DeltaChannel& ch, const MessagingMatrix& mm,
                         int n_max, long long budget = kDefaultBudget);
MinimalNResult minimal_n(const YChannel& ch, const MessagingMatrix& mm,
                         int n_max, long long budget = kDefaultBudget);

struct SweepOptions {
  int workers = 1;
  // Also run every constructed plan through the simulator, exhaustively over
  // all 2^M message patterns at t=1 (Y channels: against every downlink).
  bool exhaustive_sim = false;
  bool collect_rows = true;  // per-channel CSV rows
  long long channel_limit = 100'000'000;  // enumeration guard
};

struct SweepRow {
  long long index = 0;
  std::string channel;  // exponents, row-major / uplink order
  bool constructed = false;
  bool checker_ok = false;
  bool sim_ok = false;
  std::string dof;  // empty when not constructed
};

struct SweepSummary {
  long long channels_total = 0;
  long long constructor_successes = 0;
  long long checker_failures = 0;  // constructed plans failing the checker
  long long sim_failures = 0;      // constructed plans failing simulation
  std::map<std::string, long long> dof_histogram;
  std::vector<SweepRow> rows;  // filled when collect_rows
};

// Runs the constructor (aligned search + unrestricted fallback at exactly n)
// on every channel of the topology: all n^9 Delta exponent grids, or all n^3
// Y uplink vectors. Work may be partitioned across threads; the summary is
// identical regardless of worker count.
SweepSummary channel_sweep(Topology topology, int n, const MessagingMatrix& mm,
                           const SweepOptions& opts = {});

}  // namespace cia
