#include "cia/oracle.hpp"

#include <sstream>
#include <thread>

#include "cia/bounds.hpp"
#include "cia/errors.hpp"
#include "cia/simulate.hpp"

namespace cia {

namespace {

// Unrestricted backtracking over raw offset assignments. No congruence
// guidance: this is the ground truth the constructors are measured against.
struct PlainSearch {
  Topology topology;
  const DeltaChannel* dch = nullptr;
  const YChannel* ych = nullptr;
  int n = 1;
  long long budget = kDefaultBudget;
  std::vector<SubKey> keys;
  std::vector<int> chosen;
  long long nodes = 0;
  bool out_of_budget = false;

  bool violates(const SubKey& key, int p, size_t upto) const {
    for (size_t x = 0; x < upto; ++x) {
      const bool bad =
          topology == Topology::Delta
              ? detail::pair_violates_delta(*dch, keys[x], chosen[x], key, p)
              : detail::pair_violates_y(*ych, keys[x], chosen[x], key, p);
      if (bad) return true;
    }
    return false;
  }

  bool run(size_t idx) {
    if (idx == keys.size()) return true;
    for (int p = 0; p < n; ++p) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      if (violates(keys[idx], p, idx)) continue;
      chosen[idx] = p;
      if (run(idx + 1)) return true;
      if (out_of_budget) return false;
    }
    return false;
  }
};

SearchResult search_impl(Topology topology, const DeltaChannel* dch,
                         const YChannel* ych, const MessagingMatrix& mm, int n,
                         long long budget) {
  if (n < 1) throw DimensionError("feasible_plan_search: n must be >= 1");
  PlainSearch s;
  s.topology = topology;
  s.dch = dch;
  s.ych = ych;
  s.n = n;
  s.budget = budget;
  s.keys = message_keys(mm);
  s.chosen.assign(s.keys.size(), 0);

  SearchResult result;
  const bool found = s.run(0);
  result.nodes_explored = s.nodes;
  if (found) {
    OffsetPlan plan{topology, n, {}};
    for (size_t x = 0; x < s.keys.size(); ++x) plan.offsets[s.keys[x]] = s.chosen[x];
    // The pairwise pruning rules and the checker are two renderings of the
    // same conditions; hold the witness to the checker's verdict.
    const SeparabilityReport rep = topology == Topology::Delta
                                       ? check_delta(plan, *dch, mm)
                                       : check_y(plan, *ych, mm);
    if (!rep.pass())
      throw Error("oracle witness failed the separability checker");
    result.status = SearchStatus::Feasible;
    result.witness = std::move(plan);
  } else {
    result.status =
        s.out_of_budget ? SearchStatus::Inconclusive : SearchStatus::Infeasible;
  }
  return result;
}

template <typename Channel>
MinimalNResult minimal_n_impl(const Channel& ch, const MessagingMatrix& mm,
                              int n_max, long long budget) {
  if (n_max < 1) throw DimensionError("minimal_n: n_max must be >= 1");
  MinimalNResult out;
  for (int n = 1; n <= n_max; ++n) {
    const SearchResult r = feasible_plan_search(ch.with_n(n), mm, n, budget);
    out.nodes_explored += r.nodes_explored;
    if (r.status == SearchStatus::Feasible) {
      out.n = n;
      return out;
    }
    if (r.status == SearchStatus::Inconclusive) {
      out.conclusive = false;
      return out;
    }
  }
  return out;
}

long long checked_pow(int base, int exp, long long limit) {
  long long v = 1;
  for (int e = 0; e < exp; ++e) {
    if (v > limit / base)
      throw DimensionError("channel_sweep: enumeration exceeds the limit");
    v *= base;
  }
  return v;
}

DeltaChannel delta_at_index(long long c, int n) {
  std::array<std::array<int, 3>, 3> k{};
  for (int idx = 0; idx < 9; ++idx) {
    k[idx / 3][idx % 3] = static_cast<int>(c % n);
    c /= n;
  }
  return DeltaChannel(n, k);
}

std::array<int, 3> vec3_at_index(long long c, int n) {
  std::array<int, 3> a{};
  for (int idx = 0; idx < 3; ++idx) {
    a[idx] = static_cast<int>(c % n);
    c /= n;
  }
  return a;
}

std::string delta_channel_string(const DeltaChannel& ch) {
  std::ostringstream os;
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i) {
      if (j != 1 || i != 1) os << " ";
      os << ch.k(j, i);
    }
  return os.str();
}

std::string uplink_string(const std::array<int, 3>& a) {
  std::ostringstream os;
  os << a[0] << " " << a[1] << " " << a[2];
  return os.str();
}

// Every 2^M message pattern at t=1: submessage w gets bit w of the pattern.
bool exhaustive_sim_delta(const DeltaChannel& ch, const OffsetPlan& plan,
                          const MessagingMatrix& mm) {
  const auto keys = message_keys(mm);
  if (keys.size() > 20)
    throw DimensionError("exhaustive simulation: too many submessages");
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t(1) << keys.size());
       ++pattern) {
    MessageSet msgs;
    for (size_t w = 0; w < keys.size(); ++w) msgs[keys[w]] = (pattern >> w) & 1;
    if (!run_delta(ch, plan, msgs, 1).success) return false;
  }
  return true;
}

bool exhaustive_sim_y(const std::array<int, 3>& a, const OffsetPlan& plan,
                      const MessagingMatrix& mm, int n) {
  const auto keys = message_keys(mm);
  if (keys.size() > 20)
    throw DimensionError("exhaustive simulation: too many submessages");
  const long long downlinks = checked_pow(n, 3, 1'000'000);
  for (long long bidx = 0; bidx < downlinks; ++bidx) {
    const YChannel ch(n, a, vec3_at_index(bidx, n));
    for (std::uint64_t pattern = 0;
         pattern < (std::uint64_t(1) << keys.size()); ++pattern) {
      MessageSet msgs;
      for (size_t w = 0; w < keys.size(); ++w) msgs[keys[w]] = (pattern >> w) & 1;
      if (!run_y(ch, plan, msgs, 1).success) return false;
    }
  }
  return true;
}

void sweep_range(Topology topology, int n, const MessagingMatrix& mm,
                 const SweepOptions& opts, long long lo, long long hi,
                 SweepSummary& local, std::vector<SweepRow>* rows) {
  for (long long c = lo; c < hi; ++c) {
    SweepRow row;
    row.index = c;
    std::optional<OffsetPlan> plan;
    DeltaChannel dch(1, {});
    std::array<int, 3> up{};
    if (topology == Topology::Delta) {
      dch = delta_at_index(c, n);
      row.channel = delta_channel_string(dch);
      plan = try_construct_delta(dch, mm, n);
    } else {
      up = vec3_at_index(c, n);
      row.channel = uplink_string(up);
      plan = try_construct_y(YChannel(n, up, {0, 0, 0}), mm, n);
    }
    if (plan) {
      row.constructed = true;
      ++local.constructor_successes;
      const SeparabilityReport rep =
          topology == Topology::Delta
              ? check_delta(*plan, dch, mm)
              : check_y(*plan, YChannel(n, up, {0, 0, 0}), mm);
      row.checker_ok = rep.pass();
      if (!rep.pass()) ++local.checker_failures;
      row.sim_ok = true;
      if (opts.exhaustive_sim) {
        row.sim_ok = topology == Topology::Delta
                         ? exhaustive_sim_delta(dch, *plan, mm)
                         : exhaustive_sim_y(up, *plan, mm, n);
        if (!row.sim_ok) ++local.sim_failures;
      }
      row.dof = to_string(achieved_dof(*plan, mm));
      ++local.dof_histogram[row.dof];
    }
    if (rows) (*rows)[static_cast<size_t>(c)] = std::move(row);
  }
}

}  // namespace

SearchResult feasible_plan_search(const DeltaChannel& ch,
                                  const MessagingMatrix& mm, int n,
                                  long long budget) {
  const DeltaChannel bound = ch.with_n(n);
  return search_impl(Topology::Delta, &bound, nullptr, mm, n, budget);
}

SearchResult feasible_plan_search(const YChannel& ch, const MessagingMatrix& mm,
                                  int n, long long budget) {
  const YChannel bound = ch.with_n(n);
  return search_impl(Topology::Y, nullptr, &bound, mm, n, budget);
}

MinimalNResult minimal_n(const DeltaChannel& ch, const MessagingMatrix& mm,
                         int n_max, long long budget) {
  return minimal_n_impl(ch, mm, n_max, budget);
}

MinimalNResult minimal_n(const YChannel& ch, const MessagingMatrix& mm,
                         int n_max, long long budget) {
  return minimal_n_impl(ch, mm, n_max, budget);
}

SweepSummary channel_sweep(Topology topology, int n, const MessagingMatrix& mm,
                           const SweepOptions& opts) {
  if (n < 1) throw DimensionError("channel_sweep: n must be >= 1");
  const int exponents = topology == Topology::Delta ? 9 : 3;
  const long long total = checked_pow(n, exponents, opts.channel_limit);

  SweepSummary summary;
  summary.channels_total = total;
  if (opts.collect_rows) summary.rows.resize(static_cast<size_t>(total));

  const int workers = std::max(1, opts.workers);
  if (workers == 1 || total < 2 * workers) {
    sweep_range(topology, n, mm, opts, 0, total, summary,
                opts.collect_rows ? &summary.rows : nullptr);
    return summary;
  }

  std::vector<SweepSummary> locals(static_cast<size_t>(workers));
  std::vector<std::thread> threads;
  const long long chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long long lo = w * chunk;
    const long long hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, w, lo, hi] {
      sweep_range(topology, n, mm, opts, lo, hi, locals[static_cast<size_t>(w)],
                  opts.collect_rows ? &summary.rows : nullptr);
    });
  }
  for (auto& th : threads) th.join();
  for (const SweepSummary& l : locals) {
    summary.constructor_successes += l.constructor_successes;
    summary.checker_failures += l.checker_failures;
    summary.sim_failures += l.sim_failures;
    for (const auto& [dof, count] : l.dof_histogram)
      summary.dof_histogram[dof] += count;
  }
  return summary;
}

}  // namespace cia
