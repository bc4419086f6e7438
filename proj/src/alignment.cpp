#include "cia/alignment.hpp"

#include <algorithm>

#include "cia/errors.hpp"
#include "cia/oracle.hpp"

namespace cia {

namespace {

int third_user(int i, int j) { return 6 - i - j; }

struct Arrival {
  SubKey key;
  int dim;
};

int delta_arrival(const DeltaChannel& ch, int j, const SubKey& key, int p) {
  return reduce_exponent(ch.k(j, key.src) + p, ch.n());
}

int y_arrival(const YChannel& ch, const SubKey& key, int p) {
  return reduce_exponent(ch.a(key.src) + p, ch.n());
}

}  // namespace

SeparabilityReport check_delta(const OffsetPlan& plan, const DeltaChannel& ch,
                               const MessagingMatrix& mm) {
  require_plan_matches(plan, mm);
  const int n = ch.n();
  SeparabilityReport rep;
  const auto keys = message_keys(mm);

  auto offset = [&](const SubKey& k) {
    return reduce_exponent(plan.offsets.at(k), n);
  };

  // Multiple-access: dedicated arrivals at each receiver pairwise distinct.
  for (int j = 1; j <= 3; ++j) {
    std::vector<Arrival> dedicated;
    for (const SubKey& k : keys)
      if (k.dst == j) dedicated.push_back({k, delta_arrival(ch, j, k, offset(k))});
    for (size_t x = 0; x < dedicated.size(); ++x)
      for (size_t y = x + 1; y < dedicated.size(); ++y)
        if (dedicated[x].dim == dedicated[y].dim)
          rep.violations.push_back({ConditionKind::MultipleAccess,
                                    dedicated[x].key, dedicated[y].key,
                                    dedicated[x].dim});
  }

  // Intra-user: offsets at each transmitter pairwise distinct.
  for (int i = 1; i <= 3; ++i) {
    std::vector<Arrival> sent;
    for (const SubKey& k : keys)
      if (k.src == i) sent.push_back({k, offset(k)});
    for (size_t x = 0; x < sent.size(); ++x)
      for (size_t y = x + 1; y < sent.size(); ++y)
        if (sent[x].dim == sent[y].dim)
          rep.violations.push_back({ConditionKind::IntraUser, sent[x].key,
                                    sent[y].key, sent[x].dim});
  }

  // Inter-user: no dedicated arrival coincides with any interference arrival.
  // Interference at receiver j = submessages neither destined to j nor
  // transmitted by j (the latter are removed by SIC).
  for (int j = 1; j <= 3; ++j) {
    for (const SubKey& kd : keys) {
      if (kd.dst != j) continue;
      const int dd = delta_arrival(ch, j, kd, offset(kd));
      for (const SubKey& ki : keys) {
        if (ki.dst == j || ki.src == j) continue;
        if (delta_arrival(ch, j, ki, offset(ki)) == dd)
          rep.violations.push_back({ConditionKind::InterUser, kd, ki, dd});
      }
    }
  }
  return rep;
}

SeparabilityReport check_y(const OffsetPlan& plan, const YChannel& ch,
                           const MessagingMatrix& mm) {
  require_plan_matches(plan, mm);
  const int n = ch.n();
  SeparabilityReport rep;
  const auto keys = message_keys(mm);

  // All conditions live on uplink arrival dimensions at the relay; the
  // downlink is a common rotation and imposes nothing. A collision corrupts
  // a submessage dedicated to j unless the collider was transmitted by j
  // itself; index-swapped pairs are therefore mutually exempt partners.
  for (size_t x = 0; x < keys.size(); ++x) {
    const SubKey& k1 = keys[x];
    const int d1 = y_arrival(ch, k1, reduce_exponent(plan.offsets.at(k1), n));
    for (size_t y = x + 1; y < keys.size(); ++y) {
      const SubKey& k2 = keys[y];
      const int d2 = y_arrival(ch, k2, reduce_exponent(plan.offsets.at(k2), n));
      if (d1 != d2) continue;
      if (k2.src == k1.dst && k1.src == k2.dst) continue;  // aligned partners
      ConditionKind kind = ConditionKind::InterUser;
      if (k1.dst == k2.dst)
        kind = ConditionKind::MultipleAccess;
      else if (k1.src == k2.src)
        kind = ConditionKind::IntraUser;
      rep.violations.push_back({kind, k1, k2, d1});
    }
  }
  return rep;
}

DimensionRequirement dimension_requirement(const MessagingMatrix& mm) {
  int nj[4] = {0, 0, 0, 0};
  for (int j = 1; j <= 3; ++j) {
    const int i = (j % 3) + 1;
    const int k = third_user(i, j);
    nj[j] = mm.alpha(j, i) + mm.alpha(j, k) +
            std::max(mm.alpha(i, k), mm.alpha(k, i));
  }
  const int n = std::max({nj[1], nj[2], nj[3], 1});
  return {nj[1], nj[2], nj[3], n};
}

namespace detail {

bool pair_violates_delta(const DeltaChannel& ch, const SubKey& k1, int p1,
                         const SubKey& k2, int p2) {
  if (k1.src == k2.src && p1 == p2) return true;  // intra-user
  if (k1.dst == k2.dst)                           // multiple-access
    return delta_arrival(ch, k1.dst, k1, p1) == delta_arrival(ch, k1.dst, k2, p2);
  // inter-user, evaluated at both dedicated receivers
  if (k2.src != k1.dst &&
      delta_arrival(ch, k1.dst, k1, p1) == delta_arrival(ch, k1.dst, k2, p2))
    return true;
  if (k1.src != k2.dst &&
      delta_arrival(ch, k2.dst, k2, p2) == delta_arrival(ch, k2.dst, k1, p1))
    return true;
  return false;
}

bool pair_violates_y(const YChannel& ch, const SubKey& k1, int p1,
                     const SubKey& k2, int p2) {
  if (y_arrival(ch, k1, p1) != y_arrival(ch, k2, p2)) return false;
  return !(k2.src == k1.dst && k1.src == k2.dst);
}

}  // namespace detail

namespace {

// Aligned backtracking: keys in lex (j,i,m) order, values ascending; the
// later half of each index-swapped pair with m <= min(alpha_ji, alpha_ij) is
// forced through the alignment congruence rather than searched.
struct AlignedSearch {
  Topology topology;
  const DeltaChannel* dch = nullptr;
  const YChannel* ych = nullptr;
  const MessagingMatrix* mm = nullptr;
  int n = 1;
  std::vector<SubKey> keys;
  std::vector<int> chosen;

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

  // Forced value for the second member of an aligned pair, if any.
  std::optional<int> forced_value(const SubKey& key, size_t idx) const {
    if (key.m > std::min(mm->alpha(key.dst, key.src), mm->alpha(key.src, key.dst)))
      return std::nullopt;  // surplus submessage: plain multiple access
    const SubKey partner{key.src, key.dst, key.m};
    if (!(partner < key)) return std::nullopt;  // partner assigned later
    int pp = -1;
    for (size_t x = 0; x < idx; ++x)
      if (keys[x] == partner) pp = chosen[x];
    if (pp < 0) return std::nullopt;
    if (topology == Topology::Y)
      return reduce_exponent(ych->a(key.dst) + pp - ych->a(key.src), n);
    const int r = third_user(key.dst, key.src);
    return reduce_exponent(dch->k(r, key.dst) + pp - dch->k(r, key.src), n);
  }

  bool run(size_t idx) {
    if (idx == keys.size()) return true;
    const SubKey& key = keys[idx];
    if (auto fp = forced_value(key, idx)) {
      if (violates(key, *fp, idx)) return false;
      chosen[idx] = *fp;
      return run(idx + 1);
    }
    for (int p = 0; p < n; ++p) {
      if (violates(key, p, idx)) continue;
      chosen[idx] = p;
      if (run(idx + 1)) return true;
    }
    return false;
  }
};

std::optional<OffsetPlan> aligned_search(Topology topology,
                                         const DeltaChannel* dch,
                                         const YChannel* ych,
                                         const MessagingMatrix& mm, int n) {
  AlignedSearch s;
  s.topology = topology;
  s.dch = dch;
  s.ych = ych;
  s.mm = &mm;
  s.n = n;
  s.keys = message_keys(mm);
  s.chosen.assign(s.keys.size(), 0);
  if (!s.run(0)) return std::nullopt;
  OffsetPlan plan{topology, n, {}};
  for (size_t x = 0; x < s.keys.size(); ++x) plan.offsets[s.keys[x]] = s.chosen[x];
  return plan;
}

}  // namespace

std::optional<OffsetPlan> try_construct_delta(const DeltaChannel& ch,
                                              const MessagingMatrix& mm, int n) {
  const DeltaChannel bound = ch.with_n(n);
  if (auto plan = aligned_search(Topology::Delta, &bound, nullptr, mm, n))
    return plan;
  // Aligned pairing deadlocked; try every assignment before giving up.
  SearchResult fallback = feasible_plan_search(bound, mm, n);
  if (fallback.status == SearchStatus::Feasible) return fallback.witness;
  return std::nullopt;
}

std::optional<OffsetPlan> try_construct_y(const YChannel& ch,
                                          const MessagingMatrix& mm, int n) {
  const YChannel bound = ch.with_n(n);
  if (auto plan = aligned_search(Topology::Y, nullptr, &bound, mm, n))
    return plan;
  SearchResult fallback = feasible_plan_search(bound, mm, n);
  if (fallback.status == SearchStatus::Feasible) return fallback.witness;
  return std::nullopt;
}

OffsetPlan construct_delta_elementary(const DeltaChannel& ch) {
  if (ch.n() != 3)
    throw DimensionError("construct_delta_elementary: channel must have n=3");
  if (auto plan = try_construct_delta(ch, MessagingMatrix::uniform(), 3))
    return *plan;
  throw InfeasibleError("no separable plan exists at n=3");
}

OffsetPlan construct_y_elementary(const YChannel& ch) {
  if (ch.n() != 3)
    throw DimensionError("construct_y_elementary: channel must have n=3");
  if (auto plan = try_construct_y(ch, MessagingMatrix::uniform(), 3))
    return *plan;
  throw InfeasibleError("no separable plan exists at n=3");
}

GeneralConstruction construct_delta_general(const DeltaChannel& ch,
                                            const MessagingMatrix& mm) {
  if (mm.total() == 0) return {OffsetPlan{Topology::Delta, 1, {}}, 1};
  const int n = std::max(dimension_requirement(mm).n, ch.n());
  if (auto plan = try_construct_delta(ch, mm, n)) return {*plan, n};
  throw InfeasibleError("no separable plan exists at n=" + std::to_string(n));
}

GeneralConstruction construct_y_general(const YChannel& ch,
                                        const MessagingMatrix& mm) {
  if (mm.total() == 0) return {OffsetPlan{Topology::Y, 1, {}}, 1};
  const int n = std::max(dimension_requirement(mm).n, ch.n());
  if (auto plan = try_construct_y(ch, mm, n)) return {*plan, n};
  throw InfeasibleError("no separable plan exists at n=" + std::to_string(n));
}

}  // namespace cia
