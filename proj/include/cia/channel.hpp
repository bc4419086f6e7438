#pragma once

#include <array>
#include <map>

#include "cia/plan.hpp"
#include "cia/ring.hpp"

namespace cia {

// Submessage counts alpha_ji: row j = destination, column i = source.
// The diagonal is zero; users do not message themselves.
class MessagingMatrix {
 public:
  MessagingMatrix();  // all-zero
  explicit MessagingMatrix(const std::array<std::array<int, 3>, 3>& alpha);

  static MessagingMatrix uniform();  // alpha_ji = 1 off-diagonal

  int alpha(int j, int i) const { return a_[j - 1][i - 1]; }
  int total() const;  // M

  bool operator==(const MessagingMatrix&) const = default;

 private:
  std::array<std::array<int, 3>, 3> a_;
};

// 3-way Delta channel: d_ji = x^{k_ji}, from source i to destination j.
// Exponents are canonicalized to [0, n) on construction.
class DeltaChannel {
 public:
  DeltaChannel(int n, const std::array<std::array<int, 3>, 3>& k);

  int n() const { return n_; }
  int k(int j, int i) const { return k_[j - 1][i - 1]; }
  // Same exponents reinterpreted modulo another dimension count.
  DeltaChannel with_n(int n) const;

  bool operator==(const DeltaChannel&) const = default;

 private:
  int n_;
  std::array<std::array<int, 3>, 3> k_;
};

// Y-channel: one relay; uplink e_Ri = x^{a_i}, downlink f_jR = x^{b_j}.
class YChannel {
 public:
  YChannel(int n, const std::array<int, 3>& a, const std::array<int, 3>& b);

  int n() const { return n_; }
  int a(int i) const { return a_[i - 1]; }
  int b(int j) const { return b_[j - 1]; }
  YChannel with_n(int n) const;

  bool operator==(const YChannel&) const = default;

 private:
  int n_;
  std::array<int, 3> a_;
  std::array<int, 3> b_;
};

// The transmitted words W_ji^[m], keyed like the plan.
using MessageSet = std::map<SubKey, Word>;

// All submessage keys of a messaging matrix in lexicographic (j,i,m) order.
std::vector<SubKey> message_keys(const MessagingMatrix& mm);

// Throws PlanMismatchError unless the plan covers exactly the keys of mm.
void require_plan_matches(const OffsetPlan& plan, const MessagingMatrix& mm);

// u_i(x): every word of source i XOR-accumulated at its planned offset.
CyclicPoly encode(const OffsetPlan& plan, const MessageSet& msgs, int i, int t);

// r_j = sum_i d_ji u_i, loop-back term included (SIC is the receiver's job).
std::array<CyclicPoly, 3> delta_receive(const DeltaChannel& ch,
                                        const std::array<CyclicPoly, 3>& u);

// r_R = sum_i e_Ri u_i.
CyclicPoly y_uplink(const YChannel& ch, const std::array<CyclicPoly, 3>& u);

// Receiver j hears x^{b_j} r_R.
std::array<CyclicPoly, 3> y_downlink(const YChannel& ch, const CyclicPoly& r_relay);

}  // namespace cia
