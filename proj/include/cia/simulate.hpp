#pragma once

#include <map>
#include <set>

#include "cia/channel.hpp"
#include "cia/plan.hpp"

namespace cia {

struct SimulationOutcome {
  bool success = false;
  MessageSet decoded;
  std::map<SubKey, bool> per_message_ok;
  // Occupied dimensions as seen before decoding: per receiver for Delta,
  // the relay signal for Y.
  std::array<std::set<int>, 3> receiver_support{};
  std::set<int> relay_support;
};

struct SimulateOptions {
  bool sic = true;  // negative control: false leaves self-interference in
};

// One frame end to end. Receivers XOR out their own echo (everything they
// transmitted, as shifted by the loop-back link / relay round trip), then read
// one raw coefficient per dedicated submessage. The simulator never consults
// the plan to skip corruption: reads are compared word-for-word against what
// was sent.
SimulationOutcome run_delta(const DeltaChannel& ch, const OffsetPlan& plan,
                            const MessageSet& msgs, int t,
                            const SimulateOptions& opts = {});

SimulationOutcome run_y(const YChannel& ch, const OffsetPlan& plan,
                        const MessageSet& msgs, int t,
                        const SimulateOptions& opts = {});

}  // namespace cia
