#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cia/alignment.hpp"
#include "cia/bounds.hpp"
#include "cia/channel.hpp"
#include "cia/oracle.hpp"
#include "cia/simulate.hpp"
#include "cia/ydelta.hpp"

namespace cia {

using Json = nlohmann::ordered_json;

// A validated scenario file. Fields the file omitted hold their defaults;
// echo() rebuilds the normalized form, which reproduces this scenario
// exactly when fed back in.
struct Scenario {
  std::optional<Topology> topology;
  std::optional<int> n;
  int t = 8;
  std::optional<DeltaChannel> delta;
  std::optional<YChannel> y;
  MessagingMatrix alpha = MessagingMatrix::uniform();
  bool alpha_given = false;
  std::uint64_t seed = 0;
  std::optional<OffsetPlan> plan;
  bool sic = true;
  std::optional<MimoConfig> mimo;

  Json echo() const;
};

Scenario parse_scenario(const Json& j);
Scenario load_scenario(const std::string& path);

std::string key_to_string(const SubKey& k);
SubKey key_from_string(const std::string& s);

Json plan_to_json(const OffsetPlan& plan);
Json dof_to_json(const DofValue& v);
Json report_to_json(const SeparabilityReport& rep);
Json outcome_to_json(const SimulationOutcome& out, Topology topology);
Json sweep_to_json(const SweepSummary& s);

void write_text_file(const std::string& path, const std::string& text);
std::string sweep_to_csv(const SweepSummary& s);

}  // namespace cia
