#include "cia/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cia/errors.hpp"

namespace cia {

namespace {

int require_int(const Json& j, const std::string& field, int lo, int hi) {
  if (!j.contains(field)) throw ScenarioError(field, "missing");
  if (!j[field].is_number_integer()) throw ScenarioError(field, "must be an integer");
  const long long v = j[field].get<long long>();
  if (v < lo || v > hi)
    throw ScenarioError(field, "must be in [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
  return static_cast<int>(v);
}

std::array<std::array<int, 3>, 3> grid3(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) throw ScenarioError(field, "must be a 3x3 grid");
  std::array<std::array<int, 3>, 3> g{};
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3)
      throw ScenarioError(field, "must be a 3x3 grid");
    for (int c = 0; c < 3; ++c) {
      if (!j[r][c].is_number_integer())
        throw ScenarioError(field, "entries must be integers");
      g[r][c] = j[r][c].get<int>();
    }
  }
  return g;
}

std::array<int, 3> vec3(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3)
    throw ScenarioError(field, "must be a vector of 3 integers");
  std::array<int, 3> v{};
  for (int c = 0; c < 3; ++c) {
    if (!j[c].is_number_integer())
      throw ScenarioError(field, "entries must be integers");
    v[c] = j[c].get<int>();
  }
  return v;
}

const char* kind_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::MultipleAccess: return "multiple-access";
    case ConditionKind::IntraUser: return "intra-user";
    case ConditionKind::InterUser: return "inter-user";
  }
  return "?";
}

}  // namespace

std::string key_to_string(const SubKey& k) {
  std::ostringstream os;
  os << k.dst << "," << k.src << "," << k.m;
  return os.str();
}

SubKey key_from_string(const std::string& s) {
  SubKey k{};
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> k.dst >> c1 >> k.src >> c2 >> k.m) || c1 != ',' || c2 != ',' ||
      !is.eof() || k.dst < 1 || k.dst > 3 || k.src < 1 || k.src > 3 || k.m < 1)
    throw ScenarioError("plan", "bad submessage key '" + s + "'");
  return k;
}

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw ScenarioError("schema", "scenario must be an object");
  if (require_int(j, "schema", 1, 1) != 1) throw ScenarioError("schema", "must be 1");

  Scenario sc;
  if (j.contains("topology")) {
    const auto top = j["topology"];
    if (top == "delta")
      sc.topology = Topology::Delta;
    else if (top == "y")
      sc.topology = Topology::Y;
    else
      throw ScenarioError("topology", "must be \"delta\" or \"y\"");
  }
  if (j.contains("n")) sc.n = require_int(j, "n", 1, 64);
  if (j.contains("t")) sc.t = require_int(j, "t", 1, 64);
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() &&
        !(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0))
      throw ScenarioError("seed", "must be a non-negative integer");
    sc.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("sic")) {
    if (!j["sic"].is_boolean()) throw ScenarioError("sic", "must be a boolean");
    sc.sic = j["sic"].get<bool>();
  }
  if (j.contains("alpha")) {
    sc.alpha_given = true;
    try {
      sc.alpha = MessagingMatrix(grid3(j["alpha"], "alpha"));
    } catch (const DimensionError& e) {
      throw ScenarioError("alpha", e.what());
    }
  }

  if (sc.topology) {
    if (!sc.n) throw ScenarioError("n", "missing");
    if (j.contains("channel")) {
      const Json& ch = j["channel"];
      if (!ch.is_object()) throw ScenarioError("channel", "must be an object");
      if (*sc.topology == Topology::Delta) {
        if (!ch.contains("k")) throw ScenarioError("channel.k", "missing");
        sc.delta = DeltaChannel(*sc.n, grid3(ch["k"], "channel.k"));
      } else {
        if (!ch.contains("a")) throw ScenarioError("channel.a", "missing");
        if (!ch.contains("b")) throw ScenarioError("channel.b", "missing");
        sc.y = YChannel(*sc.n, vec3(ch["a"], "channel.a"), vec3(ch["b"], "channel.b"));
      }
    }
  }

  if (j.contains("plan")) {
    if (!sc.topology || !sc.n)
      throw ScenarioError("plan", "plan requires topology and n");
    if (!j["plan"].is_object()) throw ScenarioError("plan", "must be an object");
    OffsetPlan plan{*sc.topology, *sc.n, {}};
    for (const auto& [key, val] : j["plan"].items()) {
      if (!val.is_number_integer())
        throw ScenarioError("plan", "offsets must be integers");
      plan.offsets[key_from_string(key)] = reduce_exponent(val.get<long long>(), *sc.n);
    }
    sc.plan = std::move(plan);
  }

  if (j.contains("mimo")) {
    const Json& m = j["mimo"];
    if (!m.is_object() || !m.contains("A") || !m.contains("AR"))
      throw ScenarioError("mimo", "must hold \"A\" (3 counts) and \"AR\"");
    const auto A = vec3(m["A"], "mimo.A");
    const int ar = require_int(m, "AR", 1, 1'000'000);
    sc.mimo = MimoConfig{A[0], A[1], A[2], ar};
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ScenarioError("(file)", std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(j);
}

Json Scenario::echo() const {
  Json j;
  j["schema"] = 1;
  if (topology) j["topology"] = *topology == Topology::Delta ? "delta" : "y";
  if (n) j["n"] = *n;
  j["t"] = t;
  if (delta) {
    Json k = Json::array();
    for (int r = 1; r <= 3; ++r) {
      Json row = Json::array();
      for (int c = 1; c <= 3; ++c) row.push_back(delta->k(r, c));
      k.push_back(row);
    }
    j["channel"] = Json{{"k", k}};
  }
  if (y) {
    j["channel"] = Json{{"a", {y->a(1), y->a(2), y->a(3)}},
                        {"b", {y->b(1), y->b(2), y->b(3)}}};
  }
  {
    Json a = Json::array();
    for (int r = 1; r <= 3; ++r) {
      Json row = Json::array();
      for (int c = 1; c <= 3; ++c) row.push_back(alpha.alpha(r, c));
      a.push_back(row);
    }
    j["alpha"] = a;
  }
  j["seed"] = seed;
  j["sic"] = sic;
  if (plan) j["plan"] = plan_to_json(*plan);
  if (mimo)
    j["mimo"] = Json{{"A", {mimo->A1, mimo->A2, mimo->A3}}, {"AR", mimo->AR}};
  return j;
}

Json plan_to_json(const OffsetPlan& plan) {
  Json j = Json::object();
  for (const auto& [key, p] : plan.offsets) j[key_to_string(key)] = p;
  return j;
}

Json dof_to_json(const DofValue& v) { return Json{{"num", v.num}, {"den", v.den}}; }

Json report_to_json(const SeparabilityReport& rep) {
  Json v = Json::array();
  for (const Violation& viol : rep.violations)
    v.push_back(Json{{"condition", kind_name(viol.kind)},
                     {"a", key_to_string(viol.a)},
                     {"b", key_to_string(viol.b)},
                     {"dim", viol.dim}});
  return Json{{"verdict", rep.pass() ? "pass" : "fail"}, {"violations", v}};
}

Json outcome_to_json(const SimulationOutcome& out, Topology topology) {
  Json per = Json::object();
  for (const auto& [key, ok] : out.per_message_ok)
    per[key_to_string(key)] = ok ? "ok" : "corrupted";
  Json decoded = Json::object();
  for (const auto& [key, word] : out.decoded) decoded[key_to_string(key)] = word;
  Json j;
  j["success"] = out.success;
  j["per_message"] = per;
  j["decoded"] = decoded;
  Json rsup = Json::array();
  for (const auto& s : out.receiver_support) rsup.push_back(s);
  j["receiver_support"] = rsup;
  if (topology == Topology::Y) j["relay_support"] = out.relay_support;
  return j;
}

Json sweep_to_json(const SweepSummary& s) {
  Json hist = Json::object();
  for (const auto& [dof, count] : s.dof_histogram) hist[dof] = count;
  Json failures = Json::array();
  for (const SweepRow& row : s.rows) {
    if (row.constructed && row.checker_ok && row.sim_ok) continue;
    if (failures.size() >= 20) break;
    failures.push_back(Json{{"index", row.index}, {"channel", row.channel}});
  }
  return Json{{"channels_total", s.channels_total},
              {"constructor_successes", s.constructor_successes},
              {"constructor_failures", s.channels_total - s.constructor_successes},
              {"checker_failures", s.checker_failures},
              {"sim_failures", s.sim_failures},
              {"dof_histogram", hist},
              {"failures_sample", failures}};
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path);
  if (!outf) throw IoError("cannot write file: " + path);
  outf << text;
  if (!outf) throw IoError("write failed: " + path);
}

std::string sweep_to_csv(const SweepSummary& s) {
  std::ostringstream os;
  os << "index,channel,constructed,checker_ok,sim_ok,dof\n";
  for (const SweepRow& row : s.rows)
    os << row.index << "," << row.channel << "," << (row.constructed ? 1 : 0)
       << "," << (row.checker_ok ? 1 : 0) << "," << (row.sim_ok ? 1 : 0) << ","
       << row.dof << "\n";
  return os.str();
}

}  // namespace cia
