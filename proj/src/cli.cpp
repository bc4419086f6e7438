#include "cia/cli.hpp"

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "cia/errors.hpp"
#include "cia/json_io.hpp"
#include "cia/rng.hpp"
#include "cia/version.hpp"

namespace cia {

namespace {

struct Args {
  std::string scenario_path;
  std::string out_path;
  std::string csv_path;
  int workers = 1;
  int n_max = 0;  // 0: use the scenario's n
  long long budget = kDefaultBudget;
  bool sim = false;
  int A1 = 0, A2 = 0, A3 = 0, AR = 0;  // mimo shortcut flags
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json base_report(const std::string& command, const Scenario& sc) {
  Json r;
  r["schema"] = 1;
  r["tool"] = "align";
  r["version"] = kVersion;
  r["command"] = command;
  r["scenario"] = sc.echo();
  return r;
}

void emit(Json report, const Args& args, Clock::time_point t0,
          const std::string& summary) {
  report["wall_ms"] = ms_since(t0);
  const std::string text = report.dump(2) + "\n";
  if (!args.out_path.empty()) {
    write_text_file(args.out_path, text);
    std::cout << summary << "\n";
  } else {
    std::cerr << summary << "\n";
    std::cout << text;
  }
}

const DeltaChannel& require_delta(const Scenario& sc) {
  if (!sc.delta) throw ScenarioError("channel", "missing (delta topology)");
  return *sc.delta;
}

const YChannel& require_y(const Scenario& sc) {
  if (!sc.y) throw ScenarioError("channel", "missing (y topology)");
  return *sc.y;
}

Topology require_topology(const Scenario& sc) {
  if (!sc.topology) throw ScenarioError("topology", "missing");
  return *sc.topology;
}

int require_n(const Scenario& sc) {
  if (!sc.n) throw ScenarioError("n", "missing");
  return *sc.n;
}

Json requirement_to_json(const DimensionRequirement& r) {
  return Json{{"n1", r.n1}, {"n2", r.n2}, {"n3", r.n3}, {"n", r.n}};
}

SeparabilityReport run_checker(const Scenario& sc, const OffsetPlan& plan) {
  if (*sc.topology == Topology::Delta)
    return check_delta(plan, require_delta(sc).with_n(plan.n), sc.alpha);
  return check_y(plan, require_y(sc).with_n(plan.n), sc.alpha);
}

int cmd_bound(const Scenario& sc, const Args& args, Clock::time_point t0) {
  std::vector<std::vector<int>> grid(3, std::vector<int>(3));
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i) grid[j - 1][i - 1] = sc.alpha.alpha(j, i);
  const DofValue mw = dof_upper_bound_multiway(sc.alpha);
  Json r = base_report("bound", sc);
  r["xchannel_bound"] = dof_to_json(dof_upper_bound_xchannel(grid));
  r["multiway_bound"] = dof_to_json(mw);
  r["dimension_requirement"] = requirement_to_json(dimension_requirement(sc.alpha));
  emit(std::move(r), args, t0, "bound: " + to_string(mw));
  return 0;
}

int cmd_construct(const Scenario& sc, const Args& args, Clock::time_point t0) {
  const Topology topology = require_topology(sc);
  Json r = base_report("construct", sc);
  r["dimension_requirement"] = requirement_to_json(dimension_requirement(sc.alpha));
  try {
    const GeneralConstruction built =
        topology == Topology::Delta
            ? construct_delta_general(require_delta(sc), sc.alpha)
            : construct_y_general(require_y(sc), sc.alpha);
    const SeparabilityReport rep = run_checker(sc, built.plan);
    const DofValue dof = achieved_dof(built.plan, sc.alpha);
    r["constructed"] = true;
    r["n"] = built.n;
    r["plan"] = plan_to_json(built.plan);
    r["check"] = report_to_json(rep);
    r["achieved_dof"] = dof_to_json(dof);
    emit(std::move(r), args, t0,
         "construct: n=" + std::to_string(built.n) + " dof=" + to_string(dof) +
             (rep.pass() ? " check=pass" : " check=fail"));
    return rep.pass() ? 0 : 1;
  } catch (const InfeasibleError& e) {
    r["constructed"] = false;
    r["error"] = e.what();
    emit(std::move(r), args, t0, std::string("construct: infeasible (") + e.what() + ")");
    return 1;
  }
}

int cmd_check(const Scenario& sc, const Args& args, Clock::time_point t0) {
  require_topology(sc);
  if (!sc.plan) throw ScenarioError("plan", "missing (check needs a plan)");
  const SeparabilityReport rep = run_checker(sc, *sc.plan);
  Json r = base_report("check", sc);
  r["check"] = report_to_json(rep);
  emit(std::move(r), args, t0,
       std::string("check: ") + (rep.pass() ? "pass" : "fail") + " (" +
           std::to_string(rep.violations.size()) + " violations)");
  return rep.pass() ? 0 : 1;
}

int cmd_simulate(const Scenario& sc, const Args& args, Clock::time_point t0) {
  const Topology topology = require_topology(sc);
  Json r = base_report("simulate", sc);
  OffsetPlan plan{topology, 1, {}};
  if (sc.plan) {
    plan = *sc.plan;
    r["plan_source"] = "scenario";
  } else {
    try {
      plan = topology == Topology::Delta
                 ? construct_delta_general(require_delta(sc), sc.alpha).plan
                 : construct_y_general(require_y(sc), sc.alpha).plan;
      r["plan_source"] = "constructed";
    } catch (const InfeasibleError& e) {
      r["constructed"] = false;
      r["error"] = e.what();
      emit(std::move(r), args, t0, std::string("simulate: infeasible (") + e.what() + ")");
      return 1;
    }
  }
  const MessageSet msgs = random_messages(sc.alpha, sc.t, sc.seed);
  const SimulateOptions opts{sc.sic};
  const SimulationOutcome out =
      topology == Topology::Delta
          ? run_delta(require_delta(sc).with_n(plan.n), plan, msgs, sc.t, opts)
          : run_y(require_y(sc).with_n(plan.n), plan, msgs, sc.t, opts);
  r["plan"] = plan_to_json(plan);
  r["check"] = report_to_json(run_checker(sc, plan));
  r["simulation"] = outcome_to_json(out, topology);
  emit(std::move(r), args, t0,
       std::string("simulate: ") + (out.success ? "success" : "FAILED"));
  return out.success ? 0 : 1;
}

int cmd_oracle(const Scenario& sc, const Args& args, Clock::time_point t0) {
  const Topology topology = require_topology(sc);
  const int n_max = args.n_max > 0 ? args.n_max : require_n(sc);
  const MinimalNResult res =
      topology == Topology::Delta
          ? minimal_n(require_delta(sc), sc.alpha, n_max, args.budget)
          : minimal_n(require_y(sc), sc.alpha, n_max, args.budget);
  Json r = base_report("oracle", sc);
  r["n_max"] = n_max;
  r["budget"] = args.budget;
  r["conclusive"] = res.conclusive;
  r["nodes_explored"] = res.nodes_explored;
  if (res.n) {
    r["minimal_n"] = *res.n;
    const SearchResult witness =
        topology == Topology::Delta
            ? feasible_plan_search(require_delta(sc), sc.alpha, *res.n, args.budget)
            : feasible_plan_search(require_y(sc), sc.alpha, *res.n, args.budget);
    r["witness"] = plan_to_json(*witness.witness);
  } else {
    r["minimal_n"] = nullptr;
  }
  if (!res.conclusive) {
    emit(std::move(r), args, t0, "oracle: inconclusive (budget exhausted)");
    return 2;
  }
  emit(std::move(r), args, t0,
       res.n ? "oracle: minimal_n=" + std::to_string(*res.n)
             : "oracle: infeasible up to n_max=" + std::to_string(n_max));
  return res.n ? 0 : 1;
}

int cmd_sweep(const Scenario& sc, const Args& args, Clock::time_point t0) {
  const Topology topology = require_topology(sc);
  SweepOptions opts;
  opts.workers = args.workers;
  opts.exhaustive_sim = args.sim;
  opts.collect_rows = !args.csv_path.empty();
  const SweepSummary summary = channel_sweep(topology, require_n(sc), sc.alpha, opts);
  if (!args.csv_path.empty()) write_text_file(args.csv_path, sweep_to_csv(summary));
  Json r = base_report("sweep", sc);
  r["workers"] = args.workers;
  r["exhaustive_sim"] = args.sim;
  r["sweep"] = sweep_to_json(summary);
  const bool all_ok = summary.constructor_successes == summary.channels_total &&
                      summary.checker_failures == 0 && summary.sim_failures == 0;
  emit(std::move(r), args, t0,
       "sweep: " + std::to_string(summary.constructor_successes) + "/" +
           std::to_string(summary.channels_total) + " constructed, " +
           std::to_string(summary.checker_failures) + " checker failures, " +
           std::to_string(summary.sim_failures) + " sim failures");
  return all_ok ? 0 : 1;
}

int cmd_ydelta(const Scenario& sc, const Args& args, Clock::time_point t0) {
  const Topology topology = require_topology(sc);
  Json r = base_report("ydelta", sc);
  if (topology == Topology::Delta) {
    const auto dec = decompose(require_delta(sc));
    r["decomposable"] = bool(dec);
    if (dec) {
      r["a"] = dec->a;
      r["b"] = dec->b;
    }
    emit(std::move(r), args, t0,
         dec ? "ydelta: decomposable" : "ydelta: not decomposable");
    return dec ? 0 : 1;
  }
  const YChannel& y = require_y(sc);
  const DeltaChannel composed = compose(y);
  Json k = Json::array();
  for (int j = 1; j <= 3; ++j) {
    Json row = Json::array();
    for (int i = 1; i <= 3; ++i) row.push_back(composed.k(j, i));
    k.push_back(row);
  }
  r["composed_k"] = k;
  const auto dec = decompose(composed);
  r["decompose_roundtrip"] = bool(dec);
  OffsetPlan plan{Topology::Y, 1, {}};
  if (sc.plan) {
    plan = *sc.plan;
  } else {
    try {
      plan = construct_y_general(y, sc.alpha).plan;
    } catch (const InfeasibleError& e) {
      r["error"] = e.what();
      emit(std::move(r), args, t0, "ydelta: no plan available for transfer test");
      return 1;
    }
  }
  const MessageSet msgs = random_messages(sc.alpha, sc.t, sc.seed);
  const bool transfer = transfer_equivalence(y.with_n(plan.n), plan, msgs, sc.t);
  r["plan"] = plan_to_json(plan);
  r["transfer_equivalence"] = transfer;
  emit(std::move(r), args, t0,
       transfer ? "ydelta: transfer equivalence holds" : "ydelta: transfer MISMATCH");
  return transfer ? 0 : 1;
}

int cmd_mimo(const Scenario& sc, const Args& args, Clock::time_point t0) {
  MimoConfig cfg{};
  if (args.A1 > 0 || args.A2 > 0 || args.A3 > 0 || args.AR > 0) {
    if (args.A1 < 1 || args.A2 < 1 || args.A3 < 1 || args.AR < 1)
      throw ScenarioError("mimo", "all of --A1 --A2 --A3 --AR are required");
    cfg = MimoConfig{args.A1, args.A2, args.A3, args.AR};
  } else if (sc.mimo) {
    cfg = *sc.mimo;
  } else {
    throw ScenarioError("mimo", "missing (provide scenario field or --A flags)");
  }
  const long long bound = mimo_dof_bound(cfg);
  const MimoResult norm = mimo_normalized_dof(cfg);
  Json r = base_report("mimo", sc);
  r["config"] = Json{{"A", Json::array({cfg.A1, cfg.A2, cfg.A3})}, {"AR", cfg.AR}};
  r["bound"] = bound;
  r["case"] = norm.case_label == '-' ? "out-of-case" : std::string(1, norm.case_label);
  r["normalized_dof"] = dof_to_json(norm.dof);
  emit(std::move(r), args, t0,
       "mimo: bound=" + std::to_string(bound) + " case=" +
           (norm.case_label == '-' ? std::string("out-of-case")
                                   : std::string(1, norm.case_label)) +
           " normalized=" + to_string(norm.dof));
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args_in) {
  CLI::App app{"Cyclic interference / signal alignment toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Args args;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"bound", "Evaluate DoF upper bounds and the dimension requirement"},
      {"construct", "Build an alignment plan and check it"},
      {"check", "Check the plan given in the scenario"},
      {"simulate", "Construct (or take) a plan and run one seeded frame"},
      {"oracle", "Search minimal feasible n by brute force"},
      {"sweep", "Run the constructor over every channel at the scenario's n"},
      {"ydelta", "Compose/decompose relay channels; test transfer equivalence"},
      {"mimo", "Antenna-count DoF case arithmetic"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--scenario", args.scenario_path, "Scenario JSON file");
    sub->add_option("--out", args.out_path, "Write the JSON report here");
    if (name == "sweep") {
      sub->add_option("--csv", args.csv_path, "Write per-channel CSV rows here");
      sub->add_option("--workers", args.workers, "Worker threads")
          ->check(CLI::Range(1, 256));
      sub->add_flag("--sim", args.sim, "Exhaustive t=1 simulation per channel");
    }
    if (name == "oracle") {
      sub->add_option("--n-max", args.n_max, "Highest n to try")
          ->check(CLI::Range(1, 64));
      sub->add_option("--budget", args.budget, "Search node budget");
    }
    if (name == "mimo") {
      sub->add_option("--A1", args.A1, "Antennas at user 1");
      sub->add_option("--A2", args.A2, "Antennas at user 2");
      sub->add_option("--A3", args.A3, "Antennas at user 3");
      sub->add_option("--AR", args.AR, "Antennas at the relay");
    }
  }

  try {
    std::vector<std::string> reversed(args_in.rbegin(), args_in.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto t0 = Clock::now();
  try {
    CLI::App* sub = app.get_subcommands().at(0);
    const std::string name = sub->get_name();
    Scenario sc;
    if (!args.scenario_path.empty()) {
      sc = load_scenario(args.scenario_path);
    } else if (name != "mimo") {
      std::cerr << "align " << name << ": --scenario is required\n";
      return 2;
    }
    if (name == "bound") return cmd_bound(sc, args, t0);
    if (name == "construct") return cmd_construct(sc, args, t0);
    if (name == "check") return cmd_check(sc, args, t0);
    if (name == "simulate") return cmd_simulate(sc, args, t0);
    if (name == "oracle") return cmd_oracle(sc, args, t0);
    if (name == "sweep") return cmd_sweep(sc, args, t0);
    if (name == "ydelta") return cmd_ydelta(sc, args, t0);
    if (name == "mimo") return cmd_mimo(sc, args, t0);
    return 2;
  } catch (const ScenarioError& e) {
    std::cerr << "align: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "align: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "align: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "align: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "align: unexpected: " << e.what() << "\n";
    return 2;
  }
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args);
}

}  // namespace cia
