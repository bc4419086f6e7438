#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "cia/cli.hpp"
#include "cia/json_io.hpp"

using namespace cia;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path dir;
  TempDir() {
    static int counter = 0;
    dir = fs::temp_directory_path() /
          ("align-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) { return (dir / name).string(); }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(bool(in));
  Json j;
  in >> j;
  return j;
}

const char* kZeroDelta = R"({
  "schema": 1, "topology": "delta", "n": 3,
  "channel": {"k": [[0,0,0],[0,0,0],[0,0,0]]}
})";

const char* kSkewDelta = R"({
  "schema": 1, "topology": "delta", "n": 3,
  "channel": {"k": [[0,1,0],[0,0,0],[0,0,0]]}
})";

const char* kZeroY = R"({
  "schema": 1, "topology": "y", "n": 3,
  "channel": {"a": [0,0,0], "b": [0,0,0]}
})";

}  // namespace

TEST_CASE("bound reports both limits and the requirement") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", R"({"schema": 1})");
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"bound", "--scenario", sc, "--out", out}) == 0);
  const Json r = read_json(out);
  CHECK(r["tool"] == "align");
  CHECK(r["command"] == "bound");
  CHECK(r["multiway_bound"]["num"] == 6);
  CHECK(r["multiway_bound"]["den"] == 3);
  CHECK(r["dimension_requirement"]["n"] == 3);
  CHECK(r["scenario"]["schema"] == 1);
}

TEST_CASE("construct succeeds on an alignable channel") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", kZeroDelta);
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"construct", "--scenario", sc, "--out", out}) == 0);
  const Json r = read_json(out);
  CHECK(r["constructed"] == true);
  CHECK(r["n"] == 3);
  CHECK(r["plan"]["1,2,1"] == 0);
  CHECK(r["plan"]["3,2,1"] == 2);
  CHECK(r["check"]["verdict"] == "pass");
  CHECK(r["achieved_dof"]["num"] == 6);
  CHECK(r["achieved_dof"]["den"] == 3);
}

TEST_CASE("construct reports infeasibility with exit 1") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", kSkewDelta);
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"construct", "--scenario", sc, "--out", out}) == 1);
  const Json r = read_json(out);
  CHECK(r["constructed"] == false);
}

TEST_CASE("check judges an explicit plan") {
  TempDir tmp;
  const std::string good = tmp.file("good.json", R"({
    "schema": 1, "topology": "delta", "n": 3,
    "channel": {"k": [[0,0,0],[0,0,0],[0,0,0]]},
    "plan": {"1,2,1": 0, "1,3,1": 1, "2,1,1": 0, "2,3,1": 2, "3,1,1": 1, "3,2,1": 2}
  })");
  CHECK(cli_main({"check", "--scenario", good}) == 0);

  const std::string bad = tmp.file("bad.json", R"({
    "schema": 1, "topology": "delta", "n": 3,
    "channel": {"k": [[0,0,0],[0,0,0],[0,0,0]]},
    "plan": {"1,2,1": 0, "1,3,1": 0, "2,1,1": 0, "2,3,1": 2, "3,1,1": 1, "3,2,1": 2}
  })");
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"check", "--scenario", bad, "--out", out}) == 1);
  const Json r = read_json(out);
  CHECK(r["check"]["verdict"] == "fail");
  CHECK(r["check"]["violations"].size() > 0);
}

TEST_CASE("simulate decodes a constructed plan and honors the sic switch") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", kZeroY);
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"simulate", "--scenario", sc, "--out", out}) == 0);
  const Json r = read_json(out);
  CHECK(r["plan_source"] == "constructed");
  CHECK(r["simulation"]["success"] == true);
  CHECK(r["simulation"]["relay_support"].size() == 3);

  const std::string nosic = tmp.file("nosic.json", R"({
    "schema": 1, "topology": "delta", "n": 3, "sic": false,
    "channel": {"k": [[0,0,0],[0,0,0],[0,0,0]]}
  })");
  CHECK(cli_main({"simulate", "--scenario", nosic}) == 1);
}

TEST_CASE("oracle reports the minimal dimension or its absence") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", kZeroDelta);
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"oracle", "--scenario", sc, "--n-max", "2", "--out", out}) == 1);
  const Json notfound = read_json(out);
  CHECK(notfound["minimal_n"].is_null());
  CHECK(notfound["conclusive"] == true);

  CHECK(cli_main({"oracle", "--scenario", sc, "--n-max", "4", "--out", out}) == 0);
  const Json found = read_json(out);
  CHECK(found["minimal_n"] == 3);
  CHECK(found["witness"]["1,2,1"] == 0);

  CHECK(cli_main({"oracle", "--scenario", sc, "--n-max", "3", "--budget", "2",
                  "--out", out}) == 2);
  CHECK(read_json(out)["conclusive"] == false);
}

TEST_CASE("sweep summarizes a whole dimension and writes csv") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", R"({"schema": 1, "topology": "y", "n": 3})");
  const std::string out = tmp.path("report.json");
  const std::string csv = tmp.path("rows.csv");
  CHECK(cli_main({"sweep", "--scenario", sc, "--out", out, "--csv", csv,
                  "--workers", "2", "--sim"}) == 0);
  const Json r = read_json(out);
  CHECK(r["sweep"]["channels_total"] == 27);
  CHECK(r["sweep"]["constructor_successes"] == 27);
  CHECK(r["sweep"]["dof_histogram"]["6/3"] == 27);
  std::ifstream rows(csv);
  std::string line;
  int lines = 0;
  while (std::getline(rows, line)) ++lines;
  CHECK(lines == 28);

  const std::string dsc = tmp.file("dsc.json", R"({"schema": 1, "topology": "delta", "n": 2})");
  CHECK(cli_main({"sweep", "--scenario", dsc, "--out", out}) == 1);
  CHECK(read_json(out)["sweep"]["constructor_successes"] == 0);
}

TEST_CASE("ydelta composes, decomposes, and tests the transfer claim") {
  TempDir tmp;
  const std::string ysc = tmp.file("y.json", R"({
    "schema": 1, "topology": "y", "n": 3,
    "channel": {"a": [0,1,2], "b": [2,1,0]}
  })");
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"ydelta", "--scenario", ysc, "--out", out}) == 0);
  const Json r = read_json(out);
  CHECK(r["composed_k"][0][1] == 0);
  CHECK(r["decompose_roundtrip"] == true);
  CHECK(r["transfer_equivalence"] == true);

  const std::string prod = tmp.file("prod.json", R"({
    "schema": 1, "topology": "delta", "n": 3,
    "channel": {"k": [[0,1,2],[2,0,1],[1,2,0]]}
  })");
  CHECK(cli_main({"ydelta", "--scenario", prod, "--out", out}) == 0);
  CHECK(read_json(out)["decomposable"] == true);

  const std::string lone = tmp.file("lone.json", R"({
    "schema": 1, "topology": "delta", "n": 3,
    "channel": {"k": [[0,0,0],[0,0,0],[0,0,1]]}
  })");
  CHECK(cli_main({"ydelta", "--scenario", lone, "--out", out}) == 1);
  CHECK(read_json(out)["decomposable"] == false);
}

TEST_CASE("mimo accepts scenario fields or flags") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", R"({
    "schema": 1, "mimo": {"A": [2,2,2], "AR": 3}
  })");
  const std::string out = tmp.path("report.json");
  CHECK(cli_main({"mimo", "--scenario", sc, "--out", out}) == 0);
  const Json r = read_json(out);
  CHECK(r["case"] == "B");
  CHECK(r["normalized_dof"]["num"] == 6);
  CHECK(r["normalized_dof"]["den"] == 3);

  CHECK(cli_main({"mimo", "--A1", "3", "--A2", "1", "--A3", "1", "--AR", "2",
                  "--out", out}) == 0);
  CHECK(read_json(out)["case"] == "A");
}

TEST_CASE("reports are deterministic apart from wall time") {
  TempDir tmp;
  const std::string sc = tmp.file("sc.json", kZeroDelta);
  const std::string out1 = tmp.path("r1.json");
  const std::string out2 = tmp.path("r2.json");
  CHECK(cli_main({"construct", "--scenario", sc, "--out", out1}) == 0);
  CHECK(cli_main({"construct", "--scenario", sc, "--out", out2}) == 0);
  Json a = read_json(out1);
  Json b = read_json(out2);
  a.erase("wall_ms");
  b.erase("wall_ms");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("usage and schema trouble exit with 2") {
  TempDir tmp;
  CHECK(cli_main({}) == 2);
  CHECK(cli_main({"frobnicate"}) == 2);
  CHECK(cli_main({"construct"}) == 2);
  CHECK(cli_main({"construct", "--scenario", tmp.path("missing.json")}) == 2);
  const std::string bad = tmp.file("bad.json", R"({"schema": 3})");
  CHECK(cli_main({"construct", "--scenario", bad}) == 2);
  const std::string garbage = tmp.file("garbage.json", "not json");
  CHECK(cli_main({"construct", "--scenario", garbage}) == 2);
}
