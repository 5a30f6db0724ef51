// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace entangle;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("ENTANGLE_DATA_DIR");
  return std::string(dir ? dir : "data/states") + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("entangle_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

json report(const Run& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("classify GHZ") {
  const Run r = cli({"classify", "--system", "local:2x2x2", "--state", data("ghz.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("stability: stable") != std::string::npos);
  CHECK(r.out.find("concurrence: 1.000000") != std::string::npos);
  CHECK(r.out.find("seed: 20080215") != std::string::npos);
}

TEST_CASE("pentagram on the axis state") {
  const Run r = cli({"pentagram", "--state", data("axis.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("bell_value: 2.236068") != std::string::npos);
  CHECK(r.out.find("violated: true") != std::string::npos);
  const json j = report(cli({"pentagram", "--state", data("axis.json"), "--json"}));
  CHECK(j["results"]["bell_value"].get<double>() == doctest::Approx(std::sqrt(5.0)));
  CHECK(j["results"]["pentagram"].size() == 5);
}

TEST_CASE("JSON report layout") {
  const json j = report(cli({"classify", "--system", "local:2x2x2", "--state", data("w.json"), "--json"}));
  CHECK(j["tool"] == "entangle");
  CHECK(j["command"] == "classify");
  CHECK(j["system"]["spec"] == "local:2x2x2");
  CHECK(j["state"]["dims"] == json::array({2, 2, 2}));
  CHECK(j["seed"] == 20080215);
  CHECK(j["results"]["stability"] == "unstable");
  CHECK(j["params"]["flow"]["grad_tol"].get<double>() == 1e-9);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"classify", "--system", "spin:3", "--state", "random",
                                      "--seed", "99", "--json"};
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const Run c = cli({"classify", "--system", "spin:3", "--state", "random", "--seed", "100", "--json"});
  CHECK(c.out != a.out);
}

TEST_CASE("every subcommand runs on sample data") {
  CHECK(cli({"variance", "--system", "spin:2", "--state", data("axis.json")}).code == kExitOk);
  CHECK(cli({"schmidt", "--state", data("bell.json")}).code == kExitOk);
  CHECK(cli({"concurrence", "--system", "local:2x2", "--state", data("bell.json")}).code == kExitOk);
  CHECK(cli({"invariants", "--state", data("ghz.json")}).code == kExitOk);
  CHECK(cli({"majorana", "--system", "spin:2", "--state", data("axis.json")}).code == kExitOk);
  CHECK(cli({"chsh", "--state", data("singlet.json")}).code == kExitOk);
  const json chsh = report(cli({"chsh", "--state", data("singlet.json"), "--json"}));
  CHECK(chsh["results"]["value"].get<double>() == doctest::Approx(2.0 - 2.0 * std::sqrt(2.0)));
  CHECK(chsh["results"]["violated"] == true);
  const json maj = report(cli({"majorana", "--state", data("axis.json"), "--json"}));
  CHECK(maj["results"]["infinity_multiplicity"] == 1);
  CHECK(maj["results"]["balance_residual"].get<double>() == 0.0);
}

TEST_CASE("params file mirrors the flags") {
  const std::string params = write_temp(
      "params.json", R"({"system": "local:2x2x2", "state": ")" + data("ghz.json") +
                         R"(", "json": true, "flow": {"grad_tol": 1e-7}})");
  const Run r = cli({"classify", "--params", params});
  REQUIRE(r.code == kExitOk);
  const json j = report(r);
  CHECK(j["params"]["flow"]["grad_tol"].get<double>() == 1e-7);
  CHECK(j["params"]["file"]["flow"]["grad_tol"].get<double>() == 1e-7);
  CHECK(j["results"]["stability"] == "stable");

  const std::string pent = write_temp("pent.json", R"({"pentagram": {"params": [0, 0, 0, 0, 0.7]}})");
  const json d = report(cli({"pentagram", "--state", data("axis.json"), "--params", pent, "--json"}));
  CHECK(d["results"]["spectrum"][0].get<double>() == doctest::Approx(2.0));
  CHECK(d["results"]["violated"] == false);

  const std::string angles = write_temp("chsh.json", R"({"chsh": {"a1": 0, "a2": 0, "b1": 0, "b2": 0}})");
  const json c = report(cli({"chsh", "--state", data("singlet.json"), "--params", angles, "--json"}));
  CHECK(c["results"]["value"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("violation search through the CLI") {
  const std::string state = write_temp(
      "eighth.json", R"({"dims": [3], "basis": "cartesian",
        "amplitudes": [[0.9238795325112867, 0], [0, 0.3826834323650898], [0, 0]]})");
  const std::string params = write_temp("search.json", R"({"search": true})");
  const Run r = cli({"pentagram", "--state", state, "--params", params, "--json"});
  CHECK(r.code == kExitOk);
  const json j = report(r);
  CHECK(j["results"]["search"]["found"] == true);
  CHECK(j["results"]["search"]["best_value"].get<double>() > 2.0);

  // Near-coherent: the regular pentagram alone does not violate.
  const std::string hard = write_temp(
      "hard.json", R"({"dims": [3], "basis": "cartesian",
        "amplitudes": [[0.7248360107409052, 0], [0, 0.6889214451105513], [0, 0]]})");
  const std::string tiny = write_temp("tiny.json", R"({"search": {"max_evaluations": 2}})");
  CHECK(cli({"pentagram", "--state", hard, "--params", tiny}).code == kExitInconclusive);
}

TEST_CASE("exit codes and messages") {
  const Run unknown = cli({"frobnicate"});
  CHECK(unknown.code == kExitValidation);
  CHECK(unknown.err.find("unknown subcommand 'frobnicate'") != std::string::npos);

  const Run mismatch = cli({"classify", "--system", "local:2x2", "--state", data("ghz.json")});
  CHECK(mismatch.code == kExitValidation);
  CHECK(mismatch.err.find("dimension mismatch") != std::string::npos);

  const std::string bad = write_temp("bad.json", "{\"dims\": [2,");
  const Run malformed = cli({"schmidt", "--state", bad});
  CHECK(malformed.code == kExitValidation);
  CHECK(malformed.err.find("malformed JSON") != std::string::npos);

  CHECK(cli({"classify", "--state", data("ghz.json")}).code == kExitValidation);
  CHECK(cli({"classify", "--system", "local:2x2x2"}).code == kExitValidation);
  CHECK(cli({"invariants", "--state", data("axis.json")}).code == kExitValidation);
  CHECK(cli({"chsh", "--state", data("ghz.json")}).code == kExitValidation);
  CHECK(cli({"classify", "--system", "local:2x2x2", "--state", data("ghz.json"), "--seed", "abc"})
            .code == kExitValidation);
  const std::string unknown_key = write_temp("unknown_key.json", R"({"flwo": {}})");
  CHECK(cli({"schmidt", "--state", data("bell.json"), "--params", unknown_key}).code ==
        kExitValidation);

  const std::string budget = write_temp("budget.json", R"({"flow": {"max_iters": 1}})");
  const Run cut = cli({"classify", "--system", "local:2x2x2", "--state", "random", "--params", budget});
  CHECK(cut.code == kExitInconclusive);
  CHECK(cut.out.find("semistable_boundary") != std::string::npos);

  CHECK(cli({"--help"}).code == kExitOk);
}
