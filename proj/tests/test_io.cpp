// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/error.hpp"
#include "entangle/io.hpp"
#include "entangle/majorana.hpp"
#include "entangle/system.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace entangle;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("entangle_test_" + name)).string();
}

}  // namespace

TEST_CASE("state files round-trip bit-exactly") {
  Rng rng(71);
  const std::vector<std::vector<int>> shapes{{2, 2}, {3}, {2, 3, 2}, {7}};
  for (const auto& dims : shapes) {
    for (int trial = 0; trial < 5; ++trial) {
      const PureState s = random_state(dims, rng);
      const std::string path = temp_path("roundtrip.json");
      write_state_file(path, s, "sample");
      const StateFile f = read_state_file(path);
      std::remove(path.c_str());
      CHECK(f.label == "sample");
      CHECK(f.state.dims() == dims);
      for (Eigen::Index k = 0; k < s.dim(); ++k) {
        CHECK(f.state[k].real() == s[k].real());
        CHECK(f.state[k].imag() == s[k].imag());
      }
    }
  }
}

TEST_CASE("state file validation") {
  CHECK_THROWS_AS((void)parse_state_json(json::parse(R"({"dims": [2]})")), ValidationError);
  CHECK_THROWS_AS((void)parse_state_json(json::parse(R"({"dims": [2], "amplitudes": [[1, 0]]})")),
                  ValidationError);
  CHECK_THROWS_AS(
      (void)parse_state_json(json::parse(R"({"dims": [2], "amplitudes": [[1, 0], [1, 0]]})")),
      ValidationError);
  CHECK_THROWS_AS(
      (void)parse_state_json(json::parse(R"({"dims": [0], "amplitudes": []})")), ValidationError);
  CHECK_THROWS_AS(
      (void)parse_state_json(json::parse(R"({"dims": [2], "amplitudes": [1, 0]})")), ValidationError);
  const StateFile loose = parse_state_json(
      json::parse(R"({"dims": [2], "amplitudes": [[1, 0], [1, 0]], "unnormalized": true})"));
  CHECK(loose.unnormalized);
  CHECK(loose.state.norm() == doctest::Approx(std::sqrt(2.0)));
  const StateFile near = parse_state_json(
      json::parse(R"({"dims": [2], "amplitudes": [[1.0000004, 0], [0, 0]]})"));
  CHECK(near.state.norm() == doctest::Approx(1.0).epsilon(1e-15));

  const std::string path = temp_path("malformed.json");
  {
    std::ofstream out(path);
    out << "{\"dims\": [2], \"amplitudes\": ";
  }
  CHECK_THROWS_AS((void)read_state_file(path), ValidationError);
  std::remove(path.c_str());
  CHECK_THROWS_AS((void)read_state_file(temp_path("does_not_exist.json")), ValidationError);
}

TEST_CASE("cartesian basis in state files") {
  const StateFile f =
      parse_state_json(json::parse(R"({"dims": [3], "amplitudes": [[0, 0], [0, 0], [1, 0]],
                                        "basis": "cartesian"})"));
  CHECK(std::abs(f.state[1] - cplx(1.0, 0.0)) < 1e-15);
  const CVec3 back = to_cartesian(f.state);
  CHECK(std::abs(back[2] - cplx(1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS((void)parse_state_json(json::parse(
                      R"({"dims": [2], "amplitudes": [[1, 0], [0, 0]], "basis": "cartesian"})")),
                  ValidationError);
  CHECK_THROWS_AS((void)parse_state_json(json::parse(
                      R"({"dims": [2], "amplitudes": [[1, 0], [0, 0]], "basis": "polar"})")),
                  ValidationError);
}

TEST_CASE("flow parameters from JSON") {
  const FlowParams p = parse_flow_params(json::parse(R"({"grad_tol": 1e-6, "max_iters": 50})"));
  CHECK(p.grad_tol == 1e-6);
  CHECK(p.max_iters == 50);
  CHECK(p.step == FlowParams{}.step);
  CHECK_THROWS_AS((void)parse_flow_params(json::parse(R"({"step": -1})")), ValidationError);
  CHECK_THROWS_AS((void)parse_flow_params(json::parse(R"({"max_iters": 1.5})")), ValidationError);
  const json j = flow_params_to_json(p);
  CHECK(parse_flow_params(j).grad_tol == p.grad_tol);
}

TEST_CASE("system descriptors") {
  const SystemSpec spin = parse_system("spin:3");
  CHECK(spin.kind == SystemSpec::Kind::spin);
  CHECK(spin.state_dims() == std::vector<int>{4});
  const SystemSpec local = parse_system("local:2x3x2");
  CHECK(local.state_dims() == std::vector<int>{2, 3, 2});
  CHECK(build_system(local).size() == 3 + 8 + 3);
  const SystemSpec sym = parse_system("sym:3^2");
  CHECK(sym.state_dims() == std::vector<int>{6});
  CHECK(build_system(sym).dim == 6);
  const SystemSpec wedge = parse_system("wedge:4^2");
  CHECK(wedge.state_dims() == std::vector<int>{6});
  CHECK(build_system(wedge).label == "wedge:4^2");
  for (const char* bad : {"spin", "spin:x", "spin:-2", "local:2x", "local:1x2", "sym:2", "wedge:1^2",
                          "qubit:2", "local:2xx2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)build_system(parse_system(bad)), ValidationError);
  }
  CHECK_THROWS_AS((void)build_system(parse_system("local:64x64"), 1024), ValidationError);
}

TEST_CASE("basis serialization") {
  const json j = basis_to_json(spin_generators(SpinLabel(1)));
  CHECK(j["dim"] == 2);
  CHECK(j["generators"].size() == 3);
  CHECK(j["generators"][2][0][0][0].get<double>() == doctest::Approx(0.5));
}
