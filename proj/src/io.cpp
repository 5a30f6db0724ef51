// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/io.hpp"

#include "entangle/error.hpp"
#include "entangle/majorana.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace entangle {

StateFile parse_state_json(const json& j) {
  if (!j.is_object()) throw ValidationError("state file: top level must be a JSON object");
  if (!j.contains("dims") || !j["dims"].is_array())
    throw ValidationError("state file: missing integer array \"dims\"");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw ValidationError("state file: missing array \"amplitudes\" of [re, im] pairs");

  std::vector<int> dims;
  for (const json& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1)
      throw ValidationError("state file: \"dims\" entries must be positive integers");
    dims.push_back(d.get<int>());
  }
  const json& amps = j["amplitudes"];
  CVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const json& a = amps[k];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
      throw ValidationError("state file: amplitude " + std::to_string(k) +
                            " must be a [re, im] pair of numbers");
    v[static_cast<Eigen::Index>(k)] = cplx(a[0].get<double>(), a[1].get<double>());
  }
  Eigen::Index expected = 1;
  for (int d : dims) expected *= d;
  if (expected != v.size())
    throw ValidationError("state file: " + std::to_string(v.size()) +
                          " amplitudes given but dims multiply to " + std::to_string(expected));

  StateFile out(PureState::unnormalized(dims, v));
  out.label = j.value("label", std::string());
  out.unnormalized = j.value("unnormalized", false);
  const std::string basis = j.value("basis", std::string("standard"));
  if (basis == "cartesian") {
    if (dims != std::vector<int>{3})
      throw ValidationError("state file: \"cartesian\" basis requires dims [3]");
    v = spin1_to_cartesian_matrix().adjoint() * v;
  } else if (basis != "standard") {
    throw ValidationError("state file: unknown basis \"" + basis + "\" (use standard or cartesian)");
  }

  const double n = v.norm();
  if (out.unnormalized) {
    out.state = PureState::unnormalized(dims, v);
    return out;
  }
  if (std::abs(n - 1.0) > kStateFileNormTolerance) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "state file: norm " << n << " differs from 1 by more than 1e-6 "
        << "(set \"unnormalized\": true to accept it)";
    throw ValidationError(msg.str());
  }
  if (std::abs(n - 1.0) > kNormTolerance) v /= n;
  out.state = PureState(dims, v);
  return out;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open state file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_state_json(j);
}

json state_to_json(const PureState& state, const std::string& label) {
  json j;
  j["dims"] = state.dims();
  json amps = json::array();
  for (Eigen::Index k = 0; k < state.dim(); ++k) amps.push_back({state[k].real(), state[k].imag()});
  j["amplitudes"] = std::move(amps);
  if (!label.empty()) j["label"] = label;
  if (state.is_unnormalized()) j["unnormalized"] = true;
  return j;
}

void write_state_file(const std::string& path, const PureState& state, const std::string& label) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write state file '" + path + "'");
  out << state_to_json(state, label).dump(2) << '\n';
}

FlowParams parse_flow_params(const json& j, FlowParams base) {
  if (!j.is_object()) throw ValidationError("params: top level must be a JSON object");
  auto number = [&j](const char* key, double& field) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw ValidationError(std::string("params: \"") + key + "\" must be a number");
    field = j[key].get<double>();
  };
  number("step", base.step);
  number("grad_tol", base.grad_tol);
  number("null_tol", base.null_tol);
  number("backtracking", base.backtracking);
  if (j.contains("max_iters")) {
    if (!j["max_iters"].is_number_integer())
      throw ValidationError("params: \"max_iters\" must be an integer");
    base.max_iters = j["max_iters"].get<int>();
  }
  base.validate();
  return base;
}

json flow_params_to_json(const FlowParams& p) {
  return {{"step", p.step},
          {"max_iters", p.max_iters},
          {"grad_tol", p.grad_tol},
          {"null_tol", p.null_tol},
          {"backtracking", p.backtracking}};
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const RVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json vec3_to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json basis_to_json(const OperatorBasis& basis) {
  json j;
  j["label"] = basis.label;
  j["dim"] = basis.dim;
  j["factor_dims"] = basis.factor_dims;
  j["form_scale"] = basis.form_scale;
  json gens = json::array();
  for (const CMatrix& x : basis.generators) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < x.cols(); ++c) row.push_back(complex_to_json(x(r, c)));
      rows.push_back(std::move(row));
    }
    gens.push_back(std::move(rows));
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace entangle
