// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief JSON schema for state files, flow parameters and operator bases.
 *
 * State file:
 *
 *     {
 *       "dims": [2, 2],
 *       "amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]],
 *       "label": "bell",            // optional
 *       "unnormalized": false,      // optional
 *       "basis": "standard"         // optional; "cartesian" for dims [3]
 *     }
 *
 * Amplitudes are [re, im] pairs, row-major over the multi-index with factor 0
 * slowest. Unless "unnormalized" is true the norm must be within 1e-6 of one;
 * states off by more than 1e-12 are rescaled on load. The "cartesian" basis
 * reads a spin-1 state as a vector of E^3 (x) C and converts it to the
 * |+1>, |0>, |-1> basis.
 */

#pragma once

#include "entangle/orbit.hpp"
#include "entangle/repn.hpp"
#include "entangle/states.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace entangle {

using json = nlohmann::json;

inline constexpr double kStateFileNormTolerance = 1e-6;

struct StateFile {
  explicit StateFile(PureState s) : state(std::move(s)) {}

  PureState state;
  std::string label;
  bool unnormalized = false;
};

[[nodiscard]] StateFile parse_state_json(const json& j);
[[nodiscard]] StateFile read_state_file(const std::string& path);

[[nodiscard]] json state_to_json(const PureState& state, const std::string& label = "");
void write_state_file(const std::string& path, const PureState& state, const std::string& label = "");

/// Recognized keys: step, max_iters, grad_tol, null_tol, backtracking.
[[nodiscard]] FlowParams parse_flow_params(const json& j, FlowParams base = {});
[[nodiscard]] json flow_params_to_json(const FlowParams& p);

[[nodiscard]] json basis_to_json(const OperatorBasis& basis);

[[nodiscard]] json complex_to_json(cplx z);
[[nodiscard]] json vector_to_json(const RVector& v);
[[nodiscard]] json vec3_to_json(const Vec3& v);

}  // namespace entangle
