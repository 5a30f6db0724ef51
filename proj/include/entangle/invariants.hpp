// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file invariants.hpp
 * @brief Closed-form polynomial invariants and the concurrences they determine.
 *
 *   n x n bipartite:  mu = n |det[psi_ij]|^{2/n}
 *   three qubits:     tau = 4 |Det[psi]| (Cayley hyperdeterminant), mu = sqrt(tau)
 */

#pragma once

#include "entangle/states.hpp"

#include <string>

namespace entangle {

struct InvariantReport {
  std::string name;
  cplx value{0.0, 0.0};
  double modulus = 0.0;
  double derived_concurrence = 0.0;
  /// False when the format carries no invariant (unequal bipartite dims).
  bool applicable = true;
};

[[nodiscard]] InvariantReport det_concurrence(const PureState& state);

/// Degree-4 Cayley hyperdeterminant of a [2,2,2] state, term by term.
[[nodiscard]] InvariantReport cayley_hyperdet(const PureState& state);

/// 4 |Det[psi]|.
[[nodiscard]] double three_tangle(const PureState& state);

}  // namespace entangle
