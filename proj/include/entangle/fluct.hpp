// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fluct.hpp
 * @brief Quantum-fluctuation functionals of a state relative to a dynamical system.
 *
 * The total variance D(psi) = sum_i <X_i^2> - <X_i>^2 splits as
 * <C> - |<X>|^2 where C is the Casimir operator and <X> the vector of
 * expectations. Coherent states minimize D; completely entangled states
 * (all <X_i> = 0) maximize it.
 */

#pragma once

#include "entangle/repn.hpp"
#include "entangle/states.hpp"

#include <string_view>

namespace entangle {

struct VarianceReport {
  double total_variance = 0.0;
  RVector expectation_vector;   ///< <X_i> per generator
  double casimir_scalar = 0.0;  ///< <psi|C|psi>, the scalar C on irreducible systems
  double residual_entanglement = 0.0;  ///< |expectation_vector|
};

/// <psi|X_i|psi> for every generator; psi is normalized first.
[[nodiscard]] RVector expectation_vector(const PureState& state, const OperatorBasis& basis);

[[nodiscard]] VarianceReport total_variance(const PureState& state, const OperatorBasis& basis);

/// sqrt(sum_i <X_i>^2); zero exactly on completely entangled states.
[[nodiscard]] double entanglement_residual(const PureState& state, const OperatorBasis& basis);

/// | sum_i X_i psi (x) X_i psi - c psi (x) psi | with c = sum_i <X_i>^2.
[[nodiscard]] double coherence_residual(const PureState& state, const OperatorBasis& basis);

/// Exact spin-s test: sum_a <J_a>^2 = s^2 to 1e-8.
[[nodiscard]] bool spin_coherence_check(const PureState& state, int two_s);

enum class CoherenceVerdict { coherent, indeterminate, not_coherent };

inline constexpr double kCoherentBelow = 1e-8;
inline constexpr double kNotCoherentAbove = 1e-6;

[[nodiscard]] CoherenceVerdict coherence_verdict(double residual);
[[nodiscard]] std::string_view to_string(CoherenceVerdict v);

/// Spin-s systems use the exact test; every other system uses the residual.
[[nodiscard]] CoherenceVerdict coherence(const PureState& state, const OperatorBasis& basis);

}  // namespace entangle
