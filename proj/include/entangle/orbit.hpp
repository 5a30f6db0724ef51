// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file orbit.hpp
 * @brief Norm minimization over the complexified dynamical group.
 *
 * The complexified group G^c contains exp(tX) for Hermitian X in the algebra.
 * Along such a direction
 *
 *     d/dt |e^{tX} psi|^2 at t = 0  =  2 <psi^|X|psi^> |psi|^2,
 *
 * so the expectation vector is the gradient of the squared norm and its
 * zeros (the completely entangled states) are the critical points. The flow
 * repeatedly applies psi <- exp(-eta sum_i <X_i> X_i) psi with backtracking
 * on eta. The limit norm squared is the generalized concurrence mu(psi).
 */

#pragma once

#include "entangle/repn.hpp"
#include "entangle/states.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace entangle {

struct FlowParams {
  double step = 0.5;          ///< initial step size eta
  int max_iters = 10000;
  double grad_tol = 1e-9;     ///< stop when |<X>| falls below this
  double null_tol = 1e-6;     ///< squared norm below this means unstable
  double backtracking = 0.5;  ///< step shrink factor on a failed trial

  /// Throws ValidationError when a field is out of range.
  void validate() const;
};

enum class Stability { coherent, unstable, semistable_boundary, stable };

[[nodiscard]] std::string_view to_string(Stability s);

struct OrbitResult {
  explicit OrbitResult(PureState start) : minimal_vector(std::move(start)) {}

  PureState minimal_vector;
  double concurrence = 0.0;
  Stability stability = Stability::semistable_boundary;
  int iterations = 0;
  double final_gradient_norm = 0.0;
  std::vector<double> norm_history;  ///< squared norms, nonincreasing
  bool converged = false;            ///< gradient fell below grad_tol
  double coherence_residual = 0.0;   ///< populated by analyze_orbit
};

/// Pure flow: stability is unstable, stable or semistable_boundary.
[[nodiscard]] OrbitResult kempf_ness_flow(const PureState& state, const OperatorBasis& basis,
                                          const FlowParams& params = {});

/// Coherence test first, then the flow.
[[nodiscard]] OrbitResult analyze_orbit(const PureState& state, const OperatorBasis& basis,
                                        const FlowParams& params = {});

/// |minimal vector|^2, or 0 for unstable states.
[[nodiscard]] double concurrence(const PureState& state, const OperatorBasis& basis,
                                 const FlowParams& params = {});

[[nodiscard]] Stability classify(const PureState& state, const OperatorBasis& basis,
                                 const FlowParams& params = {});

/// Analytic directional derivative of |e^{tX} psi|^2 at t = 0 for Hermitian X.
[[nodiscard]] double norm_derivative(const PureState& state, const CMatrix& direction);

/// Hermitian exponential exp(t X) via eigendecomposition.
[[nodiscard]] CMatrix hermitian_exp(const CMatrix& x, double t);

}  // namespace entangle
