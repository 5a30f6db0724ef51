// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/orbit.hpp"

#include "entangle/error.hpp"
#include "entangle/fluct.hpp"

#include <algorithm>
#include <cmath>

namespace entangle {

void FlowParams::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("flow params: step must be positive");
  if (max_iters < 1) throw ValidationError("flow params: max_iters must be positive");
  if (!(grad_tol > 0.0)) throw ValidationError("flow params: grad_tol must be positive");
  if (!(null_tol > 0.0) || !(null_tol < 1.0))
    throw ValidationError("flow params: null_tol must lie in (0, 1)");
  if (!(backtracking > 0.0) || !(backtracking < 1.0))
    throw ValidationError("flow params: backtracking must lie in (0, 1)");
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::coherent:
      return "coherent";
    case Stability::unstable:
      return "unstable";
    case Stability::semistable_boundary:
      return "semistable_boundary";
    case Stability::stable:
      return "stable";
  }
  return "unknown";
}

CMatrix hermitian_exp(const CMatrix& x, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(x);
  const RVector w = (t * eig.eigenvalues().array()).exp().matrix();
  return eig.eigenvectors() * w.asDiagonal() * eig.eigenvectors().adjoint();
}

double norm_derivative(const PureState& state, const CMatrix& direction) {
  const CVector& v = state.amplitudes();
  const double n2 = v.squaredNorm();
  const CVector hat = v / std::sqrt(n2);
  return 2.0 * hat.dot(direction * hat).real() * n2;
}

namespace {

// Armijo constant for the sufficient-decrease test.
constexpr double kArmijo = 1e-4;
// Steps below this cannot change the iterate in double precision.
constexpr double kMinStep = 1e-14;
// Upper bound on step growth relative to the initial step.
constexpr double kMaxGrowth = 1024.0;

}  // namespace

OrbitResult kempf_ness_flow(const PureState& state, const OperatorBasis& basis,
                            const FlowParams& params) {
  params.validate();
  if (state.dim() != basis.dim)
    throw ValidationError("dimension mismatch: state has dimension " + std::to_string(state.dim()) +
                          ", system acts on dimension " + std::to_string(basis.dim));
  if (!(state.norm() > 0.0)) throw ValidationError("flow: zero state");

  CVector psi = state.amplitudes();
  double n2 = psi.squaredNorm();
  double eta = params.step;
  const double max_step = params.step * kMaxGrowth;

  OrbitResult result(PureState::unnormalized(state.dims(), psi));
  result.norm_history.push_back(n2);

  RVector grad(static_cast<Eigen::Index>(basis.size()));
  int iter = 0;
  bool stalled = false;
  for (;; ++iter) {
    const CVector hat = psi / std::sqrt(n2);
    for (std::size_t i = 0; i < basis.size(); ++i)
      grad[static_cast<Eigen::Index>(i)] = hat.dot(basis.generators[i] * hat).real();
    const double gnorm = grad.norm();
    result.final_gradient_norm = gnorm;
    if (!std::isfinite(gnorm)) throw NumericalError("flow: non-finite gradient");
    if (gnorm <= params.grad_tol) {
      result.converged = true;
      break;
    }
    if (n2 < params.null_tol || iter >= params.max_iters || stalled) break;

    CMatrix h = CMatrix::Zero(basis.dim, basis.dim);
    for (std::size_t i = 0; i < basis.size(); ++i)
      h.noalias() += grad[static_cast<Eigen::Index>(i)] * basis.generators[i];
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
    const CVector coords = eig.eigenvectors().adjoint() * psi;

    // The slope of |exp(-eta H) psi|^2 at eta = 0 is -2 |psi|^2 |grad|^2. The
    // change in squared norm is evaluated in the eigenbasis with expm1 so that
    // decreases far below the resolution of |psi|^2 are still measured.
    const double slope = 2.0 * n2 * gnorm * gnorm;
    const RVector weights = coords.cwiseAbs2();
    bool accepted = false;
    while (eta >= kMinStep) {
      double delta = 0.0;
      for (Eigen::Index k = 0; k < weights.size(); ++k)
        delta += weights[k] * std::expm1(-2.0 * eta * eig.eigenvalues()[k]);
      if (!std::isfinite(delta)) throw NumericalError("flow: non-finite amplitudes");
      if (delta < 0.0 && delta <= -kArmijo * eta * slope) {
        const RVector w = (-eta * eig.eigenvalues().array()).exp().matrix();
        CVector trial = eig.eigenvectors() * (w.asDiagonal() * coords);
        if (!trial.allFinite()) throw NumericalError("flow: non-finite amplitudes");
        const double t2 = trial.squaredNorm();
        psi = std::move(trial);
        // Large steps resynchronize with the recomputed norm; tiny ones keep
        // the precise increment. Both keep the history nonincreasing.
        n2 = (-delta > 1e-8 * n2) ? std::min(t2, n2 + delta) : n2 + delta;
        accepted = true;
        break;
      }
      eta *= params.backtracking;
    }
    if (!accepted) {
      stalled = true;
      continue;
    }
    result.norm_history.push_back(n2);
    eta = std::min(eta / params.backtracking, max_step);
  }

  result.iterations = iter;
  result.minimal_vector = PureState::unnormalized(state.dims(), psi);
  if (n2 < params.null_tol) {
    result.stability = Stability::unstable;
    result.concurrence = 0.0;
  } else if (result.converged) {
    result.stability = Stability::stable;
    result.concurrence = n2;
  } else {
    result.stability = Stability::semistable_boundary;
    result.concurrence = n2;
  }
  return result;
}

OrbitResult analyze_orbit(const PureState& state, const OperatorBasis& basis,
                          const FlowParams& params) {
  const double residual = coherence_residual(state, basis);
  const CoherenceVerdict verdict = coherence(state, basis);
  OrbitResult result = kempf_ness_flow(state, basis, params);
  result.coherence_residual = residual;
  if (verdict == CoherenceVerdict::coherent) {
    result.stability = Stability::coherent;
    result.concurrence = 0.0;
  }
  return result;
}

double concurrence(const PureState& state, const OperatorBasis& basis, const FlowParams& params) {
  const OrbitResult r = kempf_ness_flow(state, basis, params);
  return r.stability == Stability::unstable ? 0.0 : r.concurrence;
}

Stability classify(const PureState& state, const OperatorBasis& basis, const FlowParams& params) {
  return analyze_orbit(state, basis, params).stability;
}

}  // namespace entangle
