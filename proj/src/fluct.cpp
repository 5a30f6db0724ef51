// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/fluct.hpp"

#include "entangle/error.hpp"

#include <cmath>

namespace entangle {

namespace {

void check_compatible(const PureState& state, const OperatorBasis& basis) {
  if (state.dim() != basis.dim)
    throw ValidationError("dimension mismatch: state has dimension " + std::to_string(state.dim()) +
                          ", system acts on dimension " + std::to_string(basis.dim));
}

inline double expectation(const CVector& psi, const CMatrix& x) {
  return psi.dot(x * psi).real();
}

}  // namespace

RVector expectation_vector(const PureState& state, const OperatorBasis& basis) {
  check_compatible(state, basis);
  const CVector psi = state.amplitudes() / state.norm();
  RVector e(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    e[static_cast<Eigen::Index>(i)] = expectation(psi, basis.generators[i]);
  return e;
}

VarianceReport total_variance(const PureState& state, const OperatorBasis& basis) {
  check_compatible(state, basis);
  const CVector psi = state.amplitudes() / state.norm();
  VarianceReport r;
  r.expectation_vector.resize(static_cast<Eigen::Index>(basis.size()));
  double second_moments = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const CVector xpsi = basis.generators[i] * psi;
    second_moments += xpsi.squaredNorm();
    r.expectation_vector[static_cast<Eigen::Index>(i)] = psi.dot(xpsi).real();
  }
  r.casimir_scalar = second_moments;
  r.residual_entanglement = r.expectation_vector.norm();
  r.total_variance = second_moments - r.expectation_vector.squaredNorm();
  return r;
}

double entanglement_residual(const PureState& state, const OperatorBasis& basis) {
  return expectation_vector(state, basis).norm();
}

double coherence_residual(const PureState& state, const OperatorBasis& basis) {
  check_compatible(state, basis);
  const CVector psi = state.amplitudes() / state.norm();
  const Eigen::Index n = psi.size();
  const auto g = static_cast<Eigen::Index>(basis.size());
  CMatrix images(n, g);
  double c = 0.0;
  for (Eigen::Index i = 0; i < g; ++i) {
    images.col(i) = basis.generators[static_cast<std::size_t>(i)] * psi;
    const double e = psi.dot(images.col(i)).real();
    c += e * e;
  }
  // Row a of the residual tensor: sum_i (X_i psi)_a X_i psi - c psi_a psi.
  double sq = 0.0;
  CVector row(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    row.noalias() = images * images.row(a).transpose();
    row -= c * psi[a] * psi;
    sq += row.squaredNorm();
  }
  return std::sqrt(sq);
}

bool spin_coherence_check(const PureState& state, int two_s) {
  const OperatorBasis basis = spin_generators(SpinLabel(two_s));
  const double s = 0.5 * two_s;
  const double sum = expectation_vector(state, basis).squaredNorm();
  return std::abs(sum - s * s) <= 1e-8;
}

CoherenceVerdict coherence_verdict(double residual) {
  if (residual < kCoherentBelow) return CoherenceVerdict::coherent;
  if (residual > kNotCoherentAbove) return CoherenceVerdict::not_coherent;
  return CoherenceVerdict::indeterminate;
}

std::string_view to_string(CoherenceVerdict v) {
  switch (v) {
    case CoherenceVerdict::coherent:
      return "coherent";
    case CoherenceVerdict::indeterminate:
      return "indeterminate";
    case CoherenceVerdict::not_coherent:
      return "not_coherent";
  }
  return "unknown";
}

CoherenceVerdict coherence(const PureState& state, const OperatorBasis& basis) {
  if (basis.two_s) {
    check_compatible(state, basis);
    return spin_coherence_check(state, *basis.two_s) ? CoherenceVerdict::coherent
                                                     : CoherenceVerdict::not_coherent;
  }
  return coherence_verdict(coherence_residual(state, basis));
}

}  // namespace entangle
