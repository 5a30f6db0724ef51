// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/invariants.hpp"

#include "entangle/error.hpp"

#include <cmath>

namespace entangle {

InvariantReport det_concurrence(const PureState& state) {
  if (state.num_factors() != 2)
    throw ValidationError("det_concurrence: state must have exactly two factors");
  InvariantReport r;
  r.name = "det";
  const int n = state.dims()[0];
  if (n != state.dims()[1]) {
    // No SL x SL invariants exist when the factor dimensions differ.
    r.applicable = false;
    return r;
  }
  r.value = amplitude_matrix(state).determinant();
  r.modulus = std::abs(r.value);
  r.derived_concurrence = n * std::pow(r.modulus, 2.0 / n);
  return r;
}

InvariantReport cayley_hyperdet(const PureState& state) {
  if (state.dims() != std::vector<int>{2, 2, 2})
    throw ValidationError("cayley_hyperdet: state must have dims [2,2,2]");
  const CVector& a = state.amplitudes();
  // a[4*i + 2*j + k] = psi_ijk
  const cplx p000 = a[0], p001 = a[1], p010 = a[2], p011 = a[3];
  const cplx p100 = a[4], p101 = a[5], p110 = a[6], p111 = a[7];

  const cplx squares = p000 * p000 * p111 * p111 + p001 * p001 * p110 * p110 +
                       p010 * p010 * p101 * p101 + p011 * p011 * p100 * p100;
  const cplx cross = p000 * p001 * p110 * p111 + p000 * p010 * p101 * p111 +
                     p000 * p011 * p100 * p111 + p001 * p010 * p101 * p110 +
                     p001 * p011 * p110 * p100 + p010 * p011 * p101 * p100;
  const cplx quartic = p000 * p011 * p101 * p110 + p001 * p010 * p100 * p111;

  InvariantReport r;
  r.name = "cayley_hyperdeterminant";
  r.value = squares - 2.0 * cross + 4.0 * quartic;
  r.modulus = std::abs(r.value);
  r.derived_concurrence = std::sqrt(4.0 * r.modulus);
  return r;
}

double three_tangle(const PureState& state) { return 4.0 * cayley_hyperdet(state).modulus; }

}  // namespace entangle
