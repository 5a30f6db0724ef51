// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file repn.hpp
 * @brief Dynamical systems as orthonormal bases of Hermitian observables.
 *
 * A dynamical system is a Lie algebra of observables acting on a Hilbert
 * space of dimension `dim`. It is represented by an ordered list of
 * Hermitian generators X_i, orthonormal under the invariant form
 *
 *     B(X, Y) = 2 Tr_defining(X Y)
 *
 * taken per simple factor. In the defining representation of su(d) this is
 * twice the trace, so the generators there are the generalized Gell-Mann
 * matrices divided by two. In any other representation the form is the
 * pulled-back trace, rescaled by a per-generator constant stored in
 * `form_scale` so that B(X_i, X_j) = sqrt(scale_i scale_j) Tr(X_i X_j).
 *
 * Supported families:
 *   - spin-s irreps of su(2) (J_x, J_y, J_z),
 *   - local algebras su(d_1) + ... + su(d_k) on C^{d_1} x ... x C^{d_k},
 *   - induced actions on symmetric and antisymmetric powers.
 */

#pragma once

#include "entangle/types.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace entangle {

/// Twice the spin. The Hilbert space has dimension two_s + 1.
struct SpinLabel {
  int two_s = 0;

  explicit SpinLabel(int twice_spin);

  [[nodiscard]] double spin() const { return 0.5 * two_s; }
  [[nodiscard]] int dim() const { return two_s + 1; }
};

enum class PowerKind { symmetric, antisymmetric };

struct OperatorBasis {
  int dim = 1;
  std::vector<CMatrix> generators;
  /// B(X_i, X_j) = sqrt(form_scale[i] form_scale[j]) Tr(X_i X_j); zero for
  /// generators of the trivial representation.
  std::vector<double> form_scale;
  /// Which simple factor each generator belongs to; B vanishes across factors.
  std::vector<int> factor_of;
  /// Tensor factorization of the carrier space ({dim} when unfactored).
  std::vector<int> factor_dims;
  std::string label;
  /// Set for spin-s irreducible systems.
  std::optional<int> two_s;

  [[nodiscard]] std::size_t size() const { return generators.size(); }
};

[[nodiscard]] OperatorBasis spin_generators(SpinLabel label);

/// su(d_1) + ... + su(d_k) acting locally on the tensor product.
[[nodiscard]] OperatorBasis local_algebra(std::span<const int> dims,
                                          std::size_t dimension_cap = kDefaultDimensionCap);

/// Derivation action of `base` on Sym^n or Wedge^n of its carrier space,
/// in the occupation-number basis ordered lexicographically by sorted
/// multi-index (i_1 <= ... <= i_n, resp. i_1 < ... < i_n).
[[nodiscard]] OperatorBasis power_algebra(const OperatorBasis& base, int n, PowerKind kind,
                                          std::size_t dimension_cap = kDefaultDimensionCap);

/// C = sum_i X_i^2.
[[nodiscard]] CMatrix casimir(const OperatorBasis& basis);

[[nodiscard]] double invariant_form(const OperatorBasis& basis, std::size_t i, std::size_t j);

/// Generalized Gell-Mann matrices of su(d) halved: symmetric, antisymmetric,
/// then diagonal. Tr(X_a X_b) = delta_ab / 2.
[[nodiscard]] std::vector<CMatrix> su_generators(int d);

/// 1 x ... x op x ... x 1 with `op` on tensor leg `factor`.
[[nodiscard]] CMatrix embed_local(const CMatrix& op, std::span<const int> dims, int factor);

/// Orthonormal basis of Sym^n or Wedge^n of C^d as columns of a d^n x D
/// isometry, in the same ordering as power_algebra.
[[nodiscard]] CMatrix power_subspace_isometry(int d, int n, PowerKind kind);

/// Sorted multi-indices labelling the power-subspace basis.
[[nodiscard]] std::vector<std::vector<int>> power_multi_indices(int d, int n, PowerKind kind);

[[nodiscard]] long long binomial(int n, int k);

/// Residuals of the OperatorBasis invariants.
struct BasisDiagnostics {
  double hermiticity = 0.0;     ///< max |X - X^dagger| entry
  double orthonormality = 0.0;  ///< max |B(X_i, X_j) - delta_ij|
  double closure = 0.0;         ///< max Frobenius residual of i[X_a, X_b] outside the span
};

[[nodiscard]] BasisDiagnostics diagnose(const OperatorBasis& basis);

}  // namespace entangle
