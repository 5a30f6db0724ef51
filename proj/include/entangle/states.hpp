// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file states.hpp
 * @brief Pure states on tensor-factored spaces and their reduced states.
 *
 * Amplitudes are indexed row-major by multi-index (i_0, ..., i_{k-1}) with
 * factor 0 varying slowest: flat = ((i_0 d_1 + i_1) d_2 + i_2) ...
 */

#pragma once

#include "entangle/random.hpp"
#include "entangle/types.hpp"

#include <span>
#include <vector>

namespace entangle {

inline constexpr double kNormTolerance = 1e-12;

class PureState {
 public:
  /// Requires |amplitudes| = 1 to kNormTolerance.
  PureState(std::vector<int> dims, CVector amplitudes);

  /// Flow iterates and other intermediate vectors; no norm requirement.
  [[nodiscard]] static PureState unnormalized(std::vector<int> dims, CVector amplitudes);

  [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
  [[nodiscard]] const CVector& amplitudes() const { return amplitudes_; }
  [[nodiscard]] Eigen::Index dim() const { return amplitudes_.size(); }
  [[nodiscard]] int num_factors() const { return static_cast<int>(dims_.size()); }
  [[nodiscard]] bool is_unnormalized() const { return unnormalized_; }
  [[nodiscard]] double norm() const { return amplitudes_.norm(); }

  /// Same direction with unit norm.
  [[nodiscard]] PureState normalized() const;

  [[nodiscard]] cplx operator[](Eigen::Index flat) const { return amplitudes_[flat]; }
  [[nodiscard]] cplx at(std::span<const int> multi_index) const;

 private:
  PureState(std::vector<int> dims, CVector amplitudes, bool unnormalized);

  std::vector<int> dims_;
  CVector amplitudes_;
  bool unnormalized_ = false;
};

[[nodiscard]] Eigen::Index flat_index(std::span<const int> dims, std::span<const int> multi_index);

/// Computational basis state |i_0 i_1 ...>.
[[nodiscard]] PureState basis_state(std::vector<int> dims, std::span<const int> multi_index);
[[nodiscard]] PureState product_state(std::span<const CVector> factors);
/// (|00> + |11>)/sqrt(2).
[[nodiscard]] PureState bell_state();
/// (|01> - |10>)/sqrt(2).
[[nodiscard]] PureState singlet_state();
/// sum_i |ii> / sqrt(d).
[[nodiscard]] PureState maximally_entangled_state(int d);
[[nodiscard]] PureState ghz_state(int qubits);
[[nodiscard]] PureState w_state(int qubits);
[[nodiscard]] PureState random_state(std::vector<int> dims, Rng& rng);

/// (g_0 x g_1 x ...) psi; the result is unnormalized in general.
[[nodiscard]] PureState apply_local(const PureState& state, std::span<const CMatrix> ops);
[[nodiscard]] PureState apply(const CMatrix& op, const PureState& state);

struct DensityMatrix {
  CMatrix matrix;
  [[nodiscard]] Eigen::Index dim() const { return matrix.rows(); }
  /// Eigenvalues in ascending order.
  [[nodiscard]] RVector spectrum() const;
};

[[nodiscard]] DensityMatrix density_matrix(const PureState& state);

/// Partial trace over every factor except `factor_index`.
[[nodiscard]] DensityMatrix marginal(const PureState& state, int factor_index);

struct SchmidtData {
  RVector coefficients;  ///< nonincreasing, sum of squares one
  std::vector<CVector> left_basis;
  std::vector<CVector> right_basis;
};

/// Amplitude matrix [psi_ij] of a bipartite state.
[[nodiscard]] CMatrix amplitude_matrix(const PureState& state);

[[nodiscard]] SchmidtData schmidt(const PureState& state);

/// -sum lambda log2 lambda over the given spectrum, clamping [-1e-10, 0) to 0.
[[nodiscard]] double entropy_bits(const RVector& spectrum);

/// Entanglement entropy of a bipartite pure state, in ebits.
[[nodiscard]] double entropy(const PureState& state);

}  // namespace entangle
