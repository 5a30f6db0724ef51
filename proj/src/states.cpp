// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/states.hpp"

#include "entangle/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace entangle {

namespace {

Eigen::Index product(std::span<const int> dims) {
  Eigen::Index p = 1;
  for (int d : dims) p *= d;
  return p;
}

void check_dims(const std::vector<int>& dims, Eigen::Index length) {
  if (dims.empty()) throw ValidationError("state: dims must be nonempty");
  for (int d : dims) {
    if (d < 1) throw ValidationError("state: every factor dimension must be positive");
  }
  if (product(dims) != length) {
    std::ostringstream msg;
    msg << "state: amplitude count " << length << " does not match product of dims "
        << product(dims);
    throw ValidationError(msg.str());
  }
}

}  // namespace

PureState::PureState(std::vector<int> dims, CVector amplitudes, bool unnormalized)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)), unnormalized_(unnormalized) {
  check_dims(dims_, amplitudes_.size());
  if (!amplitudes_.allFinite()) throw NumericalError("state: non-finite amplitudes");
}

PureState::PureState(std::vector<int> dims, CVector amplitudes)
    : PureState(std::move(dims), std::move(amplitudes), false) {
  const double n = amplitudes_.norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "state: expected unit norm, got " << n;
    throw ValidationError(msg.str());
  }
}

PureState PureState::unnormalized(std::vector<int> dims, CVector amplitudes) {
  return PureState(std::move(dims), std::move(amplitudes), true);
}

PureState PureState::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw ValidationError("state: cannot normalize the zero vector");
  return PureState(dims_, amplitudes_ / n);
}

cplx PureState::at(std::span<const int> multi_index) const {
  return amplitudes_[flat_index(dims_, multi_index)];
}

Eigen::Index flat_index(std::span<const int> dims, std::span<const int> multi_index) {
  if (dims.size() != multi_index.size())
    throw ValidationError("multi-index length does not match factor count");
  Eigen::Index flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (multi_index[k] < 0 || multi_index[k] >= dims[k])
      throw ValidationError("multi-index entry out of range");
    flat = flat * dims[k] + multi_index[k];
  }
  return flat;
}

PureState basis_state(std::vector<int> dims, std::span<const int> multi_index) {
  CVector v = CVector::Zero(product(dims));
  v[flat_index(dims, multi_index)] = 1.0;
  return PureState(std::move(dims), std::move(v));
}

PureState product_state(std::span<const CVector> factors) {
  if (factors.empty()) throw ValidationError("product_state: no factors");
  std::vector<int> dims;
  CVector v = CVector::Ones(1);
  for (const CVector& f : factors) {
    dims.push_back(static_cast<int>(f.size()));
    CVector next(v.size() * f.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) next.segment(i * f.size(), f.size()) = v[i] * f;
    v = std::move(next);
  }
  return PureState(std::move(dims), v / v.norm());
}

PureState bell_state() {
  CVector v = CVector::Zero(4);
  v[0] = v[3] = 1.0 / std::sqrt(2.0);
  return PureState({2, 2}, v);
}

PureState singlet_state() {
  CVector v = CVector::Zero(4);
  v[1] = 1.0 / std::sqrt(2.0);
  v[2] = -1.0 / std::sqrt(2.0);
  return PureState({2, 2}, v);
}

PureState maximally_entangled_state(int d) {
  if (d < 1) throw ValidationError("maximally_entangled_state: d must be positive");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) v[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState({d, d}, v);
}

PureState ghz_state(int qubits) {
  if (qubits < 1) throw ValidationError("ghz_state: need at least one qubit");
  const Eigen::Index n = Eigen::Index(1) << qubits;
  CVector v = CVector::Zero(n);
  v[0] = v[n - 1] = 1.0 / std::sqrt(2.0);
  return PureState(std::vector<int>(qubits, 2), v);
}

PureState w_state(int qubits) {
  if (qubits < 1) throw ValidationError("w_state: need at least one qubit");
  const Eigen::Index n = Eigen::Index(1) << qubits;
  CVector v = CVector::Zero(n);
  for (int k = 0; k < qubits; ++k) v[Eigen::Index(1) << k] = 1.0 / std::sqrt(double(qubits));
  return PureState(std::vector<int>(qubits, 2), v);
}

PureState random_state(std::vector<int> dims, Rng& rng) {
  const Eigen::Index n = product(dims);
  return PureState(std::move(dims), random_unit_vector(n, rng));
}

PureState apply_local(const PureState& state, std::span<const CMatrix> ops) {
  const auto& dims = state.dims();
  if (ops.size() != dims.size()) throw ValidationError("apply_local: one operator per factor");
  CVector v = state.amplitudes();
  Eigen::Index left = 1;
  const Eigen::Index total = v.size();
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const Eigen::Index d = dims[k];
    if (ops[k].rows() != d || ops[k].cols() != d)
      throw ValidationError("apply_local: operator does not match factor dimension");
    const Eigen::Index right = total / (left * d);
    CVector next = CVector::Zero(total);
    for (Eigen::Index l = 0; l < left; ++l)
      for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) {
          const cplx g = ops[k](a, b);
          if (g == cplx(0.0)) continue;
          next.segment((l * d + a) * right, right) += g * v.segment((l * d + b) * right, right);
        }
    v = std::move(next);
    left *= d;
  }
  return PureState::unnormalized(dims, std::move(v));
}

PureState apply(const CMatrix& op, const PureState& state) {
  if (op.cols() != state.dim() || op.rows() != state.dim())
    throw ValidationError("apply: operator dimension mismatch");
  return PureState::unnormalized(state.dims(), op * state.amplitudes());
}

RVector DensityMatrix::spectrum() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(matrix, Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

DensityMatrix density_matrix(const PureState& state) {
  const CVector& v = state.amplitudes();
  return {v * v.adjoint()};
}

DensityMatrix marginal(const PureState& state, int factor_index) {
  const auto& dims = state.dims();
  if (factor_index < 0 || factor_index >= state.num_factors())
    throw ValidationError("marginal: factor index out of range");
  Eigen::Index left = 1;
  for (int k = 0; k < factor_index; ++k) left *= dims[k];
  const Eigen::Index d = dims[factor_index];
  const Eigen::Index right = state.dim() / (left * d);
  // M(a, (l, r)) = psi(l, a, r); rho = M M^dagger.
  CMatrix m(d, left * right);
  const CVector& v = state.amplitudes();
  for (Eigen::Index l = 0; l < left; ++l)
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index r = 0; r < right; ++r) m(a, l * right + r) = v[(l * d + a) * right + r];
  return {m * m.adjoint()};
}

CMatrix amplitude_matrix(const PureState& state) {
  if (state.num_factors() != 2)
    throw ValidationError("bipartite operation requires exactly two factors");
  const int rows = state.dims()[0];
  const int cols = state.dims()[1];
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = state[static_cast<Eigen::Index>(i) * cols + j];
  return m;
}

SchmidtData schmidt(const PureState& state) {
  const CMatrix m = amplitude_matrix(state);
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtData out;
  out.coefficients = svd.singularValues();
  for (Eigen::Index k = 0; k < out.coefficients.size(); ++k) {
    out.left_basis.push_back(svd.matrixU().col(k));
    // psi = sum_k s_k u_k v_k^dagger as a matrix, so the right vectors are conj(v_k).
    out.right_basis.push_back(svd.matrixV().col(k).conjugate());
  }
  return out;
}

double entropy_bits(const RVector& spectrum) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    double p = spectrum[i];
    if (p < 0.0 && p >= -1e-10) p = 0.0;
    if (p < 0.0) throw NumericalError("entropy: spectrum has a negative eigenvalue below -1e-10");
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double entropy(const PureState& state) {
  const SchmidtData data = schmidt(state);
  return entropy_bits(data.coefficients.array().square().matrix());
}

}  // namespace entangle
