// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/fluct.hpp"
#include "entangle/orbit.hpp"

#include <doctest.h>

#include <cmath>

using namespace entangle;

namespace {

PureState spin_basis(int two_s, int row) {
  const std::vector<int> idx{row};
  return basis_state({two_s + 1}, idx);
}

// exp(i t X) for X a random element of the real span of the basis.
CMatrix random_group_element(const OperatorBasis& b, Rng& rng) {
  CMatrix x = CMatrix::Zero(b.dim, b.dim);
  for (const CMatrix& g : b.generators) x += random_uniform(-1.0, 1.0, rng) * g;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(x);
  const double t = random_uniform(-3.0, 3.0, rng);
  const CVector w = (kI * t * eig.eigenvalues().cast<cplx>().array()).exp().matrix();
  return eig.eigenvectors() * w.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

TEST_CASE("variance of spin-1 examples") {
  const OperatorBasis b = spin_generators(SpinLabel(2));
  CHECK(total_variance(spin_basis(2, 0), b).total_variance == doctest::Approx(1.0));
  CHECK(total_variance(spin_basis(2, 1), b).total_variance == doctest::Approx(2.0));
}

TEST_CASE("variance of the Bell state") {
  const OperatorBasis b = local_algebra(std::vector<int>{2, 2});
  const VarianceReport r = total_variance(bell_state(), b);
  CHECK(r.total_variance == doctest::Approx(1.5));
  CHECK(r.expectation_vector.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(r.residual_entanglement < 1e-14);
}

TEST_CASE("entanglement residual") {
  const OperatorBasis ghz_b = local_algebra(std::vector<int>{2, 2, 2});
  CHECK(entanglement_residual(ghz_state(3), ghz_b) < 1e-14);
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const OperatorBasis b = spin_generators(SpinLabel(two_s));
    CHECK(entanglement_residual(spin_basis(two_s, 0), b) == doctest::Approx(0.5 * two_s));
  }
  OperatorBasis empty;
  empty.dim = 2;
  empty.factor_dims = {2};
  CHECK(entanglement_residual(spin_basis(1, 0), empty) == 0.0);
}

TEST_CASE("coherence residual and verdicts") {
  for (int two_s = 1; two_s <= 5; ++two_s) {
    const OperatorBasis b = spin_generators(SpinLabel(two_s));
    CHECK(coherence_residual(spin_basis(two_s, 0), b) < 1e-12);
    CHECK(spin_coherence_check(spin_basis(two_s, 0), two_s));
  }
  const OperatorBasis s1 = spin_generators(SpinLabel(2));
  CHECK(coherence_residual(spin_basis(2, 1), s1) > 1e-3);
  CHECK_FALSE(spin_coherence_check(spin_basis(2, 1), 2));
  CHECK(coherence(spin_basis(2, 1), s1) == CoherenceVerdict::not_coherent);

  const OperatorBasis qq = local_algebra(std::vector<int>{2, 2});
  const PureState zz = basis_state({2, 2}, std::vector<int>{0, 0});
  CHECK(coherence_residual(zz, qq) < 1e-12);
  CHECK(coherence(zz, qq) == CoherenceVerdict::coherent);
  CHECK(coherence(bell_state(), qq) == CoherenceVerdict::not_coherent);

  CHECK(coherence_verdict(1e-9) == CoherenceVerdict::coherent);
  CHECK(coherence_verdict(1e-7) == CoherenceVerdict::indeterminate);
  CHECK(coherence_verdict(1e-5) == CoherenceVerdict::not_coherent);
}

TEST_CASE("rotated highest weight stays coherent") {
  Rng rng(21);
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const OperatorBasis b = spin_generators(SpinLabel(two_s));
    for (int trial = 0; trial < 10; ++trial) {
      const PureState s = entangle::apply(random_group_element(b, rng), spin_basis(two_s, 0));
      CHECK(spin_coherence_check(s, two_s));
      CHECK(coherence_residual(s, b) < 1e-10);
    }
  }
}

TEST_CASE("variance range for spin-s") {
  Rng rng(22);
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const double s = 0.5 * two_s;
    const OperatorBasis b = spin_generators(SpinLabel(two_s));
    for (int trial = 0; trial < 500; ++trial) {
      const double d = total_variance(random_state({two_s + 1}, rng), b).total_variance;
      CHECK(d >= s - 1e-8);
      CHECK(d <= s * (s + 1) + 1e-8);
    }
  }
}

TEST_CASE("variance identity and G-invariance") {
  Rng rng(23);
  const std::vector<OperatorBasis> bases{
      spin_generators(SpinLabel(3)), local_algebra(std::vector<int>{2, 3}),
      power_algebra(local_algebra(std::vector<int>{3}), 2, PowerKind::antisymmetric)};
  for (const OperatorBasis& b : bases) {
    for (int trial = 0; trial < 50; ++trial) {
      const PureState s = random_state(b.factor_dims, rng);
      const VarianceReport r = total_variance(s, b);
      CHECK(std::abs(r.total_variance + r.expectation_vector.squaredNorm() - r.casimir_scalar) <
            1e-9);
      const PureState t = entangle::apply(random_group_element(b, rng), s);
      CHECK(std::abs(total_variance(t, b).total_variance - r.total_variance) < 1e-9);
    }
  }
}

TEST_CASE("variance extremes") {
  for (int two_s = 2; two_s <= 4; ++two_s) {
    const double s = 0.5 * two_s;
    const OperatorBasis b = spin_generators(SpinLabel(two_s));
    CHECK(std::abs(total_variance(spin_basis(two_s, 0), b).total_variance - s) < 1e-12);
    CVector cat = CVector::Zero(two_s + 1);
    cat[0] = M_SQRT1_2;
    cat[two_s] = -M_SQRT1_2;
    const double dcat = total_variance(PureState({two_s + 1}, cat), b).total_variance;
    CHECK(std::abs(dcat - s * (s + 1)) < 1e-10);
  }
}
