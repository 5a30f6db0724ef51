// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/random.hpp"

#include <cmath>

namespace entangle {

CVector random_gaussian_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = cplx(re, im);
  }
  return v;
}

CVector random_unit_vector(Eigen::Index n, Rng& rng) {
  CVector v = random_gaussian_vector(n, rng);
  return v / v.norm();
}

namespace {

CMatrix ginibre(Eigen::Index n, Rng& rng) {
  CMatrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) g.col(j) = random_gaussian_vector(n, rng);
  return g;
}

}  // namespace

CMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const CMatrix g = ginibre(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

CMatrix random_special_linear(Eigen::Index n, Rng& rng) {
  CMatrix g = ginibre(n, rng);
  const cplx det = g.determinant();
  // Any n-th root of det works; the principal one keeps the result deterministic.
  const cplx root = std::pow(det, 1.0 / static_cast<double>(n));
  return g / root;
}

Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec3 v;
  do {
    const double x = normal(rng);
    const double y = normal(rng);
    const double z = normal(rng);
    v = Vec3(x, y, z);
  } while (v.norm() < 1e-12);
  return v.normalized();
}

double random_uniform(double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

}  // namespace entangle
