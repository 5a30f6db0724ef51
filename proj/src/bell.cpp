// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/bell.hpp"

#include "entangle/error.hpp"
#include "entangle/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace entangle {

void Pentagram::validate() const {
  for (int i = 0; i < 5; ++i) {
    if (std::abs(vectors[i].norm() - 1.0) > 1e-12)
      throw ValidationError("pentagram: vector is not a unit vector");
    if (std::abs((*this)[i].dot((*this)[i + 1])) > 1e-10)
      throw ValidationError("pentagram: consecutive vectors are not orthogonal");
  }
}

namespace {

Vec3 spherical(double theta, double phi) {
  return Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
}

Vec3 tangent_theta(double theta, double phi) {
  return Vec3(std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta));
}

Vec3 tangent_phi(double phi) { return Vec3(-std::sin(phi), std::cos(phi), 0.0); }

}  // namespace

Pentagram make_pentagram(const PentagramParams& params) {
  const auto [theta, phi, t2, t3, t4] = params;
  Pentagram p;
  auto& l = p.vectors;
  l[0] = spherical(theta, phi);
  l[1] = std::cos(t2) * tangent_theta(theta, phi) + std::sin(t2) * tangent_phi(phi);
  l[2] = std::cos(t3) * l[0] + std::sin(t3) * l[1].cross(l[0]);
  l[3] = std::cos(t4) * l[1] + std::sin(t4) * l[2].cross(l[1]);
  const Vec3 fifth = l[3].cross(l[0]);
  if (fifth.norm() < 1e-12) throw ValidationError("pentagram: l_4 is parallel to l_1, l_5 undefined");
  l[4] = fifth.normalized();
  // Re-normalize against rounding in the chain.
  for (Vec3& v : l) v.normalize();
  return p;
}

PentagramParams pentagram_parameters(const Pentagram& p) {
  const Vec3& l1 = p[0];
  const Vec3& l2 = p[1];
  const Vec3& l3 = p[2];
  const Vec3& l4 = p[3];
  const double theta = std::acos(std::clamp(l1.z(), -1.0, 1.0));
  const double phi = std::atan2(l1.y(), l1.x());
  const double t2 = std::atan2(l2.dot(tangent_phi(phi)), l2.dot(tangent_theta(theta, phi)));
  const double t3 = std::atan2(l3.dot(l2.cross(l1)), l3.dot(l1));
  const double t4 = std::atan2(l4.dot(l3.cross(l2)), l4.dot(l2));
  return {theta, phi, t2, t3, t4};
}

Pentagram regular_pentagram() {
  const double c = std::cos(kPi / 5.0);
  const double theta = std::acos(std::sqrt(c / (1.0 + c)));
  Pentagram p;
  for (int k = 0; k < 5; ++k) p.vectors[k] = spherical(theta, 4.0 * kPi * k / 5.0);
  return p;
}

Pentagram degenerate_pentagram(double theta, double phi, double t2, double t4) {
  return make_pentagram({theta, phi, t2, 0.0, t4});
}

Pentagram random_pentagram(Rng& rng) {
  while (true) {
    const Vec3 l1 = random_direction(rng);
    const double theta = std::acos(std::clamp(l1.z(), -1.0, 1.0));
    const double phi = std::atan2(l1.y(), l1.x());
    const double t2 = random_uniform(0.0, 2.0 * kPi, rng);
    const double t3 = random_uniform(0.0, 2.0 * kPi, rng);
    const double t4 = random_uniform(0.0, 2.0 * kPi, rng);
    if (std::abs(std::sin(t3) * std::sin(t4)) > 1.0 - 1e-9) continue;
    return make_pentagram({theta, phi, t2, t3, t4});
  }
}

bool has_parallel_pair(const Pentagram& p) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (std::abs(p[i].dot(p[j])) > kParallelThreshold) return true;
  return false;
}

PentagramReport pentagram_operator(const Pentagram& p) {
  PentagramReport r;
  for (const Vec3& l : p.vectors) r.operator_A += l * l.transpose();
  Eigen::SelfAdjointEigenSolver<Mat3> eig(r.operator_A);
  for (int k = 0; k < 3; ++k) {
    r.spectrum[k] = eig.eigenvalues()[2 - k];
    r.eigenvectors.col(k) = eig.eigenvectors().col(2 - k);
  }
  return r;
}

double bell_value(const CVec3& psi, const Pentagram& p) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw ValidationError("bell_value: zero state");
  double v = 0.0;
  for (const Vec3& l : p.vectors) v += std::norm(l.cast<cplx>().dot(psi));
  return v / n2;
}

PentagramReport pentagram_report(const CVec3& psi, const Pentagram& p) {
  PentagramReport r = pentagram_operator(p);
  r.bell_value = bell_value(psi, p);
  r.violated = r.bell_value > 2.0 + kViolationMargin;
  return r;
}

double max_bell_value(double phi, const Pentagram& p) {
  const Vec3 lambda = pentagram_operator(p).spectrum;
  return 0.5 * (lambda[0] + lambda[1]) + 0.5 * (lambda[0] - lambda[1]) * std::cos(2.0 * phi);
}

Pentagram align_pentagram(const Pentagram& p, const Vec3& m, const Vec3& n) {
  const PentagramReport r = pentagram_operator(p);
  const Vec3 v1 = r.eigenvectors.col(0);
  const Vec3 v2 = r.eigenvectors.col(1);
  Mat3 from;
  from << v1, v2, v1.cross(v2);
  Mat3 to;
  to << m, n, m.cross(n);
  const Mat3 rot = to * from.transpose();
  Pentagram out;
  for (int i = 0; i < 5; ++i) out.vectors[i] = (rot * p.vectors[i]).normalized();
  return out;
}

namespace {

// Shape coordinates (t3, t4) with l_1 = e_z and l_2 = e_x fixed; every
// pentagram is congruent to one of these.
struct ShapeSearch {
  double cos2;
  double sin2;
  int evaluations = 0;
  int limit;

  double objective(double t3, double t4) {
    ++evaluations;
    if (std::abs(std::sin(t3) * std::sin(t4)) > 1.0 - 1e-9)
      return -std::numeric_limits<double>::infinity();
    const Vec3 lambda = pentagram_operator(make_pentagram({0.0, 0.0, 0.0, t3, t4})).spectrum;
    return lambda[0] * cos2 + lambda[1] * sin2;
  }

  bool exhausted() const { return evaluations >= limit; }

  // Compass search: try +-h along each coordinate, halve h on failure.
  double refine(double& t3, double& t4) {
    double best = objective(t3, t4);
    double h = 0.05;
    while (h > 1e-10 && !exhausted()) {
      bool moved = false;
      for (int axis = 0; axis < 2 && !exhausted(); ++axis) {
        for (double dir : {1.0, -1.0}) {
          const double a = t3 + (axis == 0 ? dir * h : 0.0);
          const double b = t4 + (axis == 1 ? dir * h : 0.0);
          const double v = objective(a, b);
          if (v > best) {
            best = v;
            t3 = a;
            t4 = b;
            moved = true;
            break;
          }
        }
      }
      if (!moved) h *= 0.5;
    }
    return best;
  }
};

}  // namespace

ViolationSearch search_violation(const CVec3& psi, const SearchBudget& budget) {
  if (budget.max_evaluations < 1) throw ValidationError("search budget must be positive");
  const Spin1Canonical canon = spin1_canonical(psi);
  ShapeSearch search{std::cos(canon.phi) * std::cos(canon.phi),
                     std::sin(canon.phi) * std::sin(canon.phi), 0, budget.max_evaluations};

  std::vector<std::pair<double, double>> starts;
  const PentagramParams reg = pentagram_parameters(regular_pentagram());
  starts.emplace_back(reg[3], reg[4]);
  // Small perturbations of the degenerate pentagram t3 = 0.
  constexpr int kEpsilons = 8;
  constexpr int kChainAngles = 6;
  for (int e = 0; e < kEpsilons; ++e) {
    const double eps = 1e-3 * std::pow(300.0, e / double(kEpsilons - 1));
    for (int c = 0; c < kChainAngles; ++c) {
      const double t4 = kPi * (c + 0.5) / kChainAngles;
      starts.emplace_back(eps, t4);
      starts.emplace_back(-eps, t4);
    }
  }
  Rng rng(budget.seed);
  for (int k = 0; k < budget.random_starts; ++k) {
    const double a = random_uniform(0.0, 2.0 * kPi, rng);
    const double b = random_uniform(0.0, 2.0 * kPi, rng);
    starts.emplace_back(a, b);
  }

  double best = -std::numeric_limits<double>::infinity();
  double best_t3 = reg[3];
  double best_t4 = reg[4];
  for (auto [t3, t4] : starts) {
    if (search.exhausted()) break;
    const double v = search.refine(t3, t4);
    if (v > best) {
      best = v;
      best_t3 = t3;
      best_t4 = t4;
    }
  }

  ViolationSearch out;
  out.evaluations = search.evaluations;
  out.budget_exhausted = search.exhausted();
  out.best_pentagram = align_pentagram(make_pentagram({0.0, 0.0, 0.0, best_t3, best_t4}),
                                       canon.m, canon.n);
  out.best_value = bell_value(psi, out.best_pentagram);
  if (out.best_value > 2.0 + kViolationMargin) out.pentagram = out.best_pentagram;
  return out;
}

double jsquare_form(const CVec3& psi, const Pentagram& p) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw ValidationError("jsquare_form: zero state");
  double total = 0.0;
  for (const Vec3& l : p.vectors) {
    const Eigen::Matrix3cd j = cartesian_spin_operator(l);
    total += psi.dot(j * (j * psi)).real();
  }
  return total / n2;
}

namespace {

Eigen::Matrix2cd sigma_dot(const Vec3& a) {
  Eigen::Matrix2cd m;
  m << a.z(), cplx(a.x(), -a.y()),
       cplx(a.x(), a.y()), -a.z();
  return m;
}

void require_unit(const Vec3& a) {
  if (std::abs(a.norm() - 1.0) > 1e-9) throw ValidationError("chsh: directions must be unit vectors");
}

}  // namespace

double chsh_value(const PureState& state, const Vec3& a1, const Vec3& a2, const Vec3& b1,
                  const Vec3& b2) {
  if (state.dims() != std::vector<int>{2, 2}) throw ValidationError("chsh: state must have dims [2,2]");
  for (const Vec3* v : {&a1, &a2, &b1, &b2}) require_unit(*v);
  const CVector psi = state.amplitudes() / state.norm();
  auto corr = [&psi](const Vec3& a, const Vec3& b) {
    const Eigen::Matrix2cd sa = sigma_dot(a);
    const Eigen::Matrix2cd sb = sigma_dot(b);
    Eigen::Matrix4cd ab;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) ab.block<2, 2>(2 * i, 2 * j) = sa(i, j) * sb;
    return psi.dot(ab * psi).real();
  };
  return corr(a1, b1) + corr(a2, b1) + corr(a2, b2) - corr(a1, b2) + 2.0;
}

Vec3 planar_direction(double degrees) {
  const double r = degrees * kPi / 180.0;
  return Vec3(std::sin(r), 0.0, std::cos(r));
}

}  // namespace entangle
