// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/majorana.hpp"

#include "entangle/error.hpp"
#include "entangle/repn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace entangle {

void RootConfiguration::validate() const {
  if (two_s < 0) throw ValidationError("root configuration: two_s must be nonnegative");
  if (infinity_multiplicity < 0)
    throw ValidationError("root configuration: negative multiplicity at infinity");
  if (static_cast<int>(finite_roots.size()) + infinity_multiplicity != two_s)
    throw ValidationError("root configuration: root count does not equal two_s");
  for (const cplx& z : finite_roots)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("root configuration: non-finite root");
}

CVector binary_form_coefficients(const PureState& state, int two_s) {
  if (two_s < 0 || state.dim() != two_s + 1)
    throw ValidationError("majorana: state dimension must be two_s + 1");
  CVector q(two_s + 1);
  for (int j = 0; j <= two_s; ++j)
    q[j] = state[j] * std::sqrt(static_cast<double>(binomial(two_s, j)));
  return q;
}

namespace {

cplx horner(const CVector& c, cplx t) {
  cplx v = 0.0;
  for (Eigen::Index j = c.size() - 1; j >= 0; --j) v = v * t + c[j];
  return v;
}

cplx horner_derivative(const CVector& c, cplx t) {
  cplx v = 0.0;
  for (Eigen::Index j = c.size() - 1; j >= 1; --j) v = v * t + static_cast<double>(j) * c[j];
  return v;
}

// Radix-2 diagonal similarity that equalizes row and column norms.
void balance(CMatrix& m) {
  const Eigen::Index n = m.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double sum = c + r;
      double f = 1.0;
      double g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * sum) {
        done = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<cplx> polynomial_roots(const CVector& coeffs) {
  const Eigen::Index deg = coeffs.size() - 1;
  if (deg < 1) return {};
  const cplx lead = coeffs[deg];
  if (lead == cplx(0.0)) throw ValidationError("polynomial_roots: zero leading coefficient");
  CMatrix companion = CMatrix::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / lead;
  balance(companion);
  Eigen::ComplexEigenSolver<CMatrix> eig(companion, false);
  if (eig.info() != Eigen::Success) throw NumericalError("polynomial_roots: eigensolver failed");

  std::vector<cplx> roots(eig.eigenvalues().data(), eig.eigenvalues().data() + deg);
  for (cplx& z : roots) {
    for (int step = 0; step < 3; ++step) {
      const cplx p = horner(coeffs, z);
      const cplx dp = horner_derivative(coeffs, z);
      if (dp == cplx(0.0)) break;
      const cplx next = z - p / dp;
      if (!(std::abs(horner(coeffs, next)) < std::abs(p))) break;
      z = next;
    }
  }
  // Deterministic order: by real part, then imaginary part.
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

RootConfiguration to_roots(const PureState& state, int two_s) {
  const CVector q = binary_form_coefficients(state, two_s);
  const double scale = q.norm();
  if (!(scale > 0.0)) throw ValidationError("majorana: zero state has no root configuration");
  const double cut = kCoefficientZero * scale;

  RootConfiguration out;
  out.two_s = two_s;
  Eigen::Index top = two_s;
  while (top >= 0 && std::abs(q[top]) <= cut) --top;
  out.infinity_multiplicity = static_cast<int>(two_s - top);
  Eigen::Index bottom = 0;
  while (bottom < top && std::abs(q[bottom]) <= cut) ++bottom;
  out.finite_roots.assign(static_cast<std::size_t>(bottom), cplx(0.0));
  const CVector reduced = q.segment(bottom, top - bottom + 1);
  for (const cplx& z : polynomial_roots(reduced)) out.finite_roots.push_back(z);
  return out;
}

PureState from_roots(const RootConfiguration& roots) {
  roots.validate();
  // Q(t) = prod_i (t - z_i); degree two_s - infinity_multiplicity.
  CVector q = CVector::Zero(roots.two_s + 1);
  q[0] = 1.0;
  Eigen::Index deg = 0;
  for (const cplx& z : roots.finite_roots) {
    for (Eigen::Index j = deg + 1; j >= 1; --j) q[j] = q[j - 1] - z * q[j];
    q[0] = -z * q[0];
    ++deg;
  }
  CVector amps(roots.two_s + 1);
  for (int j = 0; j <= roots.two_s; ++j)
    amps[j] = q[j] / std::sqrt(static_cast<double>(binomial(roots.two_s, j)));
  return PureState({roots.two_s + 1}, amps / amps.norm());
}

Vec3 north_pole() { return Vec3(0.0, 0.0, 1.0); }

Vec3 star_point(cplx z) {
  const double r2 = std::norm(z);
  if (!std::isfinite(r2)) return north_pole();
  const double denom = 1.0 + r2;
  return Vec3(2.0 * z.real() / denom, 2.0 * z.imag() / denom, (r2 - 1.0) / denom);
}

StarPoints star_points(const RootConfiguration& roots) {
  roots.validate();
  StarPoints out;
  for (const cplx& z : roots.finite_roots) out.points.push_back(star_point(z));
  for (int k = 0; k < roots.infinity_multiplicity; ++k) out.points.push_back(north_pole());
  return out;
}

double balance_residual(const PureState& state, int two_s) {
  const StarPoints stars = star_points(to_roots(state, two_s));
  Vec3 sum = Vec3::Zero();
  for (const Vec3& p : stars.points) sum += p;
  return sum.norm();
}

std::string_view to_string(HmClass c) {
  switch (c) {
    case HmClass::unstable:
      return "unstable";
    case HmClass::semistable_not_stable:
      return "semistable_not_stable";
    case HmClass::stable:
      return "stable";
  }
  return "unknown";
}

int max_multiplicity(const RootConfiguration& roots, double chordal_tol) {
  roots.validate();
  std::vector<Vec3> pts;
  for (const cplx& z : roots.finite_roots) pts.push_back(star_point(z));
  for (int k = 0; k < roots.infinity_multiplicity; ++k) pts.push_back(north_pole());
  const std::size_t n = pts.size();
  if (n == 0) return 0;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  const std::size_t finite = roots.finite_roots.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool same;
      if (chordal_tol > 0.0) {
        same = (pts[i] - pts[j]).norm() < chordal_tol;
      } else if (i >= finite || j >= finite) {
        same = i >= finite && j >= finite;
      } else {
        same = roots.finite_roots[i] == roots.finite_roots[j];
      }
      if (same) parent[find(i)] = find(j);
    }
  }
  std::vector<int> count(n, 0);
  int best = 0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, ++count[find(i)]);
  return best;
}

namespace {

HmClass classify_multiplicity(int m, int two_s) {
  // Spin 0 is a closed point orbit.
  if (two_s == 0) return HmClass::stable;
  if (2 * m > two_s) return HmClass::unstable;
  if (2 * m == two_s) return HmClass::semistable_not_stable;
  return HmClass::stable;
}

}  // namespace

HmClass hm_classify(const RootConfiguration& roots) {
  return classify_multiplicity(max_multiplicity(roots, 0.0), roots.two_s);
}

HmClass hm_classify_clustered(const RootConfiguration& roots, double chordal_tol) {
  if (!(chordal_tol > 0.0)) throw ValidationError("hm_classify_clustered: tolerance must be positive");
  return classify_multiplicity(max_multiplicity(roots, chordal_tol), roots.two_s);
}

Eigen::Matrix3cd spin1_to_cartesian_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3cd v;
  v << -r, 0.0, r,
       -r * kI, 0.0, -r * kI,
       0.0, 1.0, 0.0;
  return v;
}

CVec3 to_cartesian(const PureState& spin1_state) {
  if (spin1_state.dim() != 3) throw ValidationError("spin-1 model: state must have dimension 3");
  return spin1_to_cartesian_matrix() * CVec3(spin1_state.amplitudes());
}

PureState from_cartesian(const CVec3& v) {
  const CVec3 amps = spin1_to_cartesian_matrix().adjoint() * v;
  return PureState({3}, CVector(amps));
}

Eigen::Matrix3cd cartesian_spin_operator(const Vec3& l) {
  Eigen::Matrix3d cross;
  cross << 0.0, -l.z(), l.y(),
           l.z(), 0.0, -l.x(),
           -l.y(), l.x(), 0.0;
  return kI * cross.cast<cplx>();
}

Spin1Invariants spin1_invariants(const CVec3& v) {
  Spin1Invariants out;
  out.bilinear_square = v.transpose() * v;
  out.cross_norm = v.cross(CVec3(v.conjugate())).norm();
  const double c = std::clamp(std::abs(out.bilinear_square) / v.squaredNorm(), 0.0, 1.0);
  out.phi = 0.5 * std::acos(c);
  return out;
}

Spin1Invariants spin1_invariants(const PureState& spin1_state) {
  return spin1_invariants(to_cartesian(spin1_state));
}

Spin1Canonical spin1_canonical(const CVec3& v) {
  const CVec3 unit = v / v.norm();
  const cplx b = unit.transpose() * unit;
  Spin1Canonical out;
  out.phase = std::abs(b) > 1e-15 ? 0.5 * std::arg(b) : 0.0;
  const CVec3 w = std::exp(-kI * out.phase) * unit;
  const Vec3 re = w.real();
  const Vec3 im = w.imag();
  out.phi = std::atan2(im.norm(), re.norm());
  out.m = re.normalized();
  if (im.norm() > 1e-12) {
    // Orthogonal to m up to rounding; re-orthogonalize.
    Vec3 n = im - im.dot(out.m) * out.m;
    out.n = n.normalized();
  } else {
    const Vec3 trial = std::abs(out.m.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    out.n = (trial - trial.dot(out.m) * out.m).normalized();
  }
  return out;
}

}  // namespace entangle
