// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file majorana.hpp
 * @brief Binary-form picture of spin-s states.
 *
 * A spin-s state with amplitudes c_mu in the |s>, |s-1>, ..., |-s> basis is
 * the binary form
 *
 *     f(x, y) = sum_k c_{k-s} C(2s, k)^{1/2} x^k y^{2s-k}
 *
 * of degree d = 2s. Its roots, taken in the affine coordinate t = y/x on the
 * Riemann sphere, are the roots of Q(t) = f(1, t); a degree drop of Q by m
 * means a root at infinity of multiplicity m. Thus |+s> = x^{2s} has all its
 * roots at infinity, and |-s> = y^{2s} all at t = 0.
 *
 * Stereographic convention: t = 0 is the south pole (0, 0, -1), infinity the
 * north pole (0, 0, 1).
 */

#pragma once

#include "entangle/states.hpp"

#include <string_view>
#include <vector>

namespace entangle {

struct RootConfiguration {
  std::vector<cplx> finite_roots;  ///< with multiplicity
  int infinity_multiplicity = 0;
  int two_s = 0;

  /// Throws ValidationError unless |finite_roots| + infinity_multiplicity = two_s.
  void validate() const;
};

struct StarPoints {
  std::vector<Vec3> points;
};

/// Coefficients q_j of Q(t) = sum_j q_j t^j, q_j = c_j C(2s, j)^{1/2}, where
/// c_j is the amplitude at basis index j (spin projection s - j).
[[nodiscard]] CVector binary_form_coefficients(const PureState& state, int two_s);

/// Coefficients below this fraction of |q| are zero for root extraction.
inline constexpr double kCoefficientZero = 1e-12;

[[nodiscard]] RootConfiguration to_roots(const PureState& state, int two_s);

/// Normalized state whose binary form has exactly these roots.
[[nodiscard]] PureState from_roots(const RootConfiguration& roots);

/// Roots of sum_j coeffs[j] t^j (leading coefficient nonzero) by companion
/// matrix eigenvalues after diagonal balancing, then Newton polishing.
[[nodiscard]] std::vector<cplx> polynomial_roots(const CVector& coeffs);

[[nodiscard]] Vec3 star_point(cplx z);
[[nodiscard]] Vec3 north_pole();
[[nodiscard]] StarPoints star_points(const RootConfiguration& roots);

/// |sum of star points|; zero characterizes completely entangled spin states.
[[nodiscard]] double balance_residual(const PureState& state, int two_s);

enum class HmClass { unstable, semistable_not_stable, stable };

[[nodiscard]] std::string_view to_string(HmClass c);

/// Exact multiplicities: roots are grouped only when bitwise equal.
[[nodiscard]] HmClass hm_classify(const RootConfiguration& roots);

/// Numerically computed roots: points closer than `chordal_tol` on the
/// sphere are merged before counting multiplicities.
[[nodiscard]] HmClass hm_classify_clustered(const RootConfiguration& roots,
                                            double chordal_tol = 1e-6);

/// Largest multiplicity of a point, including infinity.
[[nodiscard]] int max_multiplicity(const RootConfiguration& roots, double chordal_tol = 0.0);

// ---------------------------------------------------------------------------
// Spin 1 as complexified Euclidean space E^3 (x) C.
//
// |+1> = -(e_x + i e_y)/sqrt(2),  |0> = e_z,  |-1> = (e_x - i e_y)/sqrt(2),
// so that J_l psi = i l x psi reproduces the spin_generators matrices.
// ---------------------------------------------------------------------------

/// Columns are the images of |+1>, |0>, |-1>.
[[nodiscard]] Eigen::Matrix3cd spin1_to_cartesian_matrix();
[[nodiscard]] CVec3 to_cartesian(const PureState& spin1_state);
[[nodiscard]] PureState from_cartesian(const CVec3& v);

/// J_l = i [l]_x acting on E^3 (x) C.
[[nodiscard]] Eigen::Matrix3cd cartesian_spin_operator(const Vec3& direction);

struct Spin1Invariants {
  cplx bilinear_square{0.0, 0.0};  ///< (psi, psi)
  double cross_norm = 0.0;         ///< |psi x conj(psi)|
  double phi = 0.0;                ///< |(psi, psi)| = cos 2 phi, phi in [0, pi/4]
};

[[nodiscard]] Spin1Invariants spin1_invariants(const CVec3& v);
[[nodiscard]] Spin1Invariants spin1_invariants(const PureState& spin1_state);

/// psi = e^{i gamma} (m cos phi + i n sin phi) with m, n orthonormal real.
struct Spin1Canonical {
  double phi = 0.0;
  double phase = 0.0;
  Vec3 m = Vec3::UnitX();
  Vec3 n = Vec3::UnitY();
};

[[nodiscard]] Spin1Canonical spin1_canonical(const CVec3& v);

}  // namespace entangle
