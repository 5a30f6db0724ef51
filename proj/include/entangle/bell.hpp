// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file bell.hpp
 * @brief Pentagram inequality for spin 1 and the CHSH functional for two qubits.
 *
 * A pentagram is a cyclic quintuple of unit vectors l_i in E^3 with
 * l_i orthogonal to l_{i+1}. With A = sum_i |l_i><l_i| a spin-1 state psi in
 * the E^3 (x) C model satisfies <psi|A|psi> <= 2 under any local hidden
 * variable model; coherent states obey this bound, every other state
 * violates it for a suitable pentagram.
 */

#pragma once

#include "entangle/random.hpp"
#include "entangle/states.hpp"

#include <array>
#include <optional>

namespace entangle {

struct Pentagram {
  std::array<Vec3, 5> vectors;

  [[nodiscard]] const Vec3& operator[](int i) const { return vectors[((i % 5) + 5) % 5]; }

  /// Throws ValidationError when norms or consecutive orthogonality fail.
  void validate() const;
};

/// polar angle and azimuth of l_1, then one chain angle each for l_2, l_3, l_4.
using PentagramParams = std::array<double, 5>;

/**
 * Builds l_1 from (theta, phi); l_2 = cos t2 e_theta + sin t2 e_phi in the
 * tangent frame of l_1; l_{k+1} = cos t l_{k-1} + sin t (l_k x l_{k-1}) for
 * k = 2, 3; l_5 = normalize(l_4 x l_1). Throws when l_4 is parallel to l_1.
 */
[[nodiscard]] Pentagram make_pentagram(const PentagramParams& params);

/// Inverse of make_pentagram for pentagrams whose l_4 is not parallel to l_1.
[[nodiscard]] PentagramParams pentagram_parameters(const Pentagram& p);

/// Regular pentagram with symmetry axis e_z.
[[nodiscard]] Pentagram regular_pentagram();

/// Pentagram with l_3 = l_1 (t3 = 0).
[[nodiscard]] Pentagram degenerate_pentagram(double theta = 0.0, double phi = 0.0,
                                             double t2 = 0.0, double t4 = 0.7);

/// Uniform l_1 on the sphere and uniform chain angles.
[[nodiscard]] Pentagram random_pentagram(Rng& rng);

inline constexpr double kParallelThreshold = 1.0 - 1e-9;

[[nodiscard]] bool has_parallel_pair(const Pentagram& p);

struct PentagramReport {
  Mat3 operator_A = Mat3::Zero();
  Vec3 spectrum = Vec3::Zero();  ///< lambda_1 >= lambda_2 >= lambda_3
  Mat3 eigenvectors = Mat3::Identity();  ///< column k belongs to spectrum[k]
  double bell_value = 0.0;
  bool violated = false;
};

/// A and its spectrum; bell fields are left at zero.
[[nodiscard]] PentagramReport pentagram_operator(const Pentagram& p);

inline constexpr double kViolationMargin = 1e-10;

/// sum_i |<l_i, psi>|^2 for psi in E^3 (x) C, normalized first.
[[nodiscard]] double bell_value(const CVec3& psi, const Pentagram& p);

/// Full report for a cartesian spin-1 state.
[[nodiscard]] PentagramReport pentagram_report(const CVec3& psi, const Pentagram& p);

/// lambda_1 cos^2 phi + lambda_2 sin^2 phi.
[[nodiscard]] double max_bell_value(double phi, const Pentagram& p);

/// Rotates p so that its top two eigenvectors become m and n.
[[nodiscard]] Pentagram align_pentagram(const Pentagram& p, const Vec3& m, const Vec3& n);

struct SearchBudget {
  int max_evaluations = 20000;
  int random_starts = 8;
  std::uint64_t seed = kDefaultSeed;
};

struct ViolationSearch {
  std::optional<Pentagram> pentagram;  ///< set when a violation was found
  double best_value = 0.0;             ///< best bell_value reached
  Pentagram best_pentagram;
  int evaluations = 0;
  bool budget_exhausted = false;
};

/// Multi-start search over pentagram shapes, oriented to the state's
/// canonical frame; starts at epsilon-perturbed degenerate pentagrams.
[[nodiscard]] ViolationSearch search_violation(const CVec3& psi, const SearchBudget& budget = {});

/// sum_i <psi|J_{l_i}^2|psi>, evaluated with the spin operators themselves.
[[nodiscard]] double jsquare_form(const CVec3& psi, const Pentagram& p);

/// <A1 B1> + <A2 B1> + <A2 B2> - <A1 B2> + 2 with A_i = a_i.sigma, B_j = b_j.sigma.
[[nodiscard]] double chsh_value(const PureState& state, const Vec3& a1, const Vec3& a2,
                                const Vec3& b1, const Vec3& b2);

/// Unit direction in the x-z plane at `degrees` from the z axis.
[[nodiscard]] Vec3 planar_direction(double degrees);

}  // namespace entangle
