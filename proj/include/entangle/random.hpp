// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "entangle/types.hpp"

#include <cstdint>
#include <random>

namespace entangle {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20080215;

/// Vector with i.i.d. standard complex Gaussian entries (not normalized).
CVector random_gaussian_vector(Eigen::Index n, Rng& rng);

/// Uniformly distributed unit vector in C^n.
CVector random_unit_vector(Eigen::Index n, Rng& rng);

/// Haar-random unitary via QR of a Ginibre matrix with phase correction.
CMatrix random_unitary(Eigen::Index n, Rng& rng);

/// Ginibre matrix rescaled to unit determinant.
CMatrix random_special_linear(Eigen::Index n, Rng& rng);

/// Uniform point on the unit sphere S^2.
Vec3 random_direction(Rng& rng);

double random_uniform(double lo, double hi, Rng& rng);

}  // namespace entangle
