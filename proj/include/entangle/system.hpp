// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "entangle/repn.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace entangle {

/// Parsed form of a system descriptor:
///   spin:<two_s> | local:<d1>x<d2>[x...] | sym:<d>^<n> | wedge:<d>^<n>
struct SystemSpec {
  enum class Kind { spin, local, symmetric, antisymmetric };

  Kind kind = Kind::spin;
  int two_s = 0;
  std::vector<int> dims;  ///< local factors
  int base_dim = 0;       ///< sym / wedge
  int power = 0;          ///< sym / wedge
  std::string text;

  /// Factorization a state of this system must carry.
  [[nodiscard]] std::vector<int> state_dims() const;
};

[[nodiscard]] SystemSpec parse_system(std::string_view text);

[[nodiscard]] OperatorBasis build_system(const SystemSpec& spec,
                                         std::size_t dimension_cap = kDefaultDimensionCap);

}  // namespace entangle
