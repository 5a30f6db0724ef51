// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file acceptance.hpp
 * @brief Desk-scale acceptance checks with fixed seeds.
 */
#pragma once

#include "entangle/bell.hpp"
#include "entangle/orbit.hpp"
#include "entangle/random.hpp"

#include <string>
#include <vector>

namespace entangle {

struct AcceptanceConfig {
  FlowParams flow;  ///< used by every flow-based check
  SearchBudget search;
  std::uint64_t seed = kDefaultSeed;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;              ///< measured quantities against tolerances
  std::vector<std::string> notes;  ///< extra diagnostics, not part of the verdict
  double seconds = 0.0;
};

[[nodiscard]] std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config = {});

/// One line per criterion: "PASS  3 coherent-safety  ...".
[[nodiscard]] std::string format_result(const CriterionResult& r);

}  // namespace entangle
