// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief The `entangle` command-line front end.
 *
 *     entangle <command> [--system S] [--state FILE|random] [--params FILE]
 *                        [--json] [--seed N]
 *
 * Commands: classify, variance, schmidt, concurrence, invariants, majorana,
 * pentagram, chsh, selftest.
 *
 * Exit status: 0 ok, 1 validation error, 2 numerical failure, 3 budget
 * exhausted or otherwise inconclusive.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entangle {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitInconclusive = 3;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entangle
