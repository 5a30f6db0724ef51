// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace entangle {

/// Base of all library errors. The CLI maps each subclass to an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad dimensions, out-of-range indices, schema violations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values produced during a computation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure ran out of budget without a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace entangle
