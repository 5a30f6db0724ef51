# Copyright 2026 The entangle Authors - All rights reserved.
# SPDX-License-Identifier: Apache-2.0
"""Entanglement relative to a dynamical symmetry group."""

from ._entangle import *  # noqa: F401,F403
from ._entangle import (  # noqa: F401
    BudgetExhausted,
    NumericalError,
    ValidationError,
)

__version__ = "0.1.0"
