# Copyright 2026 The entangle Authors - All rights reserved.
# SPDX-License-Identifier: Apache-2.0

import json
import math
import os

import numpy as np
import pytest

import entangle

DATA = os.environ.get("ENTANGLE_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data", "states"))


def test_casimir_spin():
    for two_s in range(1, 7):
        s = two_s / 2
        c = entangle.casimir(entangle.spin_system(two_s))
        assert np.allclose(c, s * (s + 1) * np.eye(two_s + 1), atol=1e-10)


def test_ghz_and_w():
    basis = entangle.system("local:2x2x2")
    ghz = entangle.classify(entangle.ghz_state(), basis)
    assert ghz["stability"] == "stable"
    assert ghz["concurrence"] == pytest.approx(1.0)
    w = entangle.classify(entangle.w_state(), basis)
    assert w["stability"] == "unstable"
    assert entangle.hyperdeterminant(entangle.w_state()) == 0


def test_two_qubit_concurrence_matches_det():
    basis = entangle.local_system([2, 2])
    for seed in range(5):
        s = entangle.random_state([2, 2], seed)
        a = s.amplitudes
        assert entangle.concurrence(s, basis) == pytest.approx(2 * abs(a[0] * a[3] - a[1] * a[2]), abs=1e-6)


def test_schmidt_bell():
    coeffs, ent = entangle.schmidt(entangle.bell_state())
    assert np.allclose(coeffs, [math.sqrt(0.5)] * 2)
    assert ent == pytest.approx(1.0)


def test_majorana_roots():
    s = entangle.PureState([3], np.array([0, 1, 0], dtype=complex))
    finite, infinity = entangle.roots(s, 2)
    assert infinity == 1 and finite == [0j]
    assert entangle.balance_residual(s, 2) == 0.0
    assert entangle.hm_classify([0, 0, 0], 1, 4) == "unstable"


def test_pentagram_axis():
    axis = entangle.PureState([3], np.array([0, 1, 0], dtype=complex))
    p = entangle.regular_pentagram()
    assert entangle.bell_value(axis, p) == pytest.approx(math.sqrt(5), abs=1e-12)
    r = entangle.search_violation(axis)
    assert r["found"] and r["best_value"] >= math.sqrt(5) - 1e-6


def test_chsh_singlet():
    def d(deg):
        r = math.radians(deg)
        return np.array([math.sin(r), 0, math.cos(r)])

    v = entangle.chsh_value(entangle.singlet_state(), d(0), d(90), d(45), d(135))
    assert v == pytest.approx(2 - 2 * math.sqrt(2), abs=1e-9)


def test_validation_errors():
    with pytest.raises(entangle.ValidationError):
        entangle.system("qubit:2")
    with pytest.raises(ValueError):
        entangle.PureState([2], np.array([1, 1], dtype=complex))


def test_cli_in_process():
    code, out, err = entangle.run_cli(
        ["classify", "--system", "local:2x2x2", "--state", os.path.join(DATA, "ghz.json"), "--json"])
    assert code == 0, err
    report = json.loads(out)
    assert report["results"]["stability"] == "stable"
    code, _, err = entangle.run_cli(["nonsense"])
    assert code == 1 and "unknown subcommand" in err
