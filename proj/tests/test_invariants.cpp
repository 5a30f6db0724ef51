// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/invariants.hpp"
#include "entangle/orbit.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace entangle;

TEST_CASE("determinant concurrence of standard states") {
  const InvariantReport bell = det_concurrence(bell_state());
  CHECK(bell.modulus == doctest::Approx(0.5));
  CHECK(bell.derived_concurrence == doctest::Approx(1.0));
  const InvariantReport me3 = det_concurrence(maximally_entangled_state(3));
  CHECK(me3.derived_concurrence == doctest::Approx(1.0));
  Rng rng(41);
  const InvariantReport rect = det_concurrence(random_state({2, 3}, rng));
  CHECK_FALSE(rect.applicable);
}

TEST_CASE("hyperdeterminant matches the discriminant oracle") {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState s = random_state({2, 2, 2}, rng);
    const cplx expected = oracle::hyperdet_by_discriminant(s.amplitudes());
    const InvariantReport r = cayley_hyperdet(s);
    CHECK(std::abs(r.value - expected) < 1e-14);
    CHECK(r.derived_concurrence == doctest::Approx(std::sqrt(4.0 * std::abs(expected))));
  }
}

TEST_CASE("GHZ and W hyperdeterminants") {
  CHECK(three_tangle(ghz_state(3)) == doctest::Approx(1.0));
  CHECK(cayley_hyperdet(ghz_state(3)).derived_concurrence == doctest::Approx(1.0));
  CHECK(cayley_hyperdet(w_state(3)).value == cplx(0.0, 0.0));
}

TEST_CASE("det is SL x SL invariant") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState s = random_state({3, 3}, rng);
    const std::vector<CMatrix> g{random_special_linear(3, rng), random_special_linear(3, rng)};
    const PureState t = PureState::unnormalized(s.dims(), apply_local(s, g).amplitudes());
    CHECK(std::abs(det_concurrence(s).value - det_concurrence(t).value) < 1e-9);
    const std::vector<CMatrix> u{random_unitary(3, rng), random_unitary(3, rng)};
    CHECK(std::abs(det_concurrence(s).modulus - det_concurrence(apply_local(s, u)).modulus) <
          1e-14);
  }
}

TEST_CASE("hyperdeterminant is SL^3 invariant") {
  Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState s = random_state({2, 2, 2}, rng);
    const std::vector<CMatrix> g{random_special_linear(2, rng), random_special_linear(2, rng),
                                 random_special_linear(2, rng)};
    const cplx before = cayley_hyperdet(s).value;
    const cplx after = cayley_hyperdet(apply_local(s, g)).value;
    CHECK(std::abs(after - before) <= 1e-8 * std::abs(before));
  }
}

TEST_CASE("hyperdeterminant has degree 4") {
  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState s = random_state({2, 2, 2}, rng);
    const cplx c(random_uniform(-2, 2, rng), random_uniform(-2, 2, rng));
    const PureState t = PureState::unnormalized({2, 2, 2}, c * s.amplitudes());
    const cplx expected = std::pow(c, 4) * cayley_hyperdet(s).value;
    CHECK(std::abs(cayley_hyperdet(t).value - expected) <= 1e-12 * std::abs(expected));
  }
}

TEST_CASE("nonzero hyperdeterminant is never unstable") {
  Rng rng(46);
  const OperatorBasis b = local_algebra(std::vector<int>{2, 2, 2});
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const PureState s = random_state({2, 2, 2}, rng);
    if (std::abs(cayley_hyperdet(s).value) <= 1e-6) continue;
    ++checked;
    const Stability st = classify(s, b);
    CHECK(st != Stability::unstable);
    CHECK(st != Stability::coherent);
  }
  CHECK(checked > 30);
}
