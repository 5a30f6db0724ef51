// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/error.hpp"
#include "entangle/states.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace entangle;

TEST_CASE("state construction enforces the norm") {
  CHECK_THROWS_AS((void)PureState({2}, CVector::Ones(2)), ValidationError);
  CHECK_THROWS_AS((void)PureState({2, 2}, CVector::Zero(3)), ValidationError);
  const PureState u = PureState::unnormalized({2}, CVector::Ones(2));
  CHECK(u.is_unnormalized());
  CHECK(u.normalized().norm() == doctest::Approx(1.0));
}

TEST_CASE("flat index is row-major with factor 0 slowest") {
  const std::vector<int> dims{2, 3, 4};
  const std::vector<int> idx{1, 2, 3};
  CHECK(flat_index(dims, idx) == (1 * 3 + 2) * 4 + 3);
  const PureState s = basis_state(dims, idx);
  CHECK(s.at(idx) == cplx(1.0, 0.0));
}

TEST_CASE("marginals agree with explicit partial trace") {
  Rng rng(11);
  const std::vector<std::vector<int>> shapes{{2, 2}, {2, 3}, {3, 2, 2}, {2, 2, 2, 2}};
  for (const auto& dims : shapes) {
    const PureState s = random_state(dims, rng);
    for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
      const CMatrix expected = oracle::partial_trace(s.amplitudes(), dims, k);
      CHECK((marginal(s, k).matrix - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("Schmidt decomposition reconstructs the state") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState s = random_state({3, 4}, rng);
    const SchmidtData sd = schmidt(s);
    CVector rebuilt = CVector::Zero(12);
    double total = 0.0;
    for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k) {
      rebuilt += sd.coefficients[k] * oracle::kron(sd.left_basis[k], sd.right_basis[k]);
      total += sd.coefficients[k] * sd.coefficients[k];
      if (k > 0) CHECK(sd.coefficients[k] <= sd.coefficients[k - 1]);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((rebuilt - s.amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("entropy of standard states") {
  CHECK(entropy(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(entropy(maximally_entangled_state(3)) - std::log2(3.0)) < 1e-10);
  const std::vector<CVector> factors{CVector::Unit(2, 0), CVector::Unit(3, 1)};
  CHECK(std::abs(entropy(product_state(factors))) < 1e-12);
  CHECK(entropy(singlet_state()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("marginals of a bipartite pure state are isospectral") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState s = random_state({3, 5}, rng);
    const RVector a = marginal(s, 0).spectrum();
    const RVector b = marginal(s, 1).spectrum();
    // b carries two extra zeros at the bottom.
    CHECK((a - b.tail(3)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(b.head(2).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("entropy is invariant under local unitaries") {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState s = random_state({2, 3}, rng);
    const std::vector<CMatrix> ops{random_unitary(2, rng), random_unitary(3, rng)};
    const PureState t = apply_local(s, ops);
    CHECK(std::abs(entropy(s) - entropy(t)) < 1e-10);
  }
}

TEST_CASE("GHZ and W states") {
  const PureState ghz = ghz_state(3);
  CHECK(std::abs(ghz[0]) == doctest::Approx(M_SQRT1_2));
  CHECK(std::abs(ghz[7]) == doctest::Approx(M_SQRT1_2));
  const PureState w = w_state(3);
  CHECK(std::abs(w[1]) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::abs(w[2]) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(std::abs(w[4]) == doctest::Approx(1.0 / std::sqrt(3.0)));
  for (int k = 0; k < 3; ++k) {
    const RVector sp = marginal(ghz, k).spectrum();
    CHECK(sp[0] == doctest::Approx(0.5));
  }
}

TEST_CASE("entropy input validation") {
  RVector bad(2);
  bad << -0.1, 1.1;
  CHECK_THROWS_AS((void)entropy_bits(bad), NumericalError);
  CHECK_THROWS_AS((void)schmidt(ghz_state(3)), ValidationError);
}
