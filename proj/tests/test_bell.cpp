// Copyright 2026 The entangle Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "entangle/bell.hpp"
#include "entangle/error.hpp"
#include "entangle/majorana.hpp"

#include <doctest.h>

#include <cmath>

using namespace entangle;

namespace {

// Spin-1 coherent vector (m + i n)/sqrt2 for a random orthonormal pair.
CVec3 random_coherent(Rng& rng) {
  const Vec3 m = random_direction(rng);
  Vec3 n = random_direction(rng);
  n = (n - n.dot(m) * m).normalized();
  return (m.cast<cplx>() + kI * n.cast<cplx>()) / std::sqrt(2.0);
}

CVec3 canonical(double phi) {
  return std::cos(phi) * CVec3(1, 0, 0) + kI * std::sin(phi) * CVec3(0, 1, 0);
}

}  // namespace

TEST_CASE("regular pentagram on the axis state") {
  const Pentagram p = regular_pentagram();
  p.validate();
  const double c = std::cos(kPi / 5);
  const CVec3 axis(0, 0, 1);
  CHECK(std::abs(bell_value(axis, p) - 5 * c / (1 + c)) < 1e-12);
  CHECK(std::abs(bell_value(axis, p) - std::sqrt(5.0)) < 1e-12);
  CHECK(pentagram_report(axis, p).violated);
  CHECK(std::abs(jsquare_form(axis, p) - (5 - std::sqrt(5.0))) < 1e-12);
}

TEST_CASE("construction and inverse parametrization") {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Pentagram p = random_pentagram(rng);
    p.validate();
    const Pentagram q = make_pentagram(pentagram_parameters(p));
    for (int i = 0; i < 4; ++i) CHECK((p[i] - q[i]).norm() < 1e-10);
    CHECK(std::abs(std::abs(p[4].dot(q[4])) - 1.0) < 1e-10);
  }
  CHECK_THROWS_AS((void)make_pentagram({0.3, 0.2, 0.1, kPi / 2, kPi / 2}), ValidationError);
  Pentagram bad = regular_pentagram();
  bad.vectors[1] = bad.vectors[0];
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("spectral laws on random pentagrams") {
  Rng rng(62);
  for (int trial = 0; trial < 300; ++trial) {
    const Pentagram p = random_pentagram(rng);
    const PentagramReport r = pentagram_operator(p);
    CHECK(std::abs(r.operator_A.trace() - 5.0) < 1e-9);
    if (!has_parallel_pair(p)) {
      CHECK(r.spectrum[0] > 2.0);
      CHECK(r.spectrum[1] < 2.0);
      CHECK(r.spectrum[2] > 1.0);
    }
  }
}

TEST_CASE("degenerate pentagrams have spectrum {2, 2, 1}") {
  Rng rng(63);
  for (int trial = 0; trial < 50; ++trial) {
    const Pentagram p =
        degenerate_pentagram(random_uniform(0, kPi, rng), random_uniform(0, 2 * kPi, rng),
                             random_uniform(0, 2 * kPi, rng), random_uniform(0.1, 3.0, rng));
    CHECK(has_parallel_pair(p));
    const Vec3 s = pentagram_operator(p).spectrum;
    CHECK(std::abs(s[0] - 2.0) < 1e-9);
    CHECK(std::abs(s[1] - 2.0) < 1e-9);
    CHECK(std::abs(s[2] - 1.0) < 1e-9);
    CHECK(std::abs(max_bell_value(0.3, p) - 2.0) < 1e-9);
  }
}

TEST_CASE("det(A - 1) is twice the cyclic product of skip-one overlaps") {
  Rng rng(64);
  for (int trial = 0; trial < 200; ++trial) {
    const Pentagram p = random_pentagram(rng);
    const Mat3 a = pentagram_operator(p).operator_A;
    double prod = 1.0;
    for (int i = 0; i < 5; ++i) prod *= p[i].dot(p[i + 2]);
    const double lhs = (a - Mat3::Identity()).determinant();
    CHECK(std::abs(lhs - 2.0 * prod) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("phi = pi/4 bound and alignment") {
  Rng rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const Pentagram p = random_pentagram(rng);
    const Vec3 s = pentagram_operator(p).spectrum;
    CHECK(max_bell_value(kPi / 4, p) == doctest::Approx((5.0 - s[2]) / 2.0));
    CHECK(max_bell_value(kPi / 4, p) <= 2.0 + 1e-12);

    const CVec3 v = std::exp(kI * random_uniform(0, 6, rng)) *
                    CVec3::NullaryExpr([&] { return cplx(random_uniform(-1, 1, rng),
                                                         random_uniform(-1, 1, rng)); });
    const CVec3 psi = v / v.norm();
    const Spin1Canonical c = spin1_canonical(psi);
    const double bound = max_bell_value(c.phi, p);
    CHECK(bell_value(psi, p) <= bound + 1e-9);
    CHECK(std::abs(bell_value(psi, align_pentagram(p, c.m, c.n)) - bound) < 1e-9);
  }
}

TEST_CASE("coherent states never violate") {
  Rng rng(66);
  for (int s = 0; s < 50; ++s) {
    const CVec3 psi = random_coherent(rng);
    for (int k = 0; k < 50; ++k) CHECK(bell_value(psi, random_pentagram(rng)) <= 2.0 + 1e-9);
    const ViolationSearch r = search_violation(psi);
    CHECK_FALSE(r.pentagram.has_value());
    CHECK(r.best_value <= 2.0 + 1e-9);
  }
}

TEST_CASE("violation search") {
  const ViolationSearch zero = search_violation(canonical(0.0));
  REQUIRE(zero.pentagram.has_value());
  CHECK(zero.best_value >= std::sqrt(5.0) - 1e-6);

  const ViolationSearch eighth = search_violation(canonical(kPi / 8));
  REQUIRE(eighth.pentagram.has_value());
  CHECK(eighth.best_value > 2.0);
  eighth.pentagram->validate();

  for (double phi : {0.5, 0.7, 0.76}) {
    const ViolationSearch r = search_violation(canonical(phi));
    CHECK(r.pentagram.has_value());
  }

  SearchBudget tiny;
  tiny.max_evaluations = 3;
  const ViolationSearch cut = search_violation(canonical(0.3), tiny);
  CHECK(cut.budget_exhausted);
  CHECK(cut.evaluations <= 3);
}

TEST_CASE("squares identity") {
  Rng rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const Pentagram p = random_pentagram(rng);
    const CVec3 v = CVec3::NullaryExpr(
        [&] { return cplx(random_uniform(-1, 1, rng), random_uniform(-1, 1, rng)); });
    CHECK(std::abs(jsquare_form(v, p) + bell_value(v, p) - 5.0) < 1e-10);
  }
}

TEST_CASE("CHSH") {
  const double v = chsh_value(singlet_state(), planar_direction(0), planar_direction(90),
                              planar_direction(45), planar_direction(135));
  CHECK(std::abs(v - (2.0 - 2.0 * std::sqrt(2.0))) < 1e-9);

  Rng rng(68);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<CVector> f{random_unit_vector(2, rng), random_unit_vector(2, rng)};
    const PureState prod = product_state(f);
    const double c = chsh_value(prod, random_direction(rng), random_direction(rng),
                                random_direction(rng), random_direction(rng));
    CHECK(c >= -1e-9);
    const Vec3 d = random_direction(rng);
    const PureState any = random_state({2, 2}, rng);
    CHECK(chsh_value(any, d, d, d, d) >= -1e-12);
  }
  CHECK_THROWS_AS((void)chsh_value(singlet_state(), Vec3(1, 1, 0), planar_direction(0),
                                   planar_direction(0), planar_direction(0)),
                  ValidationError);
}
