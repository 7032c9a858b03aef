// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "nctk/algebra.hpp"

using namespace nctk;
using namespace nctk::testing;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("self-adjoint bases") {
  const auto c = make_component(ComponentKind::C, 1);
  REQUIRE(c.sa_dim() == 1);
  CHECK(c.sa_basis[0] == ComplexMatrix{{1.0}});
  CHECK(c.real_dim() == 2);

  const auto m2 = make_component(ComponentKind::Mn, 2);
  REQUIRE(m2.sa_dim() == 4);
  CHECK(m2.sa_basis[0] == ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
  CHECK(m2.sa_basis[1] == ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}});
  CHECK(m2.sa_basis[2] == ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(m2.sa_basis[3] == ComplexMatrix{{0.0, -I}, {I, 0.0}});
  CHECK(m2.real_dim() == 8);

  const auto h = make_component(ComponentKind::H, 2);
  REQUIRE(h.sa_dim() == 1);
  CHECK(h.sa_basis[0] == ComplexMatrix::identity(2));
  CHECK(h.real_dim() == 4);

  // Real bases are Frobenius-orthogonal.
  for (const auto& comp : {c, m2, h, make_component(ComponentKind::Mn, 3)}) {
    for (std::size_t i = 0; i < comp.real_dim(); ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK(std::abs(real_inner(comp.real_basis[i], comp.real_basis[j])) < 1e-15);
    }
  }
  CHECK(make_component(ComponentKind::Mn, 3).sa_dim() == 9);
  CHECK_THROWS(FiniteAlgebra({make_component(ComponentKind::C, 1), make_component(ComponentKind::C, 1)}));
  CHECK_THROWS(make_component(ComponentKind::H, 3));
  CHECK_THROWS(parse_component_kind("Q"));
  CHECK(parse_component_kind("Mn") == ComponentKind::Mn);
}

TEST_CASE("real coordinates round-trip") {
  std::mt19937_64 rng(10);
  const auto m3 = make_component(ComponentKind::Mn, 3);
  const ComplexMatrix x = random_matrix(rng, 3, 3);
  CHECK((from_real_coordinates(m3, real_coordinates(m3, x)) - x).max_abs() < 1e-14);
  const auto h = make_component(ComponentKind::H, 2);
  const ComplexMatrix q{{Complex(0.3, 0.4), Complex(0.1, -0.7)}, {Complex(-0.1, -0.7), Complex(0.3, -0.4)}};
  CHECK((from_real_coordinates(h, real_coordinates(h, q)) - q).max_abs() < 1e-14);
  // A matrix outside H is rejected.
  CHECK_THROWS(real_coordinates(h, ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}));
}

TEST_CASE("representation validation") {
  FiniteAlgebra alg({make_component(ComponentKind::C, 1, "a"), make_component(ComponentKind::C, 1, "b")});
  Representation ok(alg, 2, {{ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}}, {ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}}});
  CHECK((ok.unit_image() - ComplexMatrix::identity(2)).max_abs() == 0.0);
  // Not unital.
  CHECK_THROWS(Representation(alg, 2, {{ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}}, {ComplexMatrix::zeros(2, 2)}}));
  // Overlapping images break multiplicativity across components.
  CHECK_THROWS(Representation(alg, 2, {{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}}));
  // Non-hermitian image of a self-adjoint element.
  FiniteAlgebra c1({make_component(ComponentKind::C, 1)});
  CHECK_THROWS(Representation(c1, 1, {{ComplexMatrix{{I}}}}));
  // H from sa images alone is refused.
  FiniteAlgebra h({make_component(ComponentKind::H, 2)});
  CHECK_THROWS(Representation(h, 2, {{ComplexMatrix::identity(2)}}));
  // H with its full real basis is accepted.
  CHECK_NOTHROW(Representation(h, 2, {h.component(0).real_basis}));
  // Real-linear C: 1 -> I, i -> -iI on the second copy (conjugate action).
  FiniteAlgebra cc({make_component(ComponentKind::C, 1)});
  CHECK_NOTHROW(Representation(cc, 1, {{ComplexMatrix{{1.0}}, ComplexMatrix{{-I}}}}));
}

TEST_CASE("state_eval") {
  FiniteAlgebra alg({make_component(ComponentKind::Mn, 2, "M2"), make_component(ComponentKind::C, 1, "C")});
  const PureState e1 = make_state(alg, 0, {1.0, 0.0});
  CHECK(state_eval(e1, 0, ComplexMatrix{{5.0, 0.0}, {0.0, 7.0}}) == doctest::Approx(5.0));
  const PureState c = make_state(alg, 1, {1.0});
  CHECK(state_eval(c, 1, ComplexMatrix{{3.0}}) == doctest::Approx(3.0));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(state_eval(make_state(alg, 0, {s, s}), 0, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_state(alg, 0, {1.0, 1.0}), DomainError);
  CHECK_THROWS(state_eval(c, 0, ComplexMatrix::identity(2)));
}

TEST_CASE("hopf_project") {
  const auto n = hopf_project(CVector{1.0, 0.0});
  CHECK(n == std::array<double, 3>{0.0, 0.0, 1.0});
  const auto s = hopf_project(CVector{0.0, 1.0});
  CHECK(s[2] == doctest::Approx(-1.0));
  const double r = 1.0 / std::sqrt(2.0);
  const auto x = hopf_project(CVector{r, r});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(0.0));
  CHECK(x[2] == doctest::Approx(0.0));
}

TEST_CASE("state_functional_coords") {
  FiniteAlgebra cc({make_component(ComponentKind::C, 1, "c1"), make_component(ComponentKind::C, 1, "c2")});
  CHECK(state_functional_coords(cc, make_state(cc, 1, {1.0})) == RVector{0.0, 1.0});

  FiniteAlgebra alg({make_component(ComponentKind::Mn, 2), make_component(ComponentKind::C, 1)});
  const RVector e1 = state_functional_coords(alg, make_state(alg, 0, {1.0, 0.0}));
  CHECK(e1 == RVector{1.0, 0.0, 0.0, 0.0, 0.0});

  std::mt19937_64 rng(11);
  const CVector xi = random_unit_vector(rng, 2);
  CVector rotated = xi;
  for (auto& z : rotated) z *= std::polar(1.0, 0.77);
  const RVector a = state_functional_coords(alg, make_state(alg, 0, xi));
  const RVector b = state_functional_coords(alg, make_state(alg, 0, rotated));
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-15);
  CHECK(same_state(make_state(alg, 0, xi), make_state(alg, 0, rotated)));
}

TEST_CASE("algebra operations") {
  FiniteAlgebra alg({make_component(ComponentKind::H, 2, "H"), make_component(ComponentKind::Mn, 2, "M")});
  CHECK(alg.real_dim() == 12);
  CHECK(alg.sa_dim() == 5);
  CHECK(alg.index_of("M") == 1);
  CHECK_THROWS(alg.index_of("X"));
  std::mt19937_64 rng(12);
  RVector coords(alg.real_dim());
  std::normal_distribution<double> g;
  for (auto& x : coords) x = g(rng);
  const AlgebraElement x = alg.element(coords);
  const RVector back = alg.coordinates(x);
  for (std::size_t i = 0; i < coords.size(); ++i) CHECK(std::abs(back[i] - coords[i]) < 1e-14);
  const AlgebraElement y = alg.multiply(x, alg.unit());
  CHECK((y[0] - x[0]).max_abs() == 0.0);
  CHECK((alg.adjoint(x)[1] - x[1].adjoint()).max_abs() == 0.0);
}
