// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "nctk/distance.hpp"

using namespace nctk;
using namespace nctk::testing;

namespace {

const Complex I{0.0, 1.0};

FiniteSpectralTriple cc_two_point(Complex m) {
  FiniteAlgebra alg({make_component(ComponentKind::C, 1, "a"), make_component(ComponentKind::C, 1, "c")});
  Representation rep(alg, 2, {{unit_matrix(2, 0, 0)}, {unit_matrix(2, 1, 1)}});
  return make_triple(std::move(alg), std::move(rep), ComplexMatrix{{0.0, m}, {std::conj(m), 0.0}}, std::nullopt,
                     std::nullopt, 1);
}

// C + M2 acting block-diagonally on C^3 with a generic D (reference values
// from a semidefinite program, see tests/oracles/oracles.py).
FiniteSpectralTriple c_plus_m2() {
  FiniteAlgebra alg({make_component(ComponentKind::C, 1, "C"), make_component(ComponentKind::Mn, 2, "M2")});
  std::vector<std::vector<ComplexMatrix>> images(2);
  images[0].push_back(unit_matrix(3, 0, 0));
  for (const auto& b : alg.component(1).sa_basis) images[1].push_back(embed_block(b, 3, 1));
  Representation rep(alg, 3, std::move(images));
  const ComplexMatrix d{{-0.802, {-0.452, 0.616}, {-0.401, 0.249}},
                        {{-0.452, -0.616}, 1.136, {-0.338, 0.143}},
                        {{-0.401, -0.249}, {-0.338, -0.143}, 0.749}};
  return make_triple(std::move(alg), std::move(rep), d, std::nullopt, std::nullopt, 1);
}

FiniteSpectralTriple scaled(FiniteSpectralTriple t, double c) {
  t.dirac *= c;
  return t;
}

CVector equatorial(double theta) {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s * std::polar(1.0, theta)};
}

}  // namespace

TEST_CASE("solver options") {
  SolverOptions o;
  CHECK_NOTHROW(o.validate());
  o.restarts = 0;
  CHECK_THROWS(o.validate());
  o = {};
  o.tolerance = -1.0;
  CHECK_THROWS(o.validate());
}

TEST_CASE("commutator_kernel") {
  const auto zero = m2_triple(0.0, 0.0);
  CHECK(commutator_kernel(zero).size() == zero.algebra.sa_dim());

  const auto k = commutator_kernel(cc_two_point(1.0));
  REQUIRE(k.size() == 1);
  CHECK(std::abs(std::abs(k[0][0]) - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(k[0][0] - k[0][1]) < 1e-12);

  const auto km = commutator_kernel(m2_triple(0.3, 1.7));
  REQUIRE(km.size() == 2);
  // Spanned by the diagonal elements: no weight on the off-diagonal basis.
  for (const auto& v : km) CHECK(std::hypot(v[2], v[3]) < 1e-12);
}

TEST_CASE("is_infinite") {
  const auto zero = m2_triple(0.0, 0.0);
  FiniteAlgebra const& a0 = zero.algebra;
  CHECK(is_infinite(zero, make_state(a0, 0, {1.0, 0.0}), make_state(a0, 0, equatorial(0.0))));

  const auto t = m2_triple(0.0, 1.0);
  const auto& a = t.algebra;
  const double c = std::cos(0.4), s = std::sin(0.4);
  CHECK(is_infinite(t, make_state(a, 0, {c, s}), make_state(a, 0, {s, c})));
  CHECK_FALSE(is_infinite(t, make_state(a, 0, equatorial(0.1)), make_state(a, 0, equatorial(2.0))));
  CHECK_FALSE(is_infinite(t, make_state(a, 0, {c, s}), make_state(a, 0, {c, s * std::polar(1.0, 1.3)})));
}

TEST_CASE("spectral_distance basics") {
  const auto t = m2_triple(0.0, 1.0);
  const auto& a = t.algebra;
  const PureState x = make_state(a, 0, equatorial(0.7));
  CVector rot = equatorial(0.7);
  for (auto& z : rot) z *= I;
  CHECK(spectral_distance(t, x, make_state(a, 0, rot)).value == 0.0);

  const DistanceResult inf = spectral_distance(t, make_state(a, 0, {1.0, 0.0}), make_state(a, 0, {0.0, 1.0}));
  CHECK(inf.is_infinite());

  // C + C: d = 1/|m|.
  for (const Complex m : {Complex(1.0), Complex(0.6, -0.8), Complex(3.0, 4.0)}) {
    const auto cc = cc_two_point(m);
    const DistanceResult r = spectral_distance(cc, make_state(cc.algebra, 0, {1.0}), make_state(cc.algebra, 1, {1.0}));
    CHECK(r.value == doctest::Approx(1.0 / std::abs(m)).epsilon(1e-10));
  }
}

TEST_CASE("M2 equatorial pair") {
  // xi = (1,1)/sqrt2, zeta = (1,i)/sqrt2 with D = diag(0,1). The exact value
  // (an SDP confirms it) is sqrt2; the closed form below is the printed
  // formula and evaluates to 2 sqrt2.
  const auto t = m2_triple(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  const CVector xi{s, s}, zeta{s, I * s};
  const DistanceResult r = spectral_distance(t, make_state(t.algebra, 0, xi), make_state(t.algebra, 0, zeta));
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.4142135622075267).epsilon(1e-6));
  CHECK(r.achieved_constraint == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(closed_form_m2(0.0, 1.0, xi, zeta) == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("closed_form_m2") {
  const CVector xi = equatorial(0.3);
  CHECK(closed_form_m2(0.0, 1.0, xi, xi) == 0.0);
  CHECK(std::isinf(closed_form_m2(0.0, 1.0, CVector{1.0, 0.0}, CVector{0.0, 1.0})));
  // Antipodal equatorial points: chord 2, closed form 4/|D1 - D2|.
  CHECK(closed_form_m2(0.0, 2.0, equatorial(0.3), equatorial(0.3 + 3.141592653589793)) == doctest::Approx(2.0));
  CHECK(std::isinf(closed_form_m2(1.0, 1.0, equatorial(0.0), equatorial(1.0))));
}

TEST_CASE("closed_form_two_point") {
  const CVector m{3.0, 4.0};
  const ClosedForm c = closed_form_two_point(m, TwoPointC{}, CVector{0.6, 0.8});
  CHECK(c.covered);
  CHECK(c.value == doctest::Approx(0.2));
  const ClosedForm same = closed_form_two_point(m, CVector{0.6, 0.8}, CVector{0.6, 0.8});
  CHECK(same.covered);
  CHECK(same.value == 0.0);
  const double s = 1.0 / std::sqrt(2.0);
  const ClosedForm nc = closed_form_two_point(CVector{1.0, 0.0}, CVector{1.0, 0.0}, CVector{s, s});
  CHECK_FALSE(nc.covered);
  CHECK_FALSE(nc.note.empty());
  const ClosedForm inf = closed_form_two_point(CVector{1.0, 0.0}, TwoPointC{}, CVector{0.0, 1.0});
  CHECK(inf.covered);
  CHECK(std::isinf(inf.value));
}

TEST_CASE("two-point distances in both realizations") {
  std::mt19937_64 rng(40);
  for (std::size_t n : {1u, 2u}) {
    CVector m = random_unit_vector(rng, n);
    for (auto& z : m) z *= 1.7;
    const auto tv = two_point_vector(m);
    const auto tm = two_point_matrix(m);
    CVector mhat = m;
    for (auto& z : mhat) z /= norm(m);
    // omega_c vs omega_mhat.
    const double ref = 1.0 / norm(m);
    const double dv = spectral_distance(tv, make_state(tv.algebra, 1, {1.0}), make_state(tv.algebra, 0, mhat)).value;
    const double dm = spectral_distance(tm, make_state(tm.algebra, 1, {1.0}), make_state(tm.algebra, 0, mhat)).value;
    CHECK(dv == doctest::Approx(ref).epsilon(1e-6));
    CHECK(dm == doctest::Approx(ref).epsilon(1e-6));
    if (n == 2) {
      // Tail-phase pair: zeta's m-perp part is a phase times xi's.
      const CVector perp{-std::conj(mhat[1]), std::conj(mhat[0])};
      const double a = 0.6, b = 0.8;
      CVector xi(2), zeta(2);
      for (std::size_t i = 0; i < 2; ++i) {
        xi[i] = a * mhat[i] + b * perp[i];
        zeta[i] = std::polar(1.0, 0.9) * b * perp[i] + Complex(-0.6, 0.0) * mhat[i];
      }
      const ClosedForm cf = closed_form_two_point(m, xi, zeta);
      REQUIRE(cf.covered);
      const double sv = spectral_distance(tv, make_state(tv.algebra, 0, xi), make_state(tv.algebra, 0, zeta)).value;
      const double sm = spectral_distance(tm, make_state(tm.algebra, 0, xi), make_state(tm.algebra, 0, zeta)).value;
      CHECK(sv == doctest::Approx(cf.value).epsilon(1e-6));
      CHECK(sm == doctest::Approx(sv).epsilon(1e-6));
    }
  }
}

TEST_CASE("generic triple against SDP reference") {
  const auto t = c_plus_m2();
  const auto& a = t.algebra;
  const PureState c = make_state(a, 0, {1.0});
  const PureState xi = make_state(a, 1, {0.6, Complex(0.0, 0.8)});
  const double r3 = 1.0 / std::sqrt(3.0);
  const PureState zeta = make_state(a, 1, {r3, Complex(r3, -r3)});
  const DistanceResult d1 = spectral_distance(t, c, xi);
  const DistanceResult d2 = spectral_distance(t, xi, zeta);
  CHECK(d1.value == doctest::Approx(2.1727939).epsilon(1e-6));
  CHECK(d2.value == doctest::Approx(1.7516430).epsilon(1e-6));
  REQUIRE(d1.maximizer);
  // The reported value is realised by the reported maximizer.
  const ComplexMatrix pa = t.rep.apply_sa(a, *d1.maximizer);
  CHECK(operator_norm(commutator(t.dirac, pa)) == doctest::Approx(d1.achieved_constraint).epsilon(1e-12));
}

TEST_CASE("scaling, determinism and threads") {
  const auto t = c_plus_m2();
  const auto& a = t.algebra;
  const PureState x = make_state(a, 1, {0.6, Complex(0.0, 0.8)});
  const PureState c = make_state(a, 0, {1.0});
  const double base = spectral_distance(t, c, x).value;
  for (double k : {0.01, 3.0, 250.0}) {
    CHECK(spectral_distance(scaled(t, k), c, x).value * k == doctest::Approx(base).epsilon(1e-6));
  }
  SolverOptions o;
  o.seed = 7;
  const DistanceResult r1 = spectral_distance(t, c, x, o);
  const DistanceResult r2 = spectral_distance(t, c, x, o);
  CHECK(r1.value == r2.value);
  CHECK(r1.iterations == r2.iterations);
  o.threads = 4;
  const DistanceResult r3 = spectral_distance(t, c, x, o);
  CHECK(r3.value == r1.value);
}

TEST_CASE("triangle inequality") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 10; ++k) {
    FiniteAlgebra alg({make_component(ComponentKind::Mn, 2, "M2"), make_component(ComponentKind::C, 1, "C")});
    std::vector<std::vector<ComplexMatrix>> images(2);
    for (const auto& b : alg.component(0).sa_basis) images[0].push_back(embed_block(b, 3, 0));
    images[1].push_back(unit_matrix(3, 2, 2));
    Representation rep(alg, 3, std::move(images));
    const auto t = make_triple(alg, rep, random_hermitian(rng, 3), std::nullopt, std::nullopt, 1);
    const PureState s1 = make_state(alg, 0, random_unit_vector(rng, 2));
    const PureState s2 = make_state(alg, 0, random_unit_vector(rng, 2));
    const PureState s3 = make_state(alg, 1, {1.0});
    const double d12 = spectral_distance(t, s1, s2).value;
    const double d23 = spectral_distance(t, s2, s3).value;
    const double d13 = spectral_distance(t, s1, s3).value;
    CHECK(d13 <= d12 + d23 + 1e-6);
    CHECK(d12 <= d13 + d23 + 1e-6);
    CHECK(d23 <= d12 + d13 + 1e-6);
  }
}
