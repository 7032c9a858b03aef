// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "nctk/triple.hpp"

using namespace nctk;
using namespace nctk::testing;

namespace {

const Complex I{0.0, 1.0};

// C acting by scalars on C^n.
FiniteSpectralTriple scalar_c(const ComplexMatrix& d, std::optional<ComplexMatrix> g, std::optional<RealStructure> j,
                              int kr) {
  const std::size_t n = d.rows();
  FiniteAlgebra alg({make_component(ComponentKind::C, 1, "C")});
  Representation rep(alg, n, {{ComplexMatrix::identity(n)}});
  return make_triple(std::move(alg), std::move(rep), d, std::move(g), std::move(j), kr);
}

// M_2(C) acting on C^2 directly.
FiniteSpectralTriple m2_on_c2(const ComplexMatrix& d, std::optional<RealStructure> j, int kr) {
  FiniteAlgebra alg({make_component(ComponentKind::Mn, 2, "M2")});
  Representation rep(alg, 2, {alg.component(0).sa_basis});
  return make_triple(std::move(alg), std::move(rep), d, std::nullopt, std::move(j), kr);
}

const AxiomCheck& find(const AxiomReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("no check named " + name);
}

}  // namespace

TEST_CASE("KR sign table") {
  const int eps[8] = {1, 1, -1, -1, -1, -1, 1, 1};
  const int epsp[8] = {1, -1, 1, 1, 1, -1, 1, 1};
  const int epss[8] = {1, 0, -1, 0, 1, 0, -1, 0};
  for (int n = 0; n < 8; ++n) {
    const KrSigns s = kr_signs(n);
    CHECK(s.epsilon == eps[n]);
    CHECK(s.epsilon_prime == epsp[n]);
    CHECK(s.epsilon_second.has_value() == (n % 2 == 0));
    if (s.epsilon_second) CHECK(*s.epsilon_second == epss[n]);
  }
  CHECK(kr_signs(10).epsilon == kr_signs(2).epsilon);
}

TEST_CASE("structural invariants") {
  CHECK_THROWS(scalar_c(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, std::nullopt, std::nullopt, 1));
  CHECK_THROWS(scalar_c(ComplexMatrix::zeros(2, 2), ComplexMatrix{{1.0, 0.0}, {0.0, 0.5}}, std::nullopt, 0));
  CHECK_THROWS(scalar_c(ComplexMatrix::zeros(2, 2), std::nullopt, RealStructure{ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}}, 0));
  CHECK(scalar_c(ComplexMatrix::zeros(1, 1), std::nullopt, std::nullopt, 9).kr_dim == 1);
}

TEST_CASE("grading") {
  // Two-point triple: every residual vanishes.
  for (const CVector& m : {CVector{1.0}, CVector{Complex(0.3, -1.2), 2.0}, CVector{1.0, I, -0.5}}) {
    const auto t = two_point_matrix(m);
    const AxiomCheck g = check_grading(t);
    CHECK(g.pass);
    CHECK(g.residual == 0.0);
  }
  // Gamma = I with D != 0 on an even triple: anticommutator is 2D.
  const ComplexMatrix d{{0.0, 3.0}, {3.0, 0.0}};
  const auto bad = scalar_c(d, ComplexMatrix::identity(2), std::nullopt, 0);
  const AxiomCheck g = check_grading(bad);
  CHECK_FALSE(g.pass);
  CHECK(g.residual == doctest::Approx(2.0 * operator_norm(d)));
  // D = 0 with any grading.
  CHECK(check_grading(scalar_c(ComplexMatrix::zeros(2, 2), ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}, std::nullopt, 0)).pass);
}

TEST_CASE("reality signs") {
  // Swap-composed conjugation with a real swap: J^2 = +I for n = 0.
  const auto tp = two_point_matrix({1.0, 0.5});
  for (const auto& c : check_reality_signs(tp)) {
    CHECK(c.pass);
    CHECK(c.residual == 0.0);
  }
  CHECK(check_reality_signs(tp).front().name == "J^2 = +I");

  // U = [[0,1],[-1,0]] gives J^2 = U conj(U) = -I: the J^2 entry passes only
  // where epsilon = -1.
  const ComplexMatrix u{{0.0, 1.0}, {-1.0, 0.0}};
  for (int n = 0; n < 8; ++n) {
    const auto t = scalar_c(ComplexMatrix::zeros(2, 2), n % 2 == 0 ? std::optional(ComplexMatrix::identity(2)) : std::nullopt,
                            RealStructure{u}, n);
    const auto checks = check_reality_signs(t);
    const bool expect = n >= 2 && n <= 5;
    CHECK(checks.front().pass == expect);
    // With D = 0 the JD entry holds trivially.
    CHECK(checks[1].residual == 0.0);
  }
  CHECK_THROWS(check_reality_signs(scalar_c(ComplexMatrix::zeros(1, 1), std::nullopt, std::nullopt, 1)));
}

TEST_CASE("zeroth order") {
  // Commutative C + C diagonally on C^2 with J = complex conjugation.
  FiniteAlgebra cc({make_component(ComponentKind::C, 1, "c1"), make_component(ComponentKind::C, 1, "c2")});
  Representation rep(cc, 2, {{unit_matrix(2, 0, 0)}, {unit_matrix(2, 1, 1)}});
  const auto comm = make_triple(cc, rep, ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}, std::nullopt,
                                RealStructure{ComplexMatrix::identity(2)}, 1);
  CHECK(check_zeroth_order(comm).residual == 0.0);

  // M2 on C^2 with J = conjugation fails since M2 is noncommutative.
  const auto nc = m2_on_c2(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}, RealStructure{ComplexMatrix::identity(2)}, 7);
  const AxiomCheck z = check_zeroth_order(nc);
  CHECK_FALSE(z.pass);
  CHECK(z.residual > 0.1);
  CHECK_FALSE(z.witness.empty());

  // M2 on M2 = C^4 by left multiplication with J = involution.
  FiniteAlgebra m2({make_component(ComponentKind::Mn, 2)});
  std::vector<ComplexMatrix> left;
  for (const auto& b : m2.component(0).sa_basis) left.push_back(kron(b, ComplexMatrix::identity(2)));
  Representation lr(m2, 4, {left});
  const auto inv = make_triple(m2, lr, ComplexMatrix::zeros(4, 4), std::nullopt, RealStructure{swap_matrix(2)}, 1);
  CHECK(check_zeroth_order(inv).residual == 0.0);
  CHECK(check_zeroth_order(inv).pass);
}

TEST_CASE("first order") {
  for (const CVector& m : {CVector{1.0}, CVector{Complex(0.2, 0.9), -1.1}}) {
    const AxiomCheck f = check_first_order(two_point_matrix(m));
    CHECK(f.pass);
    CHECK(f.residual == 0.0);
  }
  // D in the algebra's image with J on the same side: fails generically.
  std::mt19937_64 rng(20);
  const auto t = m2_on_c2(random_hermitian(rng, 2), RealStructure{ComplexMatrix::identity(2)}, 1);
  const AxiomCheck f = check_first_order(t);
  CHECK_FALSE(f.pass);
  CHECK(f.residual > 1e-6);
  // D = 0.
  CHECK(check_first_order(m2_on_c2(ComplexMatrix::zeros(2, 2), RealStructure{ComplexMatrix::identity(2)}, 1)).pass);
}

TEST_CASE("orientability") {
  // Gamma psi = K psi K is a one-term cycle.
  const auto tp = two_point_matrix({1.0, 0.0});
  const AxiomCheck o = check_orientability(tp);
  CHECK(o.pass);
  CHECK(o.residual < 1e-12);
  {
    // Reconstruct Gamma from the reported coefficients.
    const std::size_t r = tp.algebra.real_dim();
    ComplexMatrix sum(tp.hilbert_dim(), tp.hilbert_dim());
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        const double c = o.coefficients[a * r + b];
        if (c != 0.0) sum += c * (tp.rep.real_image(a) * tp.j_conjugate(tp.rep.real_image(b)));
      }
    }
    CHECK((sum - *tp.grading).max_abs() < 1e-10);
  }

  // The two-term target K psi + psi K is reachable but is not an involution.
  FiniteSpectralTriple two_term = tp;
  const std::size_t k = 3;
  const ComplexMatrix kk = ComplexMatrix{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, -1.0}};
  two_term.grading = kron(kk, ComplexMatrix::identity(k)) + kron(ComplexMatrix::identity(k), kk);
  CHECK(check_orientability(two_term).pass);
  const AxiomCheck g = check_grading(two_term);
  CHECK_FALSE(g.pass);
  CHECK((*two_term.grading * *two_term.grading - ComplexMatrix::identity(9)).max_abs() > 1.0);

  // Odd case: Gamma = I is pi(1) J pi(1) J^-1.
  CHECK(check_orientability(m2_on_c2(ComplexMatrix::zeros(2, 2), RealStructure{ComplexMatrix::identity(2)}, 1)).pass);

  // Scalars cannot produce diag(1, -1): residual sqrt(2).
  const auto s = scalar_c(ComplexMatrix::zeros(2, 2), ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
                          RealStructure{ComplexMatrix::identity(2)}, 0);
  const AxiomCheck so = check_orientability(s);
  CHECK_FALSE(so.pass);
  CHECK(so.residual == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("intersection matrix and Poincare duality") {
  const auto t = scalar_c(ComplexMatrix::zeros(1, 1), std::nullopt, RealStructure{ComplexMatrix::identity(1)}, 1);
  CHECK(intersection_matrix(t, {{0, ComplexMatrix{{1.0}}}}) == std::vector<std::vector<long long>>{{1}});
  CHECK_THROWS(intersection_matrix(t, {{0, ComplexMatrix{{0.5}}}}));

  const AxiomCheck ok = check_poincare({{6, -6, 6}, {-6, 0, -6}, {6, -6, 0}});
  CHECK(ok.pass);
  REQUIRE(ok.value);
  CHECK(*ok.value == 216.0);
  CHECK_FALSE(check_poincare({{0, 0}, {0, 0}}).pass);
  // Three Dirac-type neutrinos: det 36(6 - 6) = 0.
  CHECK_FALSE(check_poincare({{12, -6, 6}, {-6, 0, -6}, {6, -6, 0}}).pass);
}

TEST_CASE("check_all") {
  const AxiomReport r = check_all(two_point_matrix({0.7, Complex(0.1, 0.4)}));
  CHECK(r.all_pass());
  for (const char* name : {"dimension", "regularity", "finiteness", "grading", "zeroth order", "first order", "orientability"}) {
    CHECK(find(r, name).pass);
  }
  // Without J the J-dependent checks are skipped.
  const AxiomReport nj = check_all(two_point_vector({1.0, 2.0}));
  CHECK(nj.all_pass());
  CHECK_THROWS(find(nj, "zeroth order"));
}

TEST_CASE("product_triple") {
  std::mt19937_64 rng(21);
  const ComplexMatrix sigma3{{1.0, 0.0}, {0.0, -1.0}};
  const auto te = scalar_c(ComplexMatrix::zeros(2, 2), sigma3, std::nullopt, 0);
  const auto ti = two_point_vector({Complex(0.4, 0.3), 1.5});
  const auto p = product_triple(te, ti);
  CHECK(p.hilbert_dim() == 6);
  // D = Gamma_E x D_I: spectrum is spec(D_I) together with its negative.
  RVector expect;
  for (double l : spectrum(ti.dirac)) {
    expect.push_back(l);
    expect.push_back(-l);
  }
  std::sort(expect.begin(), expect.end());
  CHECK(max_abs_diff(spectrum(p.dirac), expect) < 1e-12);

  // D_I = 0: D = D_E x I.
  const ComplexMatrix de{{0.0, 2.0}, {2.0, 0.0}};
  const auto te2 = scalar_c(de, sigma3, std::nullopt, 0);
  FiniteAlgebra m2({make_component(ComponentKind::Mn, 2)});
  Representation r2(m2, 2, {m2.component(0).sa_basis});
  const auto ti2 = make_triple(m2, r2, ComplexMatrix::zeros(2, 2), std::nullopt, std::nullopt, 1);
  const auto p2 = product_triple(te2, ti2);
  CHECK(max_abs_diff(spectrum(p2.dirac), RVector{-2.0, -2.0, 2.0, 2.0}) < 1e-12);
  CHECK_THROWS(product_triple(ti2, te2));
}
