// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

// Shared builders and random generators for the test binaries.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "nctk/algebra.hpp"
#include "nctk/linalg.hpp"
#include "nctk/triple.hpp"

namespace nctk::testing {

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  ComplexMatrix m(r, c);
  for (auto& z : m.entries()) z = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  const ComplexMatrix a = random_matrix(rng, n, n);
  return 0.5 * (a + a.adjoint());
}

// exp(iH) for a random hermitian H.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  const HermitianEigen e = hermitian_eig(random_hermitian(rng, n));
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::polar(1.0, e.values[i]);
  return e.vectors * d * e.vectors.adjoint();
}

inline CVector random_unit_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (auto& z : v) z = {g(rng), g(rng)};
  const double s = norm(v);
  for (auto& z : v) z /= s;
  return v;
}

inline ComplexMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix e(n, n);
  e(i, j) = 1.0;
  return e;
}

// Embeds an n x n block at (off, off) of an N x N zero matrix.
inline ComplexMatrix embed_block(const ComplexMatrix& b, std::size_t big, std::size_t off) {
  ComplexMatrix out(big, big);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
  }
  return out;
}

// Delta = [[0, m], [m*, 0]] on C^{n+1}.
inline ComplexMatrix two_point_delta(const CVector& m) {
  const std::size_t k = m.size() + 1;
  ComplexMatrix d(k, k);
  for (std::size_t i = 0; i < m.size(); ++i) {
    d(i, k - 1) = m[i];
    d(k - 1, i) = std::conj(m[i]);
  }
  return d;
}

// M_n(C) + C acting block-diagonally on C^{n+1}, D = Delta, odd, no J.
inline FiniteSpectralTriple two_point_vector(const CVector& m) {
  const std::size_t n = m.size();
  FiniteAlgebra alg({make_component(ComponentKind::Mn, n, "M"), make_component(ComponentKind::C, 1, "C")});
  std::vector<std::vector<ComplexMatrix>> images(2);
  for (const auto& b : alg.component(0).sa_basis) images[0].push_back(embed_block(b, n + 1, 0));
  images[1].push_back(unit_matrix(n + 1, n, n));
  Representation rep(alg, n + 1, std::move(images));
  return make_triple(std::move(alg), std::move(rep), two_point_delta(m), std::nullopt, std::nullopt, 1);
}

// Row-major vectorization of M_k(C): vec(A psi B) = (A kron B^T) vec(psi).
inline ComplexMatrix swap_matrix(std::size_t k) {
  ComplexMatrix s(k * k, k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) s(i * k + j, j * k + i) = 1.0;
  }
  return s;
}

// The same algebra acting by left multiplication on M_{n+1}(C), with
// D psi = Delta psi + psi Delta, J psi = psi*, Gamma psi = K psi K.
inline FiniteSpectralTriple two_point_matrix(const CVector& m) {
  const std::size_t n = m.size();
  const std::size_t k = n + 1;
  const ComplexMatrix id = ComplexMatrix::identity(k);
  FiniteAlgebra alg({make_component(ComponentKind::Mn, n, "M"), make_component(ComponentKind::C, 1, "C")});
  std::vector<std::vector<ComplexMatrix>> images(2);
  for (const auto& b : alg.component(0).sa_basis) images[0].push_back(kron(embed_block(b, k, 0), id));
  images[1].push_back(kron(unit_matrix(k, n, n), id));
  Representation rep(alg, k * k, std::move(images));
  const ComplexMatrix delta = two_point_delta(m);
  std::vector<double> kd(k, 1.0);
  kd[n] = -1.0;
  const ComplexMatrix kk = ComplexMatrix::diagonal(std::span<const double>(kd));
  return make_triple(std::move(alg), std::move(rep), kron(delta, id) + kron(id, delta.transpose()), kron(kk, kk),
                     RealStructure{swap_matrix(k)}, 0);
}

// M_2(C) on C^2 with D = diag(d1, d2), odd, no J.
inline FiniteSpectralTriple m2_triple(double d1, double d2) {
  FiniteAlgebra alg({make_component(ComponentKind::Mn, 2, "M2")});
  Representation rep(alg, 2, {alg.component(0).sa_basis});
  return make_triple(std::move(alg), std::move(rep), ComplexMatrix{{d1, 0.0}, {0.0, d2}}, std::nullopt, std::nullopt, 1);
}

// Sorted eigenvalues of a hermitian matrix.
inline RVector spectrum(const ComplexMatrix& h) { return hermitian_eig(h).values; }

inline double max_abs_diff(const RVector& a, const RVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace nctk::testing
