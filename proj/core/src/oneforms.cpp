// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "nctk/oneforms.hpp"

#include <cmath>

namespace nctk {

namespace {

ComplexMatrix hermitian_part(const ComplexMatrix& x) { return 0.5 * (x + x.adjoint()); }

// Removes the components of x along an orthonormal basis (two passes).
ComplexMatrix project_out(const std::vector<ComplexMatrix>& basis, ComplexMatrix x) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : basis) x -= real_inner(e, x) * e;
  }
  return x;
}

}  // namespace

OneForm one_form(const FiniteSpectralTriple& t, std::vector<OneFormTerm> terms) {
  const std::size_t n = t.hilbert_dim();
  ComplexMatrix m(n, n);
  for (const auto& term : terms) {
    const ComplexMatrix pa = t.rep.apply_coords(term.a);
    const ComplexMatrix pb = t.rep.apply_coords(term.b);
    m += pa * commutator(t.dirac, pb);
  }
  return OneForm{std::move(terms), std::move(m)};
}

std::vector<ComplexMatrix> one_form_basis(const FiniteSpectralTriple& t) {
  std::vector<ComplexMatrix> basis;
  const std::size_t r = t.algebra.real_dim();
  std::vector<ComplexMatrix> db;
  for (std::size_t b = 0; b < r; ++b) db.push_back(commutator(t.dirac, t.rep.real_image(b)));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      if (db[b].max_abs() == 0.0) continue;
      const ComplexMatrix s = hermitian_part(t.rep.real_image(a) * db[b]);
      const double n0 = s.frobenius_norm();
      if (n0 == 0.0) continue;
      ComplexMatrix w = project_out(basis, s);
      const double nw = w.frobenius_norm();
      if (nw <= 1e-10 * std::max(1.0, n0)) continue;
      basis.push_back((1.0 / nw) * w);
    }
  }
  return basis;
}

double span_residual(const std::vector<ComplexMatrix>& orthonormal_basis, const ComplexMatrix& x) {
  return project_out(orthonormal_basis, x).frobenius_norm();
}

GaugePotential::GaugePotential(OneForm form) : form_(std::move(form)) {
  const double defect = (form_.matrix - form_.matrix.adjoint()).frobenius_norm();
  if (defect > 1e-10 * std::max(1.0, form_.matrix.frobenius_norm())) {
    throw DomainError("gauge potential is not self-adjoint (defect " + std::to_string(defect) + ")");
  }
  form_.matrix = hermitian_part(form_.matrix);
}

GaugePotential gauge_potential_from_matrix(const FiniteSpectralTriple& t, const ComplexMatrix& x) {
  if (x.rows() != t.hilbert_dim() || x.cols() != t.hilbert_dim()) throw ShapeError("gauge potential has the wrong size");
  GaugePotential a(OneForm{{}, x});
  const double miss = span_residual(one_form_basis(t), a.matrix());
  if (miss > 1e-8 * std::max(1.0, x.frobenius_norm())) {
    throw DomainError("matrix is not a one-form of this triple (distance " + std::to_string(miss) + ")");
  }
  return a;
}

ComplexMatrix covariant_dirac(const FiniteSpectralTriple& t, const GaugePotential& a) {
  ComplexMatrix d = t.dirac + a.matrix();
  if (t.real_structure) d += t.j_conjugate(a.matrix());
  return hermitian_part(d);
}

GaugePotential gauge_transform(const FiniteSpectralTriple& t, const GaugePotential& a, const AlgebraElement& u) {
  const ComplexMatrix pu = t.rep.apply(t.algebra, u);
  if (!is_unitary(pu, 1e-10)) throw DomainError("gauge transformation: pi(u) is not unitary");
  const ComplexMatrix pus = pu.adjoint();
  ComplexMatrix m = pu * a.matrix() * pus + pu * commutator(t.dirac, pus);

  std::vector<OneFormTerm> terms;
  if (!a.oneform().terms.empty()) {
    const AlgebraElement us = t.algebra.adjoint(u);
    // u aᵢ[D,bᵢ]u* = u aᵢ[D, bᵢu*] − u aᵢbᵢ[D, u*]
    for (const auto& term : a.oneform().terms) {
      const AlgebraElement ua = t.algebra.multiply(u, t.algebra.element(term.a));
      const AlgebraElement b = t.algebra.element(term.b);
      terms.push_back({t.algebra.coordinates(ua), t.algebra.coordinates(t.algebra.multiply(b, us))});
      RVector neg = t.algebra.coordinates(t.algebra.multiply(ua, b));
      for (auto& c : neg) c = -c;
      terms.push_back({std::move(neg), t.algebra.coordinates(us)});
    }
    terms.push_back({t.algebra.coordinates(u), t.algebra.coordinates(us)});
  }
  return GaugePotential(OneForm{std::move(terms), std::move(m)});
}

FiniteSpectralTriple scalar_fluctuation(const FiniteSpectralTriple& t, const GaugePotential& h, bool mirror) {
  FiniteSpectralTriple out = t;
  ComplexMatrix d = t.dirac + h.matrix();
  if (mirror && t.real_structure) d += t.j_conjugate(h.matrix());
  out.dirac = hermitian_part(d);
  out.validate();
  return out;
}

}  // namespace nctk
