// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

/// One-forms π(a)[D, π(b)], gauge potentials, the covariant Dirac operator
/// D + A + JAJ⁻¹, gauge transformations and scalar fluctuations.
#pragma once

#include <vector>

#include "nctk/algebra.hpp"
#include "nctk/triple.hpp"

namespace nctk {

/// Global real-basis coordinates of a and b.
struct OneFormTerm {
  RVector a;
  RVector b;
};

struct OneForm {
  std::vector<OneFormTerm> terms;
  ComplexMatrix matrix;
};

/// Σ π(aⁱ)[D, π(bᵢ)].
OneForm one_form(const FiniteSpectralTriple& t, std::vector<OneFormTerm> terms);

/// Frobenius-orthonormal real basis of the self-adjoint part of
/// span{π(e_α)[D, π(e_β)]}. Empty when D = 0.
std::vector<ComplexMatrix> one_form_basis(const FiniteSpectralTriple& t);

/// Frobenius distance from x to the real span of an orthonormal basis.
double span_residual(const std::vector<ComplexMatrix>& orthonormal_basis, const ComplexMatrix& x);

class GaugePotential {
 public:
  /// Throws DomainError unless the one-form is self-adjoint to 1e-10.
  explicit GaugePotential(OneForm form);
  const OneForm& oneform() const noexcept { return form_; }
  const ComplexMatrix& matrix() const noexcept { return form_.matrix; }

 private:
  OneForm form_;
};

/// Gauge potential from a raw self-adjoint matrix, accepted if it lies in
/// span(one_form_basis(t)) within 1e-8 (relative). Carries no terms.
GaugePotential gauge_potential_from_matrix(const FiniteSpectralTriple& t, const ComplexMatrix& x);

/// D + A + J A J⁻¹, or D + A without a real structure.
ComplexMatrix covariant_dirac(const FiniteSpectralTriple& t, const GaugePotential& a);

/// u A u* + u[D, u*] for a unitary algebra element u.
GaugePotential gauge_transform(const FiniteSpectralTriple& t, const GaugePotential& a, const AlgebraElement& u);

/// T with Dirac operator D + H (+ J H J⁻¹ when mirror is set and T has a
/// real structure).
FiniteSpectralTriple scalar_fluctuation(const FiniteSpectralTriple& t, const GaugePotential& h, bool mirror = true);

}  // namespace nctk
