// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

/// Finite spectral triples and their axiom checks in spectral dimension 0.
///
/// The real structure J = U ∘ (complex conjugation) is never materialized:
/// J X J⁻¹ is U·conj(X)·U†, and JX − εXJ is represented by the linear
/// operator U·conj(X) − ε·X·U.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nctk/algebra.hpp"
#include "nctk/linalg.hpp"

namespace nctk {

struct RealStructure {
  ComplexMatrix unitary;
};

struct FiniteSpectralTriple {
  FiniteAlgebra algebra;
  Representation rep;
  ComplexMatrix dirac;
  std::optional<ComplexMatrix> grading;  ///< absent: odd triple (Γ = I)
  std::optional<RealStructure> real_structure;
  int kr_dim = 0;  ///< in [0, 8)

  std::size_t hilbert_dim() const noexcept { return rep.hilbert_dim(); }
  bool is_even() const noexcept { return grading.has_value(); }
  /// Γ, or the identity for an odd triple.
  ComplexMatrix gamma() const;
  /// J X J⁻¹; throws DomainError without a real structure.
  ComplexMatrix j_conjugate(const ComplexMatrix& x) const;

  /// Structural invariants: shapes, D self-adjoint, Γ a self-adjoint
  /// involution, U unitary. Throws on violation.
  void validate() const;
};

/// Normalizes kr_dim into [0, 8) and validates.
FiniteSpectralTriple make_triple(FiniteAlgebra algebra, Representation rep, ComplexMatrix dirac,
                                 std::optional<ComplexMatrix> grading,
                                 std::optional<RealStructure> real_structure, int kr_dim);

struct KrSigns {
  int epsilon;
  int epsilon_prime;
  std::optional<int> epsilon_second;  ///< only for even n
};
KrSigns kr_signs(int n);

struct AxiomCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string witness;
  std::vector<double> coefficients;  ///< orientability cycle coefficients
  std::optional<double> value;       ///< e.g. the determinant for Poincaré duality
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

inline constexpr double kStructuralTolerance = 1e-10;
inline constexpr double kLeastSquaresTolerance = 1e-8;

AxiomCheck check_grading(const FiniteSpectralTriple& t);
std::vector<AxiomCheck> check_reality_signs(const FiniteSpectralTriple& t);
AxiomCheck check_zeroth_order(const FiniteSpectralTriple& t);
AxiomCheck check_first_order(const FiniteSpectralTriple& t);
AxiomCheck check_orientability(const FiniteSpectralTriple& t);

/// An algebra element given as a block of a single component.
struct Projector {
  std::size_t component = 0;
  ComplexMatrix matrix;
};

/// Entries Tr(Γ π(pᵢ) J π(pⱼ) J⁻¹), verified within 1e-8 of integers and
/// rounded. Throws DomainError for non-projectors or non-integral pairings.
std::vector<std::vector<long long>> intersection_matrix(const FiniteSpectralTriple& t,
                                                        const std::vector<Projector>& projectors);

/// Passes iff the integer matrix is nonsingular; the determinant is reported
/// in `value`.
AxiomCheck check_poincare(const std::vector<std::vector<long long>>& m);

/// Conditions 1-3 (automatic in finite dimension), grading, reality signs,
/// zeroth- and first-order, orientability, and Poincaré duality when
/// projectors are supplied. Checks needing J are skipped without one.
AxiomReport check_all(const FiniteSpectralTriple& t, const std::vector<Projector>& projectors = {});

/// D = D_E⊗I + Γ_E⊗D_I on H_E⊗H_I. One of the two algebras must be the
/// single component ℂ acting complex-linearly. Γ = Γ_E⊗Γ_I when T_I is even,
/// J = J_E⊗J_I when both are real, KR dimensions add.
FiniteSpectralTriple product_triple(const FiniteSpectralTriple& te, const FiniteSpectralTriple& ti);

/// Worst operator norm among the given matrices. Frobenius norms screen the
/// candidates so only matrices that can be worst are diagonalized.
double max_operator_norm(const std::vector<ComplexMatrix>& ms, std::size_t* worst_index = nullptr);

}  // namespace nctk
