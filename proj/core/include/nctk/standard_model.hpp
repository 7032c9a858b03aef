// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

/// The standard-model internal triple on ℍ ⊕ ℂ ⊕ M₃(ℂ) with N generations
/// (Hilbert space ℂ^{30N}), its Higgs fluctuation, the two-sheet distance,
/// and the Poincaré-duality analysis of sterile-neutrino extensions.
///
/// Basis of each of the particle and antiparticle halves (15N states):
///   [0, 6N)     left quarks   s·3N + g·3 + color   (s = 0 up, 1 down)
///   [6N, 8N)    left leptons  6N + s·N + g         (s = 0 neutrino, 1 electron)
///   [8N, 14N)   right quarks  8N + s·3N + g·3 + color
///   [14N, 15N)  right electrons
/// The antiparticle half is offset by 15N.
#pragma once

#include <string>
#include <vector>

#include "nctk/distance.hpp"
#include "nctk/triple.hpp"

namespace nctk {

/// Standard parametrization from mixing angles and the CP phase (radians).
ComplexMatrix ckm_from_angles(double theta12, double theta13, double theta23, double delta);

struct SMParams {
  std::size_t generations = 3;
  RVector up{0.0022, 1.27, 172.76};
  RVector down{0.0047, 0.093, 4.18};
  RVector lepton{0.000511, 0.10566, 1.77686};
  ComplexMatrix ckm = ckm_from_angles(0.22759, 0.0035081, 0.041539, 1.20);

  /// Throws std::invalid_argument unless sizes match N, masses are positive
  /// and the CKM matrix is unitary to 1e-10.
  void validate() const;
  double top_mass() const;
};

struct HiggsDoublet {
  Complex h1{0.0, 0.0};
  Complex h2{0.0, 0.0};

  bool is_vacuum() const noexcept { return h1 == Complex{} && h2 == Complex{}; }
  /// |1 + h₁|² + |h₂|².
  double weight() const noexcept;
};

struct StandardModelGeometry {
  SMParams params;
  FiniteSpectralTriple triple;
};

/// 8N×7N mass matrix with the vacuum doublet replaced by (1+h₁, h₂).
ComplexMatrix mass_matrix(const SMParams& p, const HiggsDoublet& h = {});

StandardModelGeometry build_internal_triple(const SMParams& p = {});

/// p_ℂ = 1, p_ℍ = I₂, p_{M₃} = E₁₁, in that order.
std::vector<Projector> canonical_projectors(const FiniteSpectralTriple& sm);

/// D_I + H + J H J⁻¹ with H the particle-sector one-form that turns the mass
/// matrix into mass_matrix(p, h). Throws DomainError if H is not a one-form.
/// Returns the unmodified triple for the vacuum.
FiniteSpectralTriple higgs_fluctuation(const StandardModelGeometry& sm, const HiggsDoublet& h);

/// Distance between the state of the ℂ component and the state of ℍ.
DistanceResult sheet_distance(const FiniteSpectralTriple& fluctuated, const SolverOptions& opts = {});

/// g^tt = (|1+h₁|² + |h₂|²)·m_t².
double metric_coefficient(const SMParams& p, const HiggsDoublet& h);

struct NeutrinoExtension {
  int alpha = 0;
  std::vector<int> eps;  ///< 1: Majorana type, 2: Dirac type

  /// Throws std::invalid_argument unless 0 ≤ α ≤ 3, |ε| = α, εᵢ ∈ {1, 2}.
  void validate() const;
  int eps_sum() const;
};

struct MajoranaObstruction {
  std::size_t neutrino = 0;
  /// min over diagonal gradings commuting with diag(b, b̄) of ‖ΓD + DΓ‖ for
  /// D = diag(μ, μ̄).
  double min_residual = 0.0;
  std::string witness;
};

struct NeutrinoReport {
  NeutrinoExtension extension;
  std::vector<std::vector<long long>> symbolic;  ///< [[6+Σε,−6,6],[−6,0,−6],[6,−6,0]]
  std::vector<std::vector<long long>> numeric;   ///< from the extended representation
  long long determinant = 0;                     ///< det(numeric)
  long long formula_determinant = 0;             ///< 36(6 − Σε)
  bool poincare = false;
  std::vector<MajoranaObstruction> obstructions;
  bool admissible = false;
  std::string verdict;
};

NeutrinoReport neutrino_extension_analysis(const NeutrinoExtension& x, const SMParams& p = {},
                                           double sterile_mass = 1.0);
/// Same, reusing an already built vacuum geometry.
NeutrinoReport neutrino_extension_analysis(const NeutrinoExtension& x, const StandardModelGeometry& sm,
                                           double sterile_mass = 1.0);

/// All 15 ordered configurations with α ≤ 3.
std::vector<NeutrinoExtension> all_neutrino_extensions();

}  // namespace nctk
