// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

/// Connes spectral distance between pure states of a finite spectral triple
///   d(ω₁, ω₂) = sup { ω₁(a) − ω₂(a) : a = a*, ‖[D, π(a)]‖ ≤ 1 }
/// and closed forms for the M₂(ℂ) sphere and the Mₙ(ℂ) ⊕ ℂ two-point space.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "nctk/algebra.hpp"
#include "nctk/triple.hpp"

namespace nctk {

struct SolverOptions {
  int restarts = 16;
  int max_iterations = 5000;
  double tolerance = 1e-8;
  double kernel_tolerance = 1e-10;
  std::uint64_t seed = 42;
  /// Concurrent restarts; 0 means NCTK_THREADS or the hardware concurrency.
  int threads = 0;
  /// Initial log-sum-exp temperature of the smoothing phase, relative to the
  /// current norm.
  double temperature = 1e-3;
  /// Subgradient step scale c in c/√k, relative to the iterate norm.
  double step_scale = 0.5;

  /// Throws std::invalid_argument if any field is non-positive.
  void validate() const;
};

struct DistanceResult {
  double value = 0.0;                  ///< may be +inf
  std::optional<RVector> maximizer;    ///< global sa coordinates of a*
  double achieved_constraint = 0.0;    ///< ‖[D, π(a*)]‖
  int restarts_used = 0;
  int iterations = 0;
  bool converged = false;

  bool is_infinite() const noexcept;
};

/// Orthonormal basis (in global sa coordinates) of {a = a* : [D, π(a)] = 0}.
std::vector<RVector> commutator_kernel(const FiniteSpectralTriple& t, double kernel_tolerance = 1e-10);

/// True iff ω₁ − ω₂ pairs nontrivially with the commutator kernel.
bool is_infinite(const FiniteSpectralTriple& t, const PureState& w1, const PureState& w2,
                 double kernel_tolerance = 1e-10);

DistanceResult spectral_distance(const FiniteSpectralTriple& t, const PureState& w1, const PureState& w2,
                                 const SolverOptions& opts = {});

/// Value of the M₂(ℂ) closed form 2/|D₁−D₂|·√(Δx² + Δy²) in Hopf
/// coordinates; +inf for different altitudes, and for distinct states when
/// D₁ = D₂.
double closed_form_m2(double d1, double d2, std::span<const Complex> xi, std::span<const Complex> zeta);

/// Either side of a two-point closed form: the ℂ state, or a unit vector of
/// the Mₙ(ℂ) component.
struct TwoPointC {};
using TwoPointState = std::variant<TwoPointC, CVector>;

struct ClosedForm {
  bool covered = false;
  double value = 0.0;  ///< meaningful when covered; may be +inf
  std::string note;
};

/// Closed forms on Mₙ(ℂ) ⊕ ℂ with Δ = [[0, m], [m†, 0]], in the basis
/// adapted to m (first vector m/‖m‖):
///  - ω_c vs ω_{m̂}: 1/‖m‖; ω_c vs any other pure state: +inf;
///  - two Mₙ states whose components orthogonal to m agree up to a common
///    phase: (2/‖m‖)√(1 − |⟨ξ, ζ⟩|²);
///  - other pairs are not covered.
ClosedForm closed_form_two_point(std::span<const Complex> m, const TwoPointState& lhs, const TwoPointState& rhs);

}  // namespace nctk
