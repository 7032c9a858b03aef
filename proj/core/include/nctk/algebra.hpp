// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

/// Finite C*-algebras as direct sums of ℂ, ℍ and Mₙ(ℂ) components, their
/// real-linear representations on a finite Hilbert space, and pure states.
///
/// Every component carries two real bases. `sa_basis` spans the self-adjoint
/// part (the space distances optimize over). `real_basis` spans the whole
/// component as a real vector space and always starts with `sa_basis`; the
/// representation stores images of `real_basis`, which lets real-linear
/// representations (ℂ acting by b and b̄ on different subspaces) and ℍ be
/// handled uniformly.
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nctk/linalg.hpp"

namespace nctk {

enum class ComponentKind { C, H, Mn };

std::string to_string(ComponentKind kind);
/// Accepts "C", "H" or "Mn"; throws std::invalid_argument otherwise.
ComponentKind parse_component_kind(std::string_view text);

struct AlgebraComponent {
  std::string label;
  ComponentKind kind = ComponentKind::C;
  std::size_t n = 1;
  std::vector<ComplexMatrix> sa_basis;
  std::vector<ComplexMatrix> real_basis;

  std::size_t sa_dim() const noexcept { return sa_basis.size(); }
  std::size_t real_dim() const noexcept { return real_basis.size(); }
};

/// Canonical component. C needs n = 1, H needs n = 2, Mn needs n ≥ 1.
/// Bases: C {1} / {1, i}; H {I} / {I, iσ₁, iσ₂, iσ₃};
/// Mn {Eᵢᵢ, Eᵢⱼ+Eⱼᵢ, i(Eᵢⱼ−Eⱼᵢ)} / that list followed by i times it.
AlgebraComponent make_component(ComponentKind kind, std::size_t n, std::string label = {});

/// Coordinates of x in the component's real basis. Throws DomainError if x is
/// not an element of the component (e.g. a non-quaternion 2×2 matrix for ℍ).
RVector real_coordinates(const AlgebraComponent& c, const ComplexMatrix& x);
ComplexMatrix from_real_coordinates(const AlgebraComponent& c, std::span<const double> coords);

/// One block per component.
using AlgebraElement = std::vector<ComplexMatrix>;

class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  explicit FiniteAlgebra(std::vector<AlgebraComponent> components);

  const std::vector<AlgebraComponent>& components() const noexcept { return components_; }
  const AlgebraComponent& component(std::size_t k) const { return components_.at(k); }
  std::size_t size() const noexcept { return components_.size(); }
  /// Throws std::out_of_range for an unknown label.
  std::size_t index_of(std::string_view label) const;

  std::size_t sa_dim() const noexcept { return sa_offsets_.back(); }
  std::size_t real_dim() const noexcept { return real_offsets_.back(); }
  std::size_t sa_offset(std::size_t k) const { return sa_offsets_.at(k); }
  std::size_t real_offset(std::size_t k) const { return real_offsets_.at(k); }

  /// Global real-basis index of the j-th sa element of component k.
  std::size_t sa_to_real(std::size_t global_sa) const;

  AlgebraElement unit() const;
  AlgebraElement zero() const;
  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement adjoint(const AlgebraElement& x) const;
  /// Global real-basis coordinates; validates membership of every block.
  RVector coordinates(const AlgebraElement& x) const;
  AlgebraElement element(std::span<const double> real_coords) const;
  /// Element supported in component k with the given block.
  AlgebraElement embed(std::size_t k, const ComplexMatrix& block) const;

 private:
  std::vector<AlgebraComponent> components_;
  std::vector<std::size_t> sa_offsets_{0};
  std::vector<std::size_t> real_offsets_{0};
};

/// π given by the images of every real-basis element of every component.
class Representation {
 public:
  Representation() = default;
  /// images[k] lists either real_dim (full data) or sa_dim (extended
  /// complex-linearly, refused for ℍ) matrices of size hilbert_dim.
  /// Validates self-adjointness of sa images, the *-property, unitality and
  /// multiplicativity on real-basis pairs.
  Representation(const FiniteAlgebra& algebra, std::size_t hilbert_dim,
                 std::vector<std::vector<ComplexMatrix>> images);

  std::size_t hilbert_dim() const noexcept { return hilbert_dim_; }
  const std::vector<std::vector<ComplexMatrix>>& images() const noexcept { return images_; }
  const ComplexMatrix& image(std::size_t k, std::size_t j) const { return images_.at(k).at(j); }
  /// Image of the global real-basis element α.
  const ComplexMatrix& real_image(std::size_t alpha) const { return flat_.at(alpha); }
  const ComplexMatrix& unit_image() const noexcept { return unit_image_; }

  ComplexMatrix apply(const FiniteAlgebra& algebra, const AlgebraElement& x) const;
  ComplexMatrix apply_coords(std::span<const double> real_coords) const;
  /// π of a self-adjoint element given by global sa coordinates.
  ComplexMatrix apply_sa(const FiniteAlgebra& algebra, std::span<const double> sa_coords) const;

 private:
  std::size_t hilbert_dim_ = 0;
  std::vector<std::vector<ComplexMatrix>> images_;
  std::vector<ComplexMatrix> flat_;
  ComplexMatrix unit_image_;
};

struct PureState {
  std::size_t component = 0;
  CVector vector;
};

/// Validates ‖ξ‖ = 1 to 1e-12 and the dimension against the component.
PureState make_state(const FiniteAlgebra& algebra, std::size_t component, CVector xi);
/// Same state with the first nonzero entry made real and positive.
PureState canonical(const PureState& s);
/// Same class modulo phase, to tol.
bool same_state(const PureState& a, const PureState& b, double tol = 1e-12);

/// ξ† a ξ for a self-adjoint element of ω's component; throws DomainError on
/// component mismatch.
double state_eval(const PureState& omega, std::size_t component, const ComplexMatrix& a);
double state_eval(const PureState& omega, const AlgebraElement& a);

/// (2Re(ξ₁ξ̄₂), 2Im(ξ₁ξ̄₂), |ξ₁|²−|ξ₂|²) for a unit ξ ∈ ℂ².
std::array<double, 3> hopf_project(std::span<const Complex> xi);

/// ω evaluated on every element of the global sa basis.
RVector state_functional_coords(const FiniteAlgebra& algebra, const PureState& omega);

}  // namespace nctk
