// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "nctk/algebra.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace nctk {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

// y += a·x in place.
void axpy(ComplexMatrix& y, double a, const ComplexMatrix& x) {
  if (a == 0.0) return;
  auto ys = y.entries();
  const auto xs = x.entries();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (xs[i] != Complex{0.0, 0.0}) ys[i] += a * xs[i];
  }
}

void require_component_shape(const AlgebraComponent& c, const ComplexMatrix& x) {
  if (x.rows() != c.n || x.cols() != c.n) {
    throw ShapeError("component '" + c.label + "' expects " + std::to_string(c.n) + "x" +
                     std::to_string(c.n) + " blocks, got " + std::to_string(x.rows()) + "x" +
                     std::to_string(x.cols()));
  }
}

}  // namespace

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::C: return "C";
    case ComponentKind::H: return "H";
    case ComponentKind::Mn: return "Mn";
  }
  return "?";
}

ComponentKind parse_component_kind(std::string_view text) {
  if (text == "C") return ComponentKind::C;
  if (text == "H") return ComponentKind::H;
  if (text == "Mn") return ComponentKind::Mn;
  throw std::invalid_argument("unknown component kind '" + std::string(text) + "' (expected C, H or Mn)");
}

AlgebraComponent make_component(ComponentKind kind, std::size_t n, std::string label) {
  AlgebraComponent c;
  c.kind = kind;
  c.n = n;
  c.label = label.empty() ? (kind == ComponentKind::Mn ? "M" + std::to_string(n) : to_string(kind)) : std::move(label);
  switch (kind) {
    case ComponentKind::C:
      if (n != 1) throw std::invalid_argument("component C requires n = 1");
      c.sa_basis = {ComplexMatrix{{1.0}}};
      c.real_basis = {ComplexMatrix{{1.0}}, ComplexMatrix{{kI}}};
      break;
    case ComponentKind::H: {
      if (n != 2) throw std::invalid_argument("component H requires n = 2");
      const ComplexMatrix id = ComplexMatrix::identity(2);
      const ComplexMatrix s1{{0.0, 1.0}, {1.0, 0.0}};
      const ComplexMatrix s2{{0.0, -kI}, {kI, 0.0}};
      const ComplexMatrix s3{{1.0, 0.0}, {0.0, -1.0}};
      c.sa_basis = {id};
      c.real_basis = {id, kI * s1, kI * s2, kI * s3};
      break;
    }
    case ComponentKind::Mn: {
      if (n < 1) throw std::invalid_argument("component Mn requires n >= 1");
      for (std::size_t i = 0; i < n; ++i) c.sa_basis.push_back(unit_matrix(n, i, i));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) c.sa_basis.push_back(unit_matrix(n, i, j) + unit_matrix(n, j, i));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          c.sa_basis.push_back(kI * (unit_matrix(n, j, i) - unit_matrix(n, i, j)));
        }
      }
      c.real_basis = c.sa_basis;
      for (const auto& e : c.sa_basis) c.real_basis.push_back(kI * e);
      break;
    }
  }
  return c;
}

RVector real_coordinates(const AlgebraComponent& c, const ComplexMatrix& x) {
  require_component_shape(c, x);
  // The real bases are Frobenius-orthogonal by construction.
  RVector coords(c.real_dim());
  ComplexMatrix rebuilt(c.n, c.n);
  for (std::size_t j = 0; j < c.real_dim(); ++j) {
    const auto& e = c.real_basis[j];
    coords[j] = real_inner(e, x) / real_inner(e, e);
    rebuilt += coords[j] * e;
  }
  const double miss = (x - rebuilt).frobenius_norm();
  if (miss > 1e-10 * std::max(1.0, x.frobenius_norm())) {
    throw DomainError("matrix is not an element of component '" + c.label + "' (distance " +
                      std::to_string(miss) + ")");
  }
  return coords;
}

ComplexMatrix from_real_coordinates(const AlgebraComponent& c, std::span<const double> coords) {
  if (coords.size() != c.real_dim()) throw ShapeError("component '" + c.label + "': wrong coordinate count");
  ComplexMatrix x(c.n, c.n);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] != 0.0) x += coords[j] * c.real_basis[j];
  }
  return x;
}

FiniteAlgebra::FiniteAlgebra(std::vector<AlgebraComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("algebra needs at least one component");
  std::set<std::string> seen;
  for (const auto& c : components_) {
    if (!seen.insert(c.label).second) throw std::invalid_argument("duplicate component label '" + c.label + "'");
    for (const auto& e : c.sa_basis) {
      if (!is_hermitian(e, 1e-12)) throw DomainError("component '" + c.label + "': sa_basis element not self-adjoint");
    }
    sa_offsets_.push_back(sa_offsets_.back() + c.sa_dim());
    real_offsets_.push_back(real_offsets_.back() + c.real_dim());
  }
}

std::size_t FiniteAlgebra::index_of(std::string_view label) const {
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].label == label) return k;
  }
  throw std::out_of_range("no component labelled '" + std::string(label) + "'");
}

std::size_t FiniteAlgebra::sa_to_real(std::size_t global_sa) const {
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (global_sa < sa_offsets_[k + 1]) return real_offsets_[k] + (global_sa - sa_offsets_[k]);
  }
  throw std::out_of_range("sa index out of range");
}

AlgebraElement FiniteAlgebra::unit() const {
  AlgebraElement x;
  for (const auto& c : components_) x.push_back(ComplexMatrix::identity(c.n));
  return x;
}

AlgebraElement FiniteAlgebra::zero() const {
  AlgebraElement x;
  for (const auto& c : components_) x.push_back(ComplexMatrix::zeros(c.n, c.n));
  return x;
}

AlgebraElement FiniteAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.size() != size() || y.size() != size()) throw ShapeError("algebra element has wrong block count");
  AlgebraElement z;
  for (std::size_t k = 0; k < size(); ++k) z.push_back(x[k] * y[k]);
  return z;
}

AlgebraElement FiniteAlgebra::adjoint(const AlgebraElement& x) const {
  if (x.size() != size()) throw ShapeError("algebra element has wrong block count");
  AlgebraElement z;
  for (const auto& b : x) z.push_back(b.adjoint());
  return z;
}

RVector FiniteAlgebra::coordinates(const AlgebraElement& x) const {
  if (x.size() != size()) throw ShapeError("algebra element has wrong block count");
  RVector out;
  out.reserve(real_dim());
  for (std::size_t k = 0; k < size(); ++k) {
    const RVector c = real_coordinates(components_[k], x[k]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

AlgebraElement FiniteAlgebra::element(std::span<const double> real_coords) const {
  if (real_coords.size() != real_dim()) throw ShapeError("wrong number of real coordinates");
  AlgebraElement x;
  for (std::size_t k = 0; k < size(); ++k) {
    x.push_back(from_real_coordinates(components_[k],
                                      real_coords.subspan(real_offsets_[k], components_[k].real_dim())));
  }
  return x;
}

AlgebraElement FiniteAlgebra::embed(std::size_t k, const ComplexMatrix& block) const {
  AlgebraElement x = zero();
  require_component_shape(components_.at(k), block);
  x[k] = block;
  return x;
}

Representation::Representation(const FiniteAlgebra& algebra, std::size_t hilbert_dim,
                               std::vector<std::vector<ComplexMatrix>> images)
    : hilbert_dim_(hilbert_dim), images_(std::move(images)) {
  if (hilbert_dim_ == 0) throw std::invalid_argument("hilbert_dim must be positive");
  if (images_.size() != algebra.size()) {
    throw ShapeError("representation lists " + std::to_string(images_.size()) + " components, algebra has " +
                     std::to_string(algebra.size()));
  }
  for (std::size_t k = 0; k < algebra.size(); ++k) {
    const auto& c = algebra.component(k);
    auto& imgs = images_[k];
    for (const auto& m : imgs) {
      if (m.rows() != hilbert_dim_ || m.cols() != hilbert_dim_) {
        throw ShapeError("component '" + c.label + "': image is not " + std::to_string(hilbert_dim_) + "x" +
                         std::to_string(hilbert_dim_));
      }
    }
    if (imgs.size() == c.sa_dim() && c.sa_dim() != c.real_dim()) {
      if (c.kind == ComponentKind::H) {
        throw std::invalid_argument("component '" + c.label +
                                    "': quaternion images must be given for the full real basis");
      }
      for (std::size_t j = 0; j < c.sa_dim(); ++j) imgs.push_back(kI * imgs[j]);
    }
    if (imgs.size() != c.real_dim()) {
      throw ShapeError("component '" + c.label + "' needs " + std::to_string(c.real_dim()) + " (or " +
                       std::to_string(c.sa_dim()) + " self-adjoint) images, got " + std::to_string(imgs.size()));
    }
    for (std::size_t j = 0; j < c.sa_dim(); ++j) {
      if (!is_hermitian(imgs[j], 1e-12)) {
        throw DomainError("component '" + c.label + "': image of sa element " + std::to_string(j) +
                          " is not self-adjoint");
      }
    }
    for (const auto& m : imgs) flat_.push_back(m);
  }

  const auto bad = [&](const std::string& what) { throw DomainError("representation is not a *-homomorphism: " + what); };

  // *-property and multiplicativity on real-basis pairs.
  for (std::size_t k = 0; k < algebra.size(); ++k) {
    const auto& c = algebra.component(k);
    for (std::size_t i = 0; i < c.real_dim(); ++i) {
      const RVector star = real_coordinates(c, c.real_basis[i].adjoint());
      ComplexMatrix diff = images_[k][i].adjoint();
      for (std::size_t j = 0; j < star.size(); ++j) axpy(diff, -star[j], images_[k][j]);
      if (diff.frobenius_norm() > 1e-10 * std::max(1.0, images_[k][i].frobenius_norm())) {
        bad("adjoint of " + c.label + "[" + std::to_string(i) + "]");
      }
    }
  }
  for (std::size_t k = 0; k < algebra.size(); ++k) {
    const auto& ck = algebra.component(k);
    for (std::size_t i = 0; i < ck.real_dim(); ++i) {
      for (std::size_t l = 0; l < algebra.size(); ++l) {
        const auto& cl = algebra.component(l);
        for (std::size_t j = 0; j < cl.real_dim(); ++j) {
          ComplexMatrix diff = images_[k][i] * images_[l][j];
          if (k == l) {
            const RVector pc = real_coordinates(ck, ck.real_basis[i] * ck.real_basis[j]);
            for (std::size_t q = 0; q < pc.size(); ++q) axpy(diff, -pc[q], images_[k][q]);
          }
          const double scale = std::max(1.0, images_[k][i].frobenius_norm() * images_[l][j].frobenius_norm());
          if (diff.frobenius_norm() > 1e-10 * scale) {
            bad("product " + ck.label + "[" + std::to_string(i) + "]*" + cl.label + "[" + std::to_string(j) + "]");
          }
        }
      }
    }
  }

  unit_image_ = apply(algebra, algebra.unit());
  if ((unit_image_ - ComplexMatrix::identity(hilbert_dim_)).max_abs() > 1e-12) {
    throw DomainError("representation is not unital: pi(1) differs from the identity");
  }
}

ComplexMatrix Representation::apply_coords(std::span<const double> real_coords) const {
  if (real_coords.size() != flat_.size()) throw ShapeError("wrong number of real coordinates");
  ComplexMatrix out(hilbert_dim_, hilbert_dim_);
  for (std::size_t a = 0; a < flat_.size(); ++a) {
    if (real_coords[a] != 0.0) out += real_coords[a] * flat_[a];
  }
  return out;
}

ComplexMatrix Representation::apply(const FiniteAlgebra& algebra, const AlgebraElement& x) const {
  return apply_coords(algebra.coordinates(x));
}

ComplexMatrix Representation::apply_sa(const FiniteAlgebra& algebra, std::span<const double> sa_coords) const {
  if (sa_coords.size() != algebra.sa_dim()) throw ShapeError("wrong number of self-adjoint coordinates");
  ComplexMatrix out(hilbert_dim_, hilbert_dim_);
  for (std::size_t a = 0; a < sa_coords.size(); ++a) {
    if (sa_coords[a] != 0.0) out += sa_coords[a] * flat_[algebra.sa_to_real(a)];
  }
  return out;
}

PureState make_state(const FiniteAlgebra& algebra, std::size_t component, CVector xi) {
  if (component >= algebra.size()) {
    throw std::out_of_range("state refers to component " + std::to_string(component) + " of " +
                            std::to_string(algebra.size()));
  }
  const auto& c = algebra.component(component);
  if (xi.size() != c.n) {
    throw ShapeError("state on component '" + c.label + "' needs " + std::to_string(c.n) + " entries, got " +
                     std::to_string(xi.size()));
  }
  const double nrm = norm(xi);
  if (std::abs(nrm - 1.0) > 1e-12) throw DomainError("state vector is not normalized (norm " + std::to_string(nrm) + ")");
  return PureState{component, std::move(xi)};
}

PureState canonical(const PureState& s) {
  PureState out = s;
  for (const auto& z : s.vector) {
    if (std::abs(z) > 1e-14) {
      const Complex phase = std::conj(z) / std::abs(z);
      for (auto& w : out.vector) w *= phase;
      break;
    }
  }
  return out;
}

bool same_state(const PureState& a, const PureState& b, double tol) {
  if (a.component != b.component || a.vector.size() != b.vector.size()) return false;
  // |⟨a,b⟩| = 1 iff equal modulo phase (both unit vectors).
  return 1.0 - std::abs(dot(a.vector, b.vector)) <= tol;
}

double state_eval(const PureState& omega, std::size_t component, const ComplexMatrix& a) {
  if (component != omega.component) {
    throw DomainError("state lives on component " + std::to_string(omega.component) + ", element on " +
                      std::to_string(component));
  }
  if (a.rows() != omega.vector.size() || a.cols() != omega.vector.size()) throw ShapeError("state_eval: dimension mismatch");
  const CVector av = a * std::span<const Complex>(omega.vector);
  return dot(omega.vector, av).real();
}

double state_eval(const PureState& omega, const AlgebraElement& a) {
  return state_eval(omega, omega.component, a.at(omega.component));
}

std::array<double, 3> hopf_project(std::span<const Complex> xi) {
  if (xi.size() != 2) throw ShapeError("hopf_project needs a vector in C^2");
  if (std::abs(norm(xi) - 1.0) > 1e-12) throw DomainError("hopf_project needs a unit vector");
  const Complex w = xi[0] * std::conj(xi[1]);
  return {2.0 * w.real(), 2.0 * w.imag(), std::norm(xi[0]) - std::norm(xi[1])};
}

RVector state_functional_coords(const FiniteAlgebra& algebra, const PureState& omega) {
  RVector out(algebra.sa_dim(), 0.0);
  const auto& c = algebra.component(omega.component);
  const std::size_t off = algebra.sa_offset(omega.component);
  for (std::size_t j = 0; j < c.sa_dim(); ++j) out[off + j] = state_eval(omega, omega.component, c.sa_basis[j]);
  return out;
}

}  // namespace nctk
