// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

/// Dense complex matrices and the spectral primitives used by every other
/// part of the toolkit: hermitian eigendecomposition (cyclic Jacobi),
/// operator norm, dominant singular triple and antiunitary application.
///
/// Matrices are small (at most a few hundred rows) and stored row-major.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nctk {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
using RVector = std::vector<double>;

/// Raised when operands have incompatible shapes.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix fails a structural precondition (hermitian,
/// unitary, nonzero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> entries() noexcept { return data_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  Complex trace() const;
  double frobenius_norm() const;
  /// Largest absolute entry.
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
CVector operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Real Frobenius inner product Re tr(A† B).
double real_inner(const ComplexMatrix& a, const ComplexMatrix& b);
/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Block-diagonal direct sum a ⊕ b.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& m);
/// A B − B A.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// A B + B A.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max |M† − M| scaled by max(1, ‖M‖_F); zero for exactly hermitian input.
double hermitian_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
/// ‖U†U − I‖_F.
double unitary_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

struct HermitianEigen {
  RVector values;        ///< ascending
  ComplexMatrix vectors; ///< columns are the eigenvectors
};

/// Cyclic Jacobi eigendecomposition of a hermitian matrix.
/// Throws DomainError if M is not hermitian to 1e-12·‖M‖.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

struct SingularTriple {
  double sigma = 0.0;
  CVector u;
  CVector v;
};

/// σmax with unit u, v such that M v = σ u. Any maximizing pair is returned
/// when σmax is degenerate. Throws DomainError on the zero matrix.
SingularTriple dominant_singular_triple(const ComplexMatrix& m);

/// J ψ = U · conj(ψ) for J = U ∘ complex conjugation.
CVector antiunitary_apply(const ComplexMatrix& u, std::span<const Complex> psi);

/// J X J⁻¹ = U · conj(X) · U† for J = U ∘ complex conjugation.
ComplexMatrix antiunitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& x);

double norm(std::span<const Complex> v);
Complex dot(std::span<const Complex> a, std::span<const Complex> b);  ///< a† b
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> v);

/// Thin SVD of a real matrix given by its columns (all of equal length),
/// computed by one-sided Jacobi. Singular values are returned in
/// descending order with the matching right singular vectors as columns of
/// `right` (row-major k×k).
struct RealSvd {
  RVector singular_values;
  std::vector<RVector> right;  ///< right[j] is the j-th right singular vector
};
RealSvd real_svd(const std::vector<RVector>& columns);

/// Flattens a complex matrix into the real vector (Re, Im, Re, Im, ...).
RVector as_real_vector(const ComplexMatrix& m);

/// Exact determinant of an integer matrix (fraction-free Bareiss).
long long integer_determinant(const std::vector<std::vector<long long>>& m);

}  // namespace nctk
