// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "nctk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace nctk {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw ShapeError(std::string(what) + ": matrix must be square");
  }
}

// Anti-hermitian defect relative to the Frobenius norm; used to pick the
// fast path in operator_norm.
double antihermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) + std::conj(m(j, i))));
    }
  }
  return worst / std::max(1e-300, m.frobenius_norm());
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  ComplexMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  return h;
}

CVector column(const ComplexMatrix& m, std::size_t j) {
  CVector c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

std::size_t argmax_abs(const RVector& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (std::abs(values[k]) > std::abs(values[best])) best = k;
  }
  return best;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("ComplexMatrix: " + std::to_string(data_.size()) + " entries for a " +
                     std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  }
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = std::conj(data_[k]);
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw ShapeError("operator*: inner dimensions " + std::to_string(lhs.cols()) + " and " +
                     std::to_string(rhs.rows()));
  }
  const std::size_t n = lhs.rows();
  const std::size_t m = rhs.cols();
  ComplexMatrix out(n, m);
  // Operators here are mostly sparse (block-diagonal representations), so
  // zero entries of the left factor are skipped.
  for (std::size_t i = 0; i < n; ++i) {
    Complex* orow = &out(i, 0);
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{0.0, 0.0}) continue;
      const Complex* brow = &rhs(k, 0);
      for (std::size_t j = 0; j < m; ++j) orow[j] += a * brow[j];
    }
  }
  return out;
}

CVector operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw ShapeError("matrix-vector: dimension mismatch");
  CVector out(m.rows(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double real_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "real_inner");
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    s += ea[k].real() * eb[k].real() + ea[k].imag() * eb[k].imag();
  }
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "anticommutator");
  require_same_shape(a, b, "anticommutator");
  return a * b + b * a;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst / std::max(1.0, m.frobenius_norm());
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermitian_defect(m) <= tol; }

double unitary_defect(const ComplexMatrix& u) {
  if (!u.is_square()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - ComplexMatrix::identity(u.rows())).frobenius_norm();
}

bool is_unitary(const ComplexMatrix& u, double tol) { return unitary_defect(u) <= tol; }

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig");
  const std::size_t n = m.rows();
  const double scale = m.frobenius_norm();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
  }
  if (asym > 1e-12 * std::max(scale, 1e-300) && asym > 0.0) {
    throw DomainError("hermitian_eig: input is not hermitian (defect " + std::to_string(asym) + ")");
  }

  ComplexMatrix a = symmetrized(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = 1e-13 * scale;
  for (int sweep = 0; sweep < 100 && scale > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    }
    if (std::sqrt(off) <= target) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Negligible element: annihilate without rotating.
        if (sweep > 3 && std::abs(app) + 100.0 * r == std::abs(app) &&
            std::abs(aqq) + 100.0 * r == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Complex phase = apq / r;  // e^{iφ}
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, e^{-iφ}) · [[c, s], [-s, c]] restricted to (p, q).
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  const double fro = m.frobenius_norm();
  if (fro == 0.0) return 0.0;
  if (m.is_square() && hermitian_defect(m) <= 1e-14) {
    const auto e = hermitian_eig(symmetrized(m));
    return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
  }
  if (m.is_square() && antihermitian_defect(m) <= 1e-14) {
    ComplexMatrix h = Complex{0.0, 1.0} * m;
    const auto e = hermitian_eig(symmetrized(h));
    return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
  }
  const ComplexMatrix g = m.rows() < m.cols() ? m * m.adjoint() : m.adjoint() * m;
  const auto e = hermitian_eig(symmetrized(g));
  return std::sqrt(std::max(0.0, e.values.back()));
}

SingularTriple dominant_singular_triple(const ComplexMatrix& m) {
  if (m.empty() || m.frobenius_norm() == 0.0) {
    throw DomainError("dominant_singular_triple: zero matrix has no dominant direction");
  }
  SingularTriple st;
  if (m.is_square() && hermitian_defect(m) <= 1e-14) {
    const auto e = hermitian_eig(symmetrized(m));
    const std::size_t k = argmax_abs(e.values);
    st.v = column(e.vectors, k);
  } else if (m.is_square() && antihermitian_defect(m) <= 1e-14) {
    const auto e = hermitian_eig(symmetrized(Complex{0.0, 1.0} * m));
    const std::size_t k = argmax_abs(e.values);
    st.v = column(e.vectors, k);
  } else {
    const auto e = hermitian_eig(symmetrized(m.adjoint() * m));
    st.v = column(e.vectors, e.values.size() - 1);
  }
  st.u = m * std::span<const Complex>(st.v);
  st.sigma = norm(st.u);
  for (auto& z : st.u) z /= st.sigma;
  return st;
}

CVector antiunitary_apply(const ComplexMatrix& u, std::span<const Complex> psi) {
  if (!is_unitary(u, 1e-10)) throw DomainError("antiunitary_apply: U is not unitary");
  CVector c(psi.begin(), psi.end());
  for (auto& z : c) z = std::conj(z);
  return u * std::span<const Complex>(c);
}

ComplexMatrix antiunitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& x) {
  return u * x.conjugate() * u.adjoint();
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

RealSvd real_svd(const std::vector<RVector>& columns) {
  const std::size_t k = columns.size();
  std::vector<RVector> a = columns;
  std::vector<RVector> v(k, RVector(k, 0.0));
  for (std::size_t j = 0; j < k; ++j) v[j][j] = 1.0;
  if (k > 0) {
    const std::size_t m = a.front().size();
    for (const auto& c : a) {
      if (c.size() != m) throw ShapeError("real_svd: columns of unequal length");
    }
  }

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const double alpha = dot(a[i], a[i]);
        const double beta = dot(a[j], a[j]);
        const double gamma = dot(a[i], a[j]);
        if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < a[i].size(); ++r) {
          const double ai = a[i][r];
          const double aj = a[j][r];
          a[i][r] = c * ai - s * aj;
          a[j][r] = s * ai + c * aj;
        }
        for (std::size_t r = 0; r < k; ++r) {
          const double vi = v[i][r];
          const double vj = v[j][r];
          v[i][r] = c * vi - s * vj;
          v[j][r] = s * vi + c * vj;
        }
      }
    }
    if (!rotated) break;
  }

  RealSvd out;
  std::vector<double> sv(k);
  for (std::size_t j = 0; j < k; ++j) sv[j] = norm(a[j]);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return sv[i] > sv[j]; });
  for (std::size_t idx : order) {
    out.singular_values.push_back(sv[idx]);
    out.right.push_back(v[idx]);
  }
  return out;
}

RVector as_real_vector(const ComplexMatrix& m) {
  RVector out;
  out.reserve(2 * m.size());
  for (const auto& z : m.entries()) {
    out.push_back(z.real());
    out.push_back(z.imag());
  }
  return out;
}

namespace {
__extension__ typedef __int128 Wide;  // Bareiss intermediates exceed 64 bits
}  // namespace

long long integer_determinant(const std::vector<std::vector<long long>>& input) {
  const std::size_t n = input.size();
  for (const auto& row : input) {
    if (row.size() != n) throw ShapeError("integer_determinant: matrix must be square");
  }
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = input[i][j];
  }
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

}  // namespace nctk
