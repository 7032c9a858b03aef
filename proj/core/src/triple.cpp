// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "nctk/triple.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nctk {

namespace {

// Tracks the largest operator norm over a stream of matrices without
// diagonalizing most of them: ‖X‖ ≤ ‖X‖_F and ‖X‖ ≥ ‖X‖_F/√n.
class WorstNorm {
 public:
  explicit WorstNorm(std::size_t dim) : inv_sqrt_dim_(1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(dim, 1)))) {}

  void add(ComplexMatrix m, std::string label) {
    const double f = m.frobenius_norm();
    if (f == 0.0 || f < max_frob_ * inv_sqrt_dim_) return;
    max_frob_ = std::max(max_frob_, f);
    pending_.push_back({f, std::move(m), std::move(label)});
    if (pending_.size() > 64) prune();
  }

  // Returns the exact worst norm and its label.
  std::pair<double, std::string> result() {
    prune();
    std::sort(pending_.begin(), pending_.end(), [](const Item& a, const Item& b) { return a.frob > b.frob; });
    double best = 0.0;
    std::string label;
    for (const auto& it : pending_) {
      if (it.frob <= best) break;
      const double v = operator_norm(it.m);
      if (v > best) {
        best = v;
        label = it.label;
      }
    }
    return {best, label};
  }

 private:
  struct Item {
    double frob;
    ComplexMatrix m;
    std::string label;
  };
  void prune() {
    const double cut = max_frob_ * inv_sqrt_dim_;
    std::erase_if(pending_, [&](const Item& it) { return it.frob < cut; });
  }

  double inv_sqrt_dim_;
  double max_frob_ = 0.0;
  std::vector<Item> pending_;
};

std::string basis_label(const FiniteAlgebra& alg, std::size_t alpha) {
  for (std::size_t k = 0; k < alg.size(); ++k) {
    if (alpha < alg.real_offset(k + 1)) return alg.component(k).label + "[" + std::to_string(alpha - alg.real_offset(k)) + "]";
  }
  return "?";
}

AxiomCheck finish(std::string name, double residual, double tol, std::string witness) {
  AxiomCheck c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tol;
  c.pass = residual <= tol;
  if (!c.pass) c.witness = std::move(witness);
  return c;
}

const ComplexMatrix& require_j(const FiniteSpectralTriple& t) {
  if (!t.real_structure) throw DomainError("triple has no real structure");
  return t.real_structure->unitary;
}

double dirac_scale(const FiniteSpectralTriple& t) { return std::max(1.0, operator_norm(t.dirac)); }

std::vector<ComplexMatrix> j_images(const FiniteSpectralTriple& t) {
  std::vector<ComplexMatrix> out;
  for (std::size_t a = 0; a < t.algebra.real_dim(); ++a) out.push_back(t.j_conjugate(t.rep.real_image(a)));
  return out;
}

}  // namespace

ComplexMatrix FiniteSpectralTriple::gamma() const {
  return grading ? *grading : ComplexMatrix::identity(hilbert_dim());
}

ComplexMatrix FiniteSpectralTriple::j_conjugate(const ComplexMatrix& x) const {
  return antiunitary_conjugate(require_j(*this), x);
}

void FiniteSpectralTriple::validate() const {
  const std::size_t n = hilbert_dim();
  if (dirac.rows() != n || dirac.cols() != n) throw ShapeError("Dirac operator must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!is_hermitian(dirac, 1e-12)) throw DomainError("Dirac operator is not self-adjoint");
  if (grading) {
    if (grading->rows() != n || grading->cols() != n) throw ShapeError("grading has the wrong size");
    if (!is_hermitian(*grading, 1e-10)) throw DomainError("grading is not self-adjoint");
    if ((*grading * *grading - ComplexMatrix::identity(n)).max_abs() > 1e-10) throw DomainError("grading does not square to the identity");
  }
  if (real_structure) {
    const auto& u = real_structure->unitary;
    if (u.rows() != n || u.cols() != n) throw ShapeError("real structure unitary has the wrong size");
    if (!is_unitary(u, 1e-10)) throw DomainError("real structure matrix is not unitary");
  }
  if (kr_dim < 0 || kr_dim > 7) throw std::invalid_argument("kr_dim must lie in [0, 8)");
}

FiniteSpectralTriple make_triple(FiniteAlgebra algebra, Representation rep, ComplexMatrix dirac,
                                 std::optional<ComplexMatrix> grading, std::optional<RealStructure> real_structure,
                                 int kr_dim) {
  FiniteSpectralTriple t{std::move(algebra), std::move(rep), std::move(dirac), std::move(grading),
                         std::move(real_structure), ((kr_dim % 8) + 8) % 8};
  t.validate();
  return t;
}

KrSigns kr_signs(int n) {
  switch (((n % 8) + 8) % 8) {
    case 0: return {1, 1, 1};
    case 1: return {1, -1, std::nullopt};
    case 2: return {-1, 1, -1};
    case 3: return {-1, 1, std::nullopt};
    case 4: return {-1, 1, 1};
    case 5: return {-1, -1, std::nullopt};
    case 6: return {1, 1, -1};
    default: return {1, 1, std::nullopt};
  }
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

double max_operator_norm(const std::vector<ComplexMatrix>& ms, std::size_t* worst_index) {
  std::size_t dim = 1;
  for (const auto& m : ms) dim = std::max(dim, std::min(m.rows(), m.cols()));
  WorstNorm w(dim);
  for (std::size_t i = 0; i < ms.size(); ++i) w.add(ms[i], std::to_string(i));
  const auto [v, label] = w.result();
  if (worst_index) *worst_index = label.empty() ? 0 : std::stoul(label);
  return v;
}

AxiomCheck check_grading(const FiniteSpectralTriple& t) {
  if (!t.grading) {
    AxiomCheck c = finish("grading", 0.0, kStructuralTolerance, "");
    c.witness = "odd triple (Gamma = I)";
    return c;
  }
  const ComplexMatrix& g = *t.grading;
  const std::size_t n = t.hilbert_dim();
  WorstNorm w(n);
  w.add(g.adjoint() - g, "Gamma not self-adjoint");
  w.add(g * g - ComplexMatrix::identity(n), "Gamma^2 != I");
  for (std::size_t a = 0; a < t.algebra.real_dim(); ++a) {
    w.add(commutator(g, t.rep.real_image(a)), "[Gamma, pi(" + basis_label(t.algebra, a) + ")] != 0");
  }
  w.add(anticommutator(g, t.dirac), "Gamma D + D Gamma != 0");
  const auto [res, label] = w.result();
  return finish("grading", res, kStructuralTolerance * dirac_scale(t), label);
}

std::vector<AxiomCheck> check_reality_signs(const FiniteSpectralTriple& t) {
  const ComplexMatrix& u = require_j(t);
  const KrSigns s = kr_signs(t.kr_dim);
  const std::size_t n = t.hilbert_dim();
  const std::string tag = " (n=" + std::to_string(t.kr_dim) + ")";
  std::vector<AxiomCheck> out;

  const ComplexMatrix j2 = u * u.conjugate();
  out.push_back(finish("J^2 = " + std::string(s.epsilon > 0 ? "+" : "-") + "I",
                       operator_norm(j2 - static_cast<double>(s.epsilon) * ComplexMatrix::identity(n)),
                       kStructuralTolerance, "J^2 sign mismatch" + tag));

  const ComplexMatrix jd = u * t.dirac.conjugate() - static_cast<double>(s.epsilon_prime) * (t.dirac * u);
  out.push_back(finish(std::string("JD = ") + (s.epsilon_prime > 0 ? "+" : "-") + "DJ", operator_norm(jd),
                       kStructuralTolerance * dirac_scale(t), "JD sign mismatch" + tag));

  if (s.epsilon_second) {
    const ComplexMatrix g = t.gamma();
    const ComplexMatrix jg = u * g.conjugate() - static_cast<double>(*s.epsilon_second) * (g * u);
    out.push_back(finish(std::string("JGamma = ") + (*s.epsilon_second > 0 ? "+" : "-") + "GammaJ", operator_norm(jg),
                         kStructuralTolerance, "JGamma sign mismatch" + tag));
  }
  return out;
}

AxiomCheck check_zeroth_order(const FiniteSpectralTriple& t) {
  const auto jb = j_images(t);
  WorstNorm w(t.hilbert_dim());
  for (std::size_t a = 0; a < jb.size(); ++a) {
    for (std::size_t b = 0; b < jb.size(); ++b) {
      w.add(commutator(t.rep.real_image(a), jb[b]),
            "[pi(" + basis_label(t.algebra, a) + "), J pi(" + basis_label(t.algebra, b) + ") J^-1] != 0");
    }
  }
  const auto [res, label] = w.result();
  return finish("zeroth order", res, kStructuralTolerance, label);
}

AxiomCheck check_first_order(const FiniteSpectralTriple& t) {
  const auto jb = j_images(t);
  WorstNorm w(t.hilbert_dim());
  for (std::size_t a = 0; a < jb.size(); ++a) {
    const ComplexMatrix da = commutator(t.dirac, t.rep.real_image(a));
    if (da.max_abs() == 0.0) continue;
    for (std::size_t b = 0; b < jb.size(); ++b) {
      w.add(commutator(da, jb[b]),
            "[[D, pi(" + basis_label(t.algebra, a) + ")], J pi(" + basis_label(t.algebra, b) + ") J^-1] != 0");
    }
  }
  const auto [res, label] = w.result();
  return finish("first order", res, kStructuralTolerance * dirac_scale(t), label);
}

AxiomCheck check_orientability(const FiniteSpectralTriple& t) {
  const auto jb = j_images(t);
  const std::size_t r = jb.size();
  const RVector target = as_real_vector(t.gamma());

  // Modified Gram-Schmidt with reorthogonalization over the products
  // π(e_α) J π(e_β) J⁻¹, keeping the triangular factor to recover the
  // coefficients of the projection.
  std::vector<RVector> q;
  std::vector<std::size_t> accepted;
  std::vector<RVector> rcols;  // rcols[i][j] = ⟨q_j, term_i⟩
  for (std::size_t a = 0; a < r; ++a) {
    const ComplexMatrix& pa = t.rep.real_image(a);
    for (std::size_t b = 0; b < r; ++b) {
      RVector v = as_real_vector(pa * jb[b]);
      const double n0 = norm(v);
      if (n0 == 0.0) continue;
      RVector coeff(q.size() + 1, 0.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < q.size(); ++j) {
          const double c = dot(q[j], v);
          coeff[j] += c;
          for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * q[j][i];
        }
      }
      const double nv = norm(v);
      if (nv <= 1e-10 * n0) continue;
      for (auto& x : v) x /= nv;
      coeff.back() = nv;
      q.push_back(std::move(v));
      rcols.push_back(std::move(coeff));
      accepted.push_back(a * r + b);
    }
  }

  RVector rhs(q.size(), 0.0);
  RVector rest = target;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      const double c = dot(q[j], rest);
      rhs[j] += c;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= c * q[j][i];
    }
  }
  const double residual = norm(rest);

  // Back substitution R c = rhs, R upper triangular with columns rcols.
  const std::size_t m = q.size();
  RVector c(m, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    double s = rhs[i];
    for (std::size_t k = i + 1; k < m; ++k) s -= rcols[k][i] * c[k];
    c[i] = s / rcols[i][i];
  }

  AxiomCheck out = finish("orientability", residual, kLeastSquaresTolerance * norm(target),
                          "Gamma is not in the span of pi(a) J pi(b) J^-1");
  out.coefficients.assign(r * r, 0.0);
  for (std::size_t i = 0; i < m; ++i) out.coefficients[accepted[i]] = c[i];
  return out;
}

std::vector<std::vector<long long>> intersection_matrix(const FiniteSpectralTriple& t,
                                                        const std::vector<Projector>& projectors) {
  require_j(t);
  std::vector<ComplexMatrix> pis;
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const auto& p = projectors[i];
    if (p.component >= t.algebra.size()) throw std::out_of_range("projector " + std::to_string(i) + ": unknown component");
    const ComplexMatrix& m = p.matrix;
    if (!m.is_square() || (m * m - m).max_abs() > 1e-10 || (m.adjoint() - m).max_abs() > 1e-10) {
      throw DomainError("projector " + std::to_string(i) + " is not a self-adjoint idempotent");
    }
    pis.push_back(t.rep.apply(t.algebra, t.algebra.embed(p.component, m)));
  }
  const ComplexMatrix g = t.gamma();
  std::vector<std::vector<long long>> out(pis.size(), std::vector<long long>(pis.size()));
  for (std::size_t i = 0; i < pis.size(); ++i) {
    const ComplexMatrix left = g * pis[i];
    for (std::size_t j = 0; j < pis.size(); ++j) {
      const Complex v = (left * t.j_conjugate(pis[j])).trace();
      const double rounded = std::round(v.real());
      if (std::abs(v.imag()) > 1e-8 || std::abs(v.real() - rounded) > 1e-8) {
        std::ostringstream msg;
        msg << "intersection entry (" << i << "," << j << ") = " << v.real() << "+" << v.imag() << "i is not an integer";
        throw DomainError(msg.str());
      }
      out[i][j] = static_cast<long long>(rounded);
    }
  }
  return out;
}

AxiomCheck check_poincare(const std::vector<std::vector<long long>>& m) {
  const long long det = integer_determinant(m);
  const double mag = std::abs(static_cast<double>(det));
  AxiomCheck c = finish("Poincare duality", std::max(0.0, 0.5 - mag), 0.0, "intersection form is degenerate (det = 0)");
  c.value = static_cast<double>(det);
  return c;
}

AxiomReport check_all(const FiniteSpectralTriple& t, const std::vector<Projector>& projectors) {
  AxiomReport r;
  for (const char* name : {"dimension", "regularity", "finiteness"}) {
    AxiomCheck c = finish(name, 0.0, 0.0, "");
    c.witness = "automatic in finite dimension";
    r.checks.push_back(std::move(c));
  }
  r.checks.push_back(check_grading(t));
  if (t.real_structure) {
    for (auto& c : check_reality_signs(t)) r.checks.push_back(std::move(c));
    r.checks.push_back(check_zeroth_order(t));
    r.checks.push_back(check_first_order(t));
    r.checks.push_back(check_orientability(t));
    if (!projectors.empty()) r.checks.push_back(check_poincare(intersection_matrix(t, projectors)));
  }
  return r;
}

FiniteSpectralTriple product_triple(const FiniteSpectralTriple& te, const FiniteSpectralTriple& ti) {
  if (!te.grading) throw std::invalid_argument("product_triple: the first factor must be even");
  const auto scalar_c = [](const FiniteSpectralTriple& t) {
    if (t.algebra.size() != 1 || t.algebra.component(0).kind != ComponentKind::C) return false;
    return (t.rep.image(0, 1) - Complex{0.0, 1.0} * t.rep.image(0, 0)).max_abs() <= 1e-12;
  };
  const ComplexMatrix ie = ComplexMatrix::identity(te.hilbert_dim());
  const ComplexMatrix ii = ComplexMatrix::identity(ti.hilbert_dim());

  FiniteAlgebra alg;
  std::vector<std::vector<ComplexMatrix>> images;
  if (scalar_c(te)) {
    alg = ti.algebra;
    for (const auto& comp : ti.rep.images()) {
      auto& out = images.emplace_back();
      for (const auto& m : comp) out.push_back(kron(ie, m));
    }
  } else if (scalar_c(ti)) {
    alg = te.algebra;
    for (const auto& comp : te.rep.images()) {
      auto& out = images.emplace_back();
      for (const auto& m : comp) out.push_back(kron(m, ii));
    }
  } else {
    throw std::invalid_argument("product_triple: one factor's algebra must be C acting by scalars");
  }
  Representation rep(alg, te.hilbert_dim() * ti.hilbert_dim(), std::move(images));
  ComplexMatrix d = kron(te.dirac, ii) + kron(*te.grading, ti.dirac);
  std::optional<ComplexMatrix> g;
  if (ti.grading) g = kron(*te.grading, *ti.grading);
  std::optional<RealStructure> j;
  if (te.real_structure && ti.real_structure) j = RealStructure{kron(te.real_structure->unitary, ti.real_structure->unitary)};
  return make_triple(std::move(alg), std::move(rep), std::move(d), std::move(g), std::move(j), te.kr_dim + ti.kr_dim);
}

}  // namespace nctk
