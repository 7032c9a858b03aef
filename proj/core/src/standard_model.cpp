// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "nctk/standard_model.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nctk/oneforms.hpp"

namespace nctk {

namespace {

constexpr std::size_t kH = 0;
constexpr std::size_t kC = 1;
constexpr std::size_t kM3 = 2;

FiniteAlgebra sm_algebra() {
  return FiniteAlgebra({make_component(ComponentKind::H, 2, "H"), make_component(ComponentKind::C, 1, "C"),
                        make_component(ComponentKind::Mn, 3, "M3")});
}

// π(q, b, c) on ℂ^{30N}.
ComplexMatrix sm_image(std::size_t n, const ComplexMatrix& q, Complex b, const ComplexMatrix& c) {
  const std::size_t half = 15 * n;
  ComplexMatrix m(2 * half, 2 * half);
  const Complex bb = std::conj(b);
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t t = 0; t < 2; ++t) {
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t k = 0; k < 3; ++k) m(s * 3 * n + g * 3 + k, t * 3 * n + g * 3 + k) = q(s, t);
        m(6 * n + s * n + g, 6 * n + t * n + g) = q(s, t);
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t k = 0; k < 3; ++k) {
      m(8 * n + g * 3 + k, 8 * n + g * 3 + k) = b;
      m(11 * n + g * 3 + k, 11 * n + g * 3 + k) = bb;
    }
    m(14 * n + g, 14 * n + g) = bb;
  }
  // Antiparticles: color action on quarks, b̄ on leptons.
  for (const std::size_t base : {std::size_t{0}, 8 * n}) {
    for (std::size_t slot = 0; slot < 2 * n; ++slot) {
      const std::size_t o = half + base + slot * 3;
      for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) m(o + k, o + l) = c(k, l);
      }
    }
  }
  for (std::size_t i = 6 * n; i < 8 * n; ++i) m(half + i, half + i) = bb;
  for (std::size_t i = 14 * n; i < 15 * n; ++i) m(half + i, half + i) = bb;
  return m;
}

std::vector<std::vector<ComplexMatrix>> sm_images(const FiniteAlgebra& alg, std::size_t n) {
  std::vector<std::vector<ComplexMatrix>> images(alg.size());
  for (std::size_t k = 0; k < alg.size(); ++k) {
    for (const auto& e : alg.component(k).real_basis) {
      const AlgebraElement x = alg.embed(k, e);
      images[k].push_back(sm_image(n, x[kH], x[kC](0, 0), x[kM3]));
    }
  }
  return images;
}

ComplexMatrix doublet_matrix(const HiggsDoublet& h) {
  return ComplexMatrix{{1.0 + h.h1, -std::conj(h.h2)}, {h.h2, 1.0 + std::conj(h.h1)}};
}

ComplexMatrix particle_dirac(const ComplexMatrix& m) {
  const std::size_t l = m.rows();
  const std::size_t r = m.cols();
  ComplexMatrix d(l + r, l + r);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      d(i, l + j) = m(i, j);
      d(l + j, i) = std::conj(m(i, j));
    }
  }
  return d;
}

}  // namespace

ComplexMatrix ckm_from_angles(double theta12, double theta13, double theta23, double delta) {
  const double c12 = std::cos(theta12), s12 = std::sin(theta12);
  const double c13 = std::cos(theta13), s13 = std::sin(theta13);
  const double c23 = std::cos(theta23), s23 = std::sin(theta23);
  const Complex e = std::polar(1.0, delta);
  return ComplexMatrix{{c12 * c13, s12 * c13, s13 * std::conj(e)},
                       {-s12 * c23 - c12 * s23 * s13 * e, c12 * c23 - s12 * s23 * s13 * e, s23 * c13},
                       {s12 * s23 - c12 * c23 * s13 * e, -c12 * s23 - s12 * c23 * s13 * e, c23 * c13}};
}

void SMParams::validate() const {
  if (generations == 0) throw std::invalid_argument("at least one generation is required");
  for (const auto* v : {&up, &down, &lepton}) {
    if (v->size() != generations) throw std::invalid_argument("mass lists must have one entry per generation");
    for (double x : *v) {
      if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("masses must be positive and finite");
    }
  }
  if (ckm.rows() != generations || ckm.cols() != generations) throw std::invalid_argument("CKM matrix has the wrong size");
  if (!is_unitary(ckm, 1e-10)) throw std::invalid_argument("CKM matrix is not unitary");
}

double SMParams::top_mass() const {
  double m = 0.0;
  for (double x : up) m = std::max(m, x);
  return m;
}

double HiggsDoublet::weight() const noexcept { return std::norm(1.0 + h1) + std::norm(h2); }

double metric_coefficient(const SMParams& p, const HiggsDoublet& h) {
  const double mt = p.top_mass();
  return h.weight() * mt * mt;
}

ComplexMatrix mass_matrix(const SMParams& p, const HiggsDoublet& h) {
  p.validate();
  const std::size_t n = p.generations;
  const ComplexMatrix i3 = ComplexMatrix::identity(3);
  const ComplexMatrix mu = ComplexMatrix::diagonal(std::span<const double>(p.up));
  const ComplexMatrix md = p.ckm * ComplexMatrix::diagonal(std::span<const double>(p.down));
  const ComplexMatrix me = ComplexMatrix::diagonal(std::span<const double>(p.lepton));
  const ComplexMatrix e11{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix e22{{0.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix e2{{0.0}, {1.0}};
  const ComplexMatrix q = doublet_matrix(h);

  const ComplexMatrix quarks = kron(q, ComplexMatrix::identity(3 * n)) * (kron(e11, kron(mu, i3)) + kron(e22, kron(md, i3)));
  const ComplexMatrix leptons = kron(q * e2, me);

  ComplexMatrix m(8 * n, 7 * n);
  for (std::size_t i = 0; i < 6 * n; ++i) {
    for (std::size_t j = 0; j < 6 * n; ++j) m(i, j) = quarks(i, j);
  }
  for (std::size_t i = 0; i < 2 * n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(6 * n + i, 6 * n + j) = leptons(i, j);
  }
  return m;
}

StandardModelGeometry build_internal_triple(const SMParams& p) {
  p.validate();
  const std::size_t n = p.generations;
  const std::size_t half = 15 * n;
  FiniteAlgebra alg = sm_algebra();
  Representation rep(alg, 2 * half, sm_images(alg, n));

  const ComplexMatrix dp = particle_dirac(mass_matrix(p));
  ComplexMatrix d = direct_sum(dp, dp.conjugate());

  RVector g;
  for (int rep_half = 0; rep_half < 2; ++rep_half) {
    g.insert(g.end(), 8 * n, -1.0);
    g.insert(g.end(), 7 * n, 1.0);
  }
  ComplexMatrix u(2 * half, 2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    u(i, half + i) = 1.0;
    u(half + i, i) = 1.0;
  }
  return StandardModelGeometry{p, make_triple(std::move(alg), std::move(rep), std::move(d),
                                              ComplexMatrix::diagonal(std::span<const double>(g)),
                                              RealStructure{std::move(u)}, 0)};
}

std::vector<Projector> canonical_projectors(const FiniteSpectralTriple& sm) {
  ComplexMatrix e11(3, 3);
  e11(0, 0) = 1.0;
  return {Projector{sm.algebra.index_of("C"), ComplexMatrix{{1.0}}},
          Projector{sm.algebra.index_of("H"), ComplexMatrix::identity(2)},
          Projector{sm.algebra.index_of("M3"), e11}};
}

FiniteSpectralTriple higgs_fluctuation(const StandardModelGeometry& sm, const HiggsDoublet& h) {
  if (h.is_vacuum()) return sm.triple;
  const std::size_t n = sm.params.generations;
  const ComplexMatrix hp = particle_dirac(mass_matrix(sm.params, h) - mass_matrix(sm.params));
  ComplexMatrix full(30 * n, 30 * n);
  for (std::size_t i = 0; i < 15 * n; ++i) {
    for (std::size_t j = 0; j < 15 * n; ++j) full(i, j) = hp(i, j);
  }
  const double miss = span_residual(one_form_basis(sm.triple), full);
  if (miss > 1e-8 * std::max(1.0, full.frobenius_norm())) {
    throw DomainError("Higgs fluctuation is not a one-form (distance " + std::to_string(miss) + ")");
  }
  return scalar_fluctuation(sm.triple, GaugePotential(OneForm{{}, std::move(full)}), true);
}

DistanceResult sheet_distance(const FiniteSpectralTriple& fluctuated, const SolverOptions& opts) {
  const auto& alg = fluctuated.algebra;
  const PureState wc = make_state(alg, alg.index_of("C"), {Complex{1.0, 0.0}});
  const PureState wh = make_state(alg, alg.index_of("H"), {Complex{1.0, 0.0}, Complex{0.0, 0.0}});
  return spectral_distance(fluctuated, wc, wh, opts);
}

void NeutrinoExtension::validate() const {
  if (alpha < 0 || alpha > 3) throw std::invalid_argument("alpha must lie in [0, 3]");
  if (eps.size() != static_cast<std::size_t>(alpha)) throw std::invalid_argument("need exactly alpha epsilon values");
  for (int e : eps) {
    if (e != 1 && e != 2) throw std::invalid_argument("epsilon values must be 1 or 2");
  }
}

int NeutrinoExtension::eps_sum() const {
  int s = 0;
  for (int e : eps) s += e;
  return s;
}

std::vector<NeutrinoExtension> all_neutrino_extensions() {
  std::vector<NeutrinoExtension> out;
  for (int alpha = 0; alpha <= 3; ++alpha) {
    for (int mask = 0; mask < (1 << alpha); ++mask) {
      NeutrinoExtension x{alpha, {}};
      for (int i = 0; i < alpha; ++i) x.eps.push_back((mask >> (alpha - 1 - i)) & 1 ? 1 : 2);
      out.push_back(std::move(x));
    }
  }
  return out;
}

NeutrinoReport neutrino_extension_analysis(const NeutrinoExtension& x, const SMParams& p, double sterile_mass) {
  x.validate();
  return neutrino_extension_analysis(x, build_internal_triple(p), sterile_mass);
}

NeutrinoReport neutrino_extension_analysis(const NeutrinoExtension& x, const StandardModelGeometry& sm,
                                           double sterile_mass) {
  x.validate();
  NeutrinoReport rep;
  rep.extension = x;
  const long long s = x.eps_sum();
  rep.symbolic = {{6 + s, -6, 6}, {-6, 0, -6}, {6, -6, 0}};
  rep.formula_determinant = 36 * (6 - s);

  // Extended representation: a Dirac-type sterile neutrino adds a particle
  // state (b) and its antiparticle (b̄) exchanged by J; a Majorana-type one
  // adds a single state on which J is plain conjugation. All have Γ = +1.
  const FiniteSpectralTriple& t = sm.triple;
  std::size_t extra = 0;
  for (int e : x.eps) extra += static_cast<std::size_t>(e);
  const std::size_t n0 = t.hilbert_dim();
  const std::size_t n1 = n0 + extra;

  const auto extend = [&](const ComplexMatrix& m, const ComplexMatrix& tail) { return direct_sum(m, tail); };
  std::vector<std::vector<ComplexMatrix>> images(t.algebra.size());
  for (std::size_t k = 0; k < t.algebra.size(); ++k) {
    for (std::size_t j = 0; j < t.algebra.component(k).real_dim(); ++j) {
      ComplexMatrix tail(extra, extra);
      if (k == kC) {
        const Complex b = t.algebra.component(k).real_basis[j](0, 0);
        std::size_t pos = 0;
        for (int e : x.eps) {
          tail(pos, pos) = b;
          if (e == 2) tail(pos + 1, pos + 1) = std::conj(b);
          pos += static_cast<std::size_t>(e);
        }
      }
      images[k].push_back(extend(t.rep.image(k, j), tail));
    }
  }
  ComplexMatrix utail(extra, extra);
  {
    std::size_t pos = 0;
    for (int e : x.eps) {
      if (e == 2) {
        utail(pos, pos + 1) = 1.0;
        utail(pos + 1, pos) = 1.0;
      } else {
        utail(pos, pos) = 1.0;
      }
      pos += static_cast<std::size_t>(e);
    }
  }
  FiniteAlgebra alg = t.algebra;
  Representation r(alg, n1, std::move(images));
  const FiniteSpectralTriple ext =
      make_triple(std::move(alg), std::move(r), extend(t.dirac, ComplexMatrix(extra, extra)),
                  extend(*t.grading, ComplexMatrix::identity(extra)),
                  RealStructure{extend(t.real_structure->unitary, utail)}, 0);
  rep.numeric = intersection_matrix(ext, canonical_projectors(ext));
  rep.determinant = integer_determinant(rep.numeric);
  rep.poincare = rep.determinant != 0;

  // Grading obstruction on the block diag(b, b̄) with mass μ on the diagonal.
  // Only diagonal gradings commute with diag(b, b̄) (b = i separates the
  // two lines), so the four sign choices are exhaustive.
  const Complex mu = std::polar(sterile_mass, 0.3);
  const ComplexMatrix d = ComplexMatrix{{mu, 0.0}, {0.0, std::conj(mu)}};
  const ComplexMatrix rb = ComplexMatrix{{Complex{0.0, 1.0}, 0.0}, {0.0, Complex{0.0, -1.0}}};
  for (std::size_t i = 0; i < x.eps.size(); ++i) {
    if (x.eps[i] != 1) continue;
    double best = std::numeric_limits<double>::infinity();
    std::string best_grading;
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        const ComplexMatrix g{{static_cast<double>(sa), 0.0}, {0.0, static_cast<double>(sb)}};
        if (operator_norm(commutator(g, rb)) > 1e-12) continue;
        const double res = operator_norm(anticommutator(g, d));
        if (res < best) {
          best = res;
          best_grading = "diag(" + std::to_string(sa) + "," + std::to_string(sb) + ")";
        }
      }
    }
    std::ostringstream w;
    w << "sterile neutrino " << i + 1 << " (Majorana type): best grading " << best_grading
      << " leaves ||Gamma D + D Gamma|| = " << best;
    rep.obstructions.push_back({i, best, w.str()});
  }

  const bool all_dirac = rep.obstructions.empty();
  rep.admissible = all_dirac && rep.poincare;
  std::ostringstream v;
  if (!all_dirac) {
    v << "inadmissible: a neutrino identical to its antiparticle admits no compatible chirality";
  } else if (!rep.poincare) {
    v << "inadmissible: intersection form degenerate (det = 0), Poincare duality fails";
  } else {
    v << "admissible: det = " << rep.determinant;
  }
  rep.verdict = v.str();
  return rep;
}

}  // namespace nctk
