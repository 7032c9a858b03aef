// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#include "nctk/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace nctk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The seminorm restricted to the complement of the kernel, in coordinates y
// where [D, π(a)] = -i Σ y_j X_j with {X_j} hermitian and Frobenius
// orthonormal. Rescaling D leaves the X_j unchanged.
struct ReducedProblem {
  std::vector<ComplexMatrix> x;   // X_j
  RVector g;                      // δ in y coordinates
  std::vector<RVector> to_sa;     // y_j ↦ sa coordinates
  std::vector<RVector> kernel;    // orthonormal, sa coordinates
};

ReducedProblem reduce(const FiniteSpectralTriple& t, double kernel_tolerance) {
  const std::size_t s = t.algebra.sa_dim();
  std::vector<ComplexMatrix> b;
  std::vector<RVector> cols;
  for (std::size_t a = 0; a < s; ++a) {
    b.push_back(commutator(t.dirac, t.rep.real_image(t.algebra.sa_to_real(a))));
    cols.push_back(as_real_vector(b.back()));
  }
  const RealSvd svd = real_svd(cols);
  const double dn = operator_norm(t.dirac);
  const double thr = dn > 0.0 ? kernel_tolerance * dn : 1e-12;

  ReducedProblem p;
  for (std::size_t j = 0; j < s; ++j) {
    const double sigma = svd.singular_values[j];
    const RVector& v = svd.right[j];
    if (sigma < thr) {
      p.kernel.push_back(v);
      continue;
    }
    ComplexMatrix xj(t.hilbert_dim(), t.hilbert_dim());
    for (std::size_t a = 0; a < s; ++a) {
      if (v[a] != 0.0) xj += Complex{0.0, v[a] / sigma} * b[a];
    }
    p.x.push_back(0.5 * (xj + xj.adjoint()));
    RVector back(v);
    for (auto& c : back) c /= sigma;
    p.to_sa.push_back(std::move(back));
  }
  return p;
}

ComplexMatrix combine(const ReducedProblem& p, std::span<const double> y) {
  ComplexMatrix h(p.x.front().rows(), p.x.front().cols());
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j] != 0.0) h += y[j] * p.x[j];
  }
  return h;
}

double spectral_radius(const HermitianEigen& e) {
  return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
}

struct RestartOutcome {
  double value = 0.0;  // g·y / ‖H(y)‖ at the best feasible point found
  RVector y;
  int iterations = 0;
  bool converged = false;
};

// Projected subgradient ascent on the ratio g·y / ‖H(y)‖ with steps c/√k.
void subgradient_phase(const ReducedProblem& p, RVector y, const SolverOptions& opts, RestartOutcome& out) {
  const std::size_t r = y.size();
  auto e = hermitian_eig(combine(p, y));
  double phi = spectral_radius(e);
  if (phi == 0.0) return;
  for (auto& c : y) c /= phi;
  const auto record = [&](const RVector& cand) {
    const double f = dot(p.g, cand);
    if (f > out.value) {
      out.value = f;
      out.y = cand;
      return true;
    }
    return false;
  };
  record(y);
  // Stop once a window of kStallWindow steps improves the ratio by less
  // than kStallGain (relative); the smoothing phase polishes the result.
  constexpr int kStallWindow = 100;
  constexpr double kStallGain = 1e-4;
  double window_start = out.value;
  for (int k = 1; k <= opts.max_iterations; ++k) {
    ++out.iterations;
    // Dominant eigenpair of H(y) gives a subgradient of ‖H(y)‖.
    const std::size_t top = std::abs(e.values.front()) > std::abs(e.values.back()) ? 0 : e.values.size() - 1;
    const double sign = e.values[top] >= 0.0 ? 1.0 : -1.0;
    CVector v(e.vectors.rows());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = e.vectors(i, top);
    const double f = dot(p.g, y);
    RVector grad(r);
    for (std::size_t j = 0; j < r; ++j) {
      const CVector xv = p.x[j] * std::span<const Complex>(v);
      grad[j] = p.g[j] - f * sign * dot(v, xv).real();
    }
    const double gn = norm(grad);
    if (gn <= 1e-15 * norm(p.g)) {
      out.converged = true;
      break;
    }
    const double step = opts.step_scale * norm(y) / (gn * std::sqrt(static_cast<double>(k)));
    for (std::size_t j = 0; j < r; ++j) y[j] += step * grad[j];
    e = hermitian_eig(combine(p, y));
    phi = spectral_radius(e);
    if (phi == 0.0) break;
    for (auto& c : y) c /= phi;
    record(y);
    if (k % kStallWindow == 0) {
      if (out.value <= window_start * (1.0 + kStallGain)) break;
      window_start = out.value;
    }
  }
}

// Smooth max(|λ|) by τ·log Σ (e^{λ/τ} + e^{−λ/τ}) and minimize it with BFGS
// over the slice g·y = 1, lowering τ by decades.
void smoothing_phase(const ReducedProblem& p, const SolverOptions& opts, RestartOutcome& out) {
  const std::size_t r = p.g.size();
  const double gg = dot(p.g, p.g);
  RVector y0(p.g);
  for (auto& c : y0) c /= gg;

  // Orthonormal basis of g⊥.
  std::vector<RVector> nb;
  for (std::size_t i = 0; i < r && nb.size() + 1 < r; ++i) {
    RVector v(r, 0.0);
    v[i] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      const double cg = dot(p.g, v) / gg;
      for (std::size_t j = 0; j < r; ++j) v[j] -= cg * p.g[j];
      for (const auto& w : nb) {
        const double c = dot(w, v);
        for (std::size_t j = 0; j < r; ++j) v[j] -= c * w[j];
      }
    }
    const double nv = norm(v);
    if (nv > 1e-8) {
      for (auto& c : v) c /= nv;
      nb.push_back(std::move(v));
    }
  }
  const std::size_t m = nb.size();

  const auto lift = [&](const RVector& z) {
    RVector y(y0);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < r; ++j) y[j] += z[k] * nb[k][j];
    }
    return y;
  };

  RVector z(m, 0.0);
  {
    const double f = dot(p.g, out.y);
    if (f > 0.0) {
      for (std::size_t k = 0; k < m; ++k) z[k] = dot(nb[k], out.y) / f;
    }
  }

  double tau = 0.0;
  // Returns the smoothed value and fills its gradient in z coordinates;
  // records the exact ratio at every evaluated point.
  const auto evaluate = [&](const RVector& zz, RVector* grad) {
    const RVector y = lift(zz);
    const auto e = hermitian_eig(combine(p, y));
    const double mx = spectral_radius(e);
    if (mx > 0.0 && 1.0 / mx > out.value) {
      out.value = 1.0 / mx;
      out.y = y;
    }
    const std::size_t n = e.values.size();
    double zsum = 0.0;
    RVector w(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::exp((e.values[i] - mx) / tau);
      const double b = std::exp((-e.values[i] - mx) / tau);
      zsum += a + b;
      w[i] = a - b;
    }
    if (grad) {
      ComplexMatrix gm(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        const double wi = w[i] / zsum;
        if (std::abs(wi) < 1e-300) continue;
        for (std::size_t a = 0; a < n; ++a) {
          const Complex va = e.vectors(a, i);
          if (va == Complex{0.0, 0.0}) continue;
          for (std::size_t b = 0; b < n; ++b) gm(a, b) += wi * va * std::conj(e.vectors(b, i));
        }
      }
      RVector gy(r);
      for (std::size_t j = 0; j < r; ++j) gy[j] = real_inner(gm, p.x[j]);
      grad->assign(m, 0.0);
      for (std::size_t k = 0; k < m; ++k) (*grad)[k] = dot(nb[k], gy);
    }
    return mx + tau * std::log(zsum);
  };

  if (m == 0) {
    evaluate(z, nullptr);
    out.converged = true;
    return;
  }

  double previous_stage = out.value;
  bool stable = false;
  for (double rel = opts.temperature; rel >= 1e-11 * 0.999; rel *= 0.1) {
    const double start_value = out.value;
    tau = rel / std::max(out.value, 1e-300);  // τ relative to ‖H‖ = 1/value
    RVector grad;
    double fz = evaluate(z, &grad);
    std::vector<RVector> hinv(m, RVector(m, 0.0));
    for (std::size_t k = 0; k < m; ++k) hinv[k][k] = 1.0;
    bool scaled = false;
    for (int it = 0; it < 200; ++it) {
      ++out.iterations;
      const double gnorm = norm(grad);
      if (gnorm <= 1e-14 * std::max(1.0, std::abs(fz))) break;
      RVector dir(m, 0.0);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) dir[a] -= hinv[a][b] * grad[b];
      }
      double slope = dot(dir, grad);
      if (slope >= 0.0) {
        for (std::size_t a = 0; a < m; ++a) dir[a] = -grad[a];
        slope = -gnorm * gnorm;
        for (std::size_t k = 0; k < m; ++k) std::fill(hinv[k].begin(), hinv[k].end(), 0.0), hinv[k][k] = 1.0;
      }
      double step = 1.0;
      RVector zn(m), gn;
      double fn = 0.0;
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        for (std::size_t a = 0; a < m; ++a) zn[a] = z[a] + step * dir[a];
        fn = evaluate(zn, &gn);
        if (fn <= fz + 1e-4 * step * slope) {
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
      RVector s(m), yk(m);
      for (std::size_t a = 0; a < m; ++a) {
        s[a] = zn[a] - z[a];
        yk[a] = gn[a] - grad[a];
      }
      const double sy = dot(s, yk);
      const double decrease = fz - fn;
      z = zn;
      grad = gn;
      fz = fn;
      if (sy > 1e-300) {
        if (!scaled) {
          const double gamma = sy / dot(yk, yk);
          for (std::size_t k = 0; k < m; ++k) {
            std::fill(hinv[k].begin(), hinv[k].end(), 0.0);
            hinv[k][k] = gamma;
          }
          scaled = true;
        }
        // H ← (I − ρ s yᵀ) H (I − ρ y sᵀ) + ρ s sᵀ
        const double rho = 1.0 / sy;
        RVector hy(m, 0.0);
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) hy[a] += hinv[a][b] * yk[b];
        }
        const double yhy = dot(yk, hy);
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = 0; b < m; ++b) {
            hinv[a][b] += rho * ((1.0 + rho * yhy) * s[a] * s[b] - hy[a] * s[b] - s[a] * hy[b]);
          }
        }
      }
      if (decrease <= 1e-16 * std::max(1.0, std::abs(fz))) break;
    }
    stable = std::abs(out.value - start_value) <= opts.tolerance * out.value &&
             std::abs(out.value - previous_stage) <= opts.tolerance * out.value;
    previous_stage = start_value;
  }
  out.converged = stable;
}

RestartOutcome run_restart(const ReducedProblem& p, const SolverOptions& opts, int index) {
  const std::size_t r = p.g.size();
  RVector y(r);
  if (index == 0) {
    y = p.g;
  } else {
    std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index));
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto& c : y) c = normal(rng);
    double f = dot(p.g, y);
    if (f < 0.0) {
      for (auto& c : y) c = -c;
      f = -f;
    }
    if (f <= 1e-8 * norm(y) * norm(p.g)) {
      for (std::size_t j = 0; j < r; ++j) y[j] += p.g[j];
    }
  }
  RestartOutcome out;
  out.y = y;
  subgradient_phase(p, y, opts, out);
  return out;
}

int worker_count(const SolverOptions& opts) {
  if (opts.threads > 0) return opts.threads;
  if (const char* env = std::getenv("NCTK_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RVector delta_coords(const FiniteSpectralTriple& t, const PureState& w1, const PureState& w2) {
  RVector d = state_functional_coords(t.algebra, w1);
  const RVector d2 = state_functional_coords(t.algebra, w2);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= d2[i];
  return d;
}

bool pairs_with_kernel(const std::vector<RVector>& kernel, const RVector& delta) {
  RVector proj(kernel.size());
  for (std::size_t k = 0; k < kernel.size(); ++k) proj[k] = dot(kernel[k], delta);
  return norm(proj) > 1e-9;
}

}  // namespace

void SolverOptions::validate() const {
  if (restarts <= 0 || max_iterations <= 0 || !(tolerance > 0.0) || !(kernel_tolerance > 0.0) || threads < 0 ||
      !(temperature > 0.0) || !(step_scale > 0.0)) {
    throw std::invalid_argument("solver options must be positive");
  }
}

bool DistanceResult::is_infinite() const noexcept { return std::isinf(value); }

std::vector<RVector> commutator_kernel(const FiniteSpectralTriple& t, double kernel_tolerance) {
  return reduce(t, kernel_tolerance).kernel;
}

bool is_infinite(const FiniteSpectralTriple& t, const PureState& w1, const PureState& w2, double kernel_tolerance) {
  return pairs_with_kernel(commutator_kernel(t, kernel_tolerance), delta_coords(t, w1, w2));
}

DistanceResult spectral_distance(const FiniteSpectralTriple& t, const PureState& w1, const PureState& w2,
                                 const SolverOptions& opts) {
  opts.validate();
  const std::size_t s = t.algebra.sa_dim();
  DistanceResult res;
  const RVector delta = delta_coords(t, w1, w2);
  if (same_state(w1, w2) || norm(delta) == 0.0) {
    res.maximizer = RVector(s, 0.0);
    res.converged = true;
    return res;
  }
  ReducedProblem p = reduce(t, opts.kernel_tolerance);
  if (pairs_with_kernel(p.kernel, delta)) {
    res.value = kInf;
    res.converged = true;
    return res;
  }
  const std::size_t r = p.x.size();
  p.g.resize(r);
  for (std::size_t j = 0; j < r; ++j) p.g[j] = dot(p.to_sa[j], delta);
  if (norm(p.g) <= 1e-14 * norm(delta)) {
    // δ vanishes on every element outside the kernel.
    res.maximizer = RVector(s, 0.0);
    res.converged = true;
    return res;
  }

  RestartOutcome best;
  if (r == 1) {
    // One direction: the sup is attained at y = sign(g)/‖X₀‖.
    const double phi = operator_norm(p.x[0]);
    best.y = {(p.g[0] > 0.0 ? 1.0 : -1.0) / phi};
    best.value = std::abs(p.g[0]) / phi;
    best.converged = true;
    res.restarts_used = 1;
  } else {
    const int workers = worker_count(opts);
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opts.restarts));
    if (workers <= 1) {
      for (int i = 0; i < opts.restarts; ++i) outcomes[i] = run_restart(p, opts, i);
    } else {
      for (int base = 0; base < opts.restarts; base += workers) {
        std::vector<std::future<RestartOutcome>> batch;
        for (int i = base; i < std::min(opts.restarts, base + workers); ++i) {
          batch.push_back(std::async(std::launch::async, run_restart, std::cref(p), std::cref(opts), i));
        }
        for (std::size_t k = 0; k < batch.size(); ++k) outcomes[base + k] = batch[k].get();
      }
    }
    // Deterministic merge: largest value, earliest restart on ties.
    std::size_t pick = 0;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
      if (outcomes[i].value > outcomes[pick].value) pick = i;
    }
    best = outcomes[pick];
    best.iterations = 0;
    for (const auto& o : outcomes) best.iterations += o.iterations;
    // The problem is convex in y, so one smoothing run from the best point
    // suffices.
    if (best.value > 0.0) smoothing_phase(p, opts, best);
    res.restarts_used = opts.restarts;
  }

  // Map back to sa coordinates and certify feasibility on the actual
  // commutator.
  RVector a(s, 0.0);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = 0; k < s; ++k) a[k] += best.y[j] * p.to_sa[j][k];
  }
  const double constraint = operator_norm(commutator(t.dirac, t.rep.apply_sa(t.algebra, a)));
  for (auto& c : a) c /= constraint;
  res.value = dot(delta, a);
  res.maximizer = std::move(a);
  res.achieved_constraint = operator_norm(commutator(t.dirac, t.rep.apply_sa(t.algebra, *res.maximizer)));
  res.iterations = best.iterations;
  res.converged = best.converged;
  return res;
}

double closed_form_m2(double d1, double d2, std::span<const Complex> xi, std::span<const Complex> zeta) {
  const auto a = hopf_project(xi);
  const auto b = hopf_project(zeta);
  const double chord = std::hypot(a[0] - b[0], a[1] - b[1]);
  const bool same = std::abs(a[2] - b[2]) <= 1e-12 && chord <= 1e-12;
  if (d1 == d2) return same ? 0.0 : kInf;
  if (std::abs(a[2] - b[2]) > 1e-12) return kInf;
  return 2.0 / std::abs(d1 - d2) * chord;
}

ClosedForm closed_form_two_point(std::span<const Complex> m, const TwoPointState& lhs, const TwoPointState& rhs) {
  const double mn = norm(m);
  if (mn == 0.0) throw std::invalid_argument("closed_form_two_point: m must be nonzero");
  CVector mhat(m.begin(), m.end());
  for (auto& c : mhat) c /= mn;

  const auto check_unit = [&](const CVector& v) {
    if (v.size() != m.size()) throw ShapeError("closed_form_two_point: state dimension differs from m");
    if (std::abs(norm(v) - 1.0) > 1e-12) throw DomainError("closed_form_two_point: state is not a unit vector");
  };
  // Component orthogonal to m̂.
  const auto tail = [&](const CVector& v) {
    const Complex c = dot(mhat, v);
    CVector out(v);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * mhat[i];
    return out;
  };

  const bool lc = std::holds_alternative<TwoPointC>(lhs);
  const bool rc = std::holds_alternative<TwoPointC>(rhs);
  if (lc && rc) return {true, 0.0, "same state"};
  if (lc || rc) {
    const CVector& v = std::get<CVector>(lc ? rhs : lhs);
    check_unit(v);
    if (norm(tail(v)) <= 1e-9) return {true, 1.0 / mn, "C state vs the state along m"};
    return {true, kInf, "C state vs a state not along m"};
  }
  const CVector& xi = std::get<CVector>(lhs);
  const CVector& zeta = std::get<CVector>(rhs);
  check_unit(xi);
  check_unit(zeta);
  const double overlap = std::abs(dot(xi, zeta));
  const CVector p = tail(xi);
  const CVector q = tail(zeta);
  const double np = norm(p);
  const double nq = norm(q);
  bool aligned = np <= 1e-9 && nq <= 1e-9;
  if (!aligned) {
    const Complex c = dot(q, p);
    if (std::abs(c) > 1e-12) {
      const Complex phase = c / std::abs(c);
      CVector diff(p);
      for (std::size_t i = 0; i < p.size(); ++i) diff[i] -= phase * q[i];
      aligned = norm(diff) <= 1e-9;
    }
  }
  if (!aligned) return {false, 0.0, "not covered by closed form: components orthogonal to m differ beyond a phase"};
  return {true, 2.0 / mn * std::sqrt(std::max(0.0, 1.0 - overlap * overlap)), "tail-phase pair"};
}

}  // namespace nctk
