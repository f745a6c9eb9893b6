#include "bjorth/sphere_opt.hpp"

#include <cmath>
#include <limits>

#include "bjorth/line_search.hpp"

namespace bjorth {

namespace {

// Component of g tangent to the sphere at x (|x| = 1).
Vector tangent(const Vector& g, const Vector& x) {
  const double radial = inner(g, x).real();
  Vector t = g;
  for (std::size_t i = 0; i < t.dim(); ++i) t[i] -= radial * x[i];
  return t;
}

Vector retract(const Vector& x, double step, const Vector& direction) {
  Vector y = x;
  for (std::size_t i = 0; i < y.dim(); ++i) y[i] += step * direction[i];
  const double n = y.norm();
  if (n == 0.0) return x;
  for (std::size_t i = 0; i < y.dim(); ++i) y[i] /= n;
  return y;
}

}  // namespace

constexpr double kArmijo = 0.25;

AscentResult sphere_ascent(const SphereObjective& f, Vector x0, const AscentOptions& opts, Rng* rng) {
  const Field field = x0.field();
  Vector x = x0.normalized();
  Vector grad(x.dim(), field);
  double value = f(x, &grad);
  double step = -1.0;

  AscentResult best{x, value, 0, 0};
  int iterations = 0;
  int perturbations = 0;

  while (iterations < opts.max_iterations && best.value < opts.target) {
    ++iterations;
    Vector dir = tangent(grad, x);
    const double gnorm = dir.norm();

    bool improved = false;
    if (gnorm > opts.grad_tol) {
      if (step <= 0.0) step = 0.1 / gnorm;
      for (int halving = 0; halving < 60; ++halving) {
        Vector trial = retract(x, step, dir);
        Vector trial_grad(trial.dim(), field);
        const double v = f(trial, &trial_grad);
        if (v > value && v >= value + kArmijo * step * gnorm * gnorm) {
          x = std::move(trial);
          grad = std::move(trial_grad);
          value = v;
          improved = true;
          step *= 2.0;
          break;
        }
        step *= 0.5;
      }
    }
    if (value > best.value) {
      best.x = x;
      best.value = value;
    }
    if (improved) continue;

    // Stalled on a flat or non-smooth point: kick off it along a random tangent.
    if (!rng || perturbations >= opts.max_perturbations) break;
    ++perturbations;
    Vector kick = tangent(rng->unit_vector(x.dim(), field), x);
    x = retract(x, opts.perturbation_size, kick);
    value = f(x, &grad);
    step = -1.0;
  }
  best.iterations = iterations;
  best.perturbations = perturbations;
  return best;
}

}  // namespace bjorth

namespace bjorth {

SphereObjective inner_inf_objective(const Matrix& a, const Matrix& b, Field field) {
  return [a_adj = a.adjoint(), b_adj = b.adjoint(), a, b, field](const Vector& x, Vector* grad) {
    const Vector ax = a * x;
    const Vector bx = b * x;
    const double h = inner_inf(ax, bx, field).value;
    if (!grad) return h;

    // Gradient of h² = ‖Ax‖² − r/s with s = ‖Bx‖², r = |⟨Ax,Bx⟩|² (complex λ)
    // or (Re⟨Ax,Bx⟩)² (real λ); then ∇h = ∇h² / 2h.
    Vector g = a_adj * ax;
    const double s = bx.norm_squared();
    if (s > 0.0) {
      const cx p = inner(ax, bx);
      const Vector bsa = b_adj * ax;
      const Vector asb = a_adj * bx;
      const Vector bsb = b_adj * bx;
      double r;
      Vector dr(x.dim(), x.field());
      if (field == Field::Real) {
        r = p.real() * p.real();
        for (std::size_t i = 0; i < dr.dim(); ++i) dr[i] = p.real() * (bsa[i] + asb[i]);
      } else {
        r = std::norm(p);
        for (std::size_t i = 0; i < dr.dim(); ++i) dr[i] = std::conj(p) * bsa[i] + p * asb[i];
      }
      for (std::size_t i = 0; i < g.dim(); ++i) g[i] -= (dr[i] * s - r * bsb[i]) / (s * s);
    }
    const double denom = h > 0.0 ? h : 1.0;
    for (std::size_t i = 0; i < g.dim(); ++i) g[i] /= denom;
    *grad = (h > 0.0) ? std::move(g) : Vector(x.dim(), x.field());
    return h;
  };
}

}  // namespace bjorth
