#pragma once

#include <functional>
#include <limits>

#include "bjorth/matrix.hpp"
#include "bjorth/random.hpp"

namespace bjorth {

/// Objective on the unit sphere of 𝕂ⁿ. When `grad` is non-null it receives the
/// real gradient G, i.e. the directional derivative along δ is Re⟨δ, G⟩.
using SphereObjective = std::function<double(const Vector& x, Vector* grad)>;

struct AscentOptions {
  int max_iterations = 3000;
  double grad_tol = 1e-10;
  /// Stop as soon as the value reaches this level.
  double target = std::numeric_limits<double>::infinity();
  /// Random tangent kicks allowed when the gradient stalls below a target.
  int max_perturbations = 0;
  double perturbation_size = 1e-3;
};

struct AscentResult {
  Vector x;
  double value = 0.0;
  int iterations = 0;
  int perturbations = 0;
};

/// Projected gradient ascent with step doubling/halving; x stays a unit vector
/// of x0's field. Returns the best point visited.
AscentResult sphere_ascent(const SphereObjective& f, Vector x0, const AscentOptions& opts,
                           Rng* rng = nullptr);

/// x ↦ inf over λ ∈ 𝕂 of ‖Ax + λBx‖, with its gradient where Bx ≠ 0.
SphereObjective inner_inf_objective(const Matrix& a, const Matrix& b, Field field);

}  // namespace bjorth
