#pragma once

#include <cstddef>
#include <functional>

#include "bjorth/matrix.hpp"

namespace bjorth {

struct LineMinResult {
  double value = 0.0;
  cx lambda_star = 0.0;
  std::size_t evaluations = 0;
  /// The evaluation budget ran out; value is the best seen, not a converged minimum.
  bool budget_limited = false;
};

struct LineMinOptions {
  double tol = 1e-7;                    // absolute tolerance on the returned value
  std::size_t max_evaluations = 100000;
};

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  std::size_t evaluations = 0;
};

/// Golden-section minimization of a unimodal f on [a, b] down to bracket width xtol.
/// Stops early (keeping the best point seen) once max_evaluations are spent.
GoldenResult golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                     double xtol, std::size_t max_evaluations);

/// Closed-form inf over λ ∈ 𝕂 of ‖u + λv‖. For v = 0 the value is ‖u‖ at λ = 0.
LineMinResult inner_inf(const Vector& u, const Vector& v, Field field);

/// ‖A + λB‖
double lambda_objective(const Matrix& a, const Matrix& b, cx lambda);

/// inf over λ ∈ 𝕂 of ‖A + λB‖.
///
/// The objective is convex in (Re λ, Im λ) and every minimizer lies in the disk
/// |λ| ≤ 2‖A‖/‖B‖. REAL searches the real segment with one golden-section pass.
/// COMPLEX alternates golden-section line searches along Re λ and Im λ, adds a
/// line search along each pass's net displacement, and before stopping probes
/// the two diagonals so a kink aligned with the axes cannot stall the descent.
LineMinResult global_inf_lambda(const Matrix& a, const Matrix& b, Field field,
                                const LineMinOptions& opts = {});
LineMinResult global_inf_lambda(const Matrix& a, const Matrix& b, const LineMinOptions& opts = {});

/// Tests 0 ≤ |λ|²b² + 2 Re(conj(λ) L) on a fixed sample of λ: magnitudes
/// 1, 1e-1, ..., 1e-8 along ±1, ±i and `samples` equally spaced directions.
/// A true result forces |L| to the order of 1e-8·b².
bool limit_lemma_check(cx l, double b, std::size_t samples = 8);

}  // namespace bjorth
