#pragma once

#include <vector>

#include "bjorth/matrix.hpp"

namespace bjorth {

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<Vector> vectors;  // orthonormal, vectors[i] pairs with values[i]
  int sweeps = 0;
};

/// Norm-attaining data of a matrix: ‖M‖ and an orthonormal basis of the right
/// singular vectors whose singular value lies within rank_tol of the largest.
struct SpectralData {
  double op_norm = 0.0;
  std::vector<Vector> top_subspace;
  double rank_tol = 0.0;
};

inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr double kJacobiTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi eigensolver for Hermitian (or real symmetric) matrices.
/// Input must be Hermitian to 1e-10 relative (Frobenius); throws InputError otherwise.
EigenDecomposition hermitian_eig(const Matrix& h);

/// Largest singular value σ_max(M).
double operator_norm(const Matrix& m);

/// Right singular vectors with σ ≥ σ_max·(1 − rank_tol). The zero matrix
/// returns the full standard basis, since every unit vector attains ‖0‖ = 0.
SpectralData top_singular_subspace(const Matrix& m, double rank_tol = kDefaultRankTol);

}  // namespace bjorth
