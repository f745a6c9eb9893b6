#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "bjorth/line_search.hpp"
#include "bjorth/matrix.hpp"
#include "bjorth/parallel.hpp"
#include "bjorth/spectral.hpp"

namespace bjorth {

enum class Status { Orthogonal, NotOrthogonal, Boundary };
enum class Method { Definitional, Witness };

std::string_view to_string(Status s);
std::string_view to_string(Method m);

inline constexpr double kDefaultDecisionTol = 1e-7;

/// Outcome of one orthogonality test.
///
/// `margin` is the certifying quantity of the route and is never positive:
///  - DEFINITIONAL: inf_λ ‖A + λB‖ − ‖A‖.
///  - WITNESS: inf_λ ‖(A + λB)x‖ − ‖A‖ at the witness x when orthogonal, and
///    minus the distance from 0 to the numerical range of the compression otherwise.
struct Verdict {
  Status status = Status::NotOrthogonal;
  double margin = 0.0;
  Method method = Method::Definitional;
  double tol = kDefaultDecisionTol;
  std::optional<cx> lambda_star;      // definitional route
  std::optional<double> certificate;  // witness route, separating angle θ*
  bool budget_limited = false;
};

/// Unit x with ‖Ax‖ ≈ ‖A‖ and ⟨Ax, Bx⟩ ≈ 0. Residuals are recomputed from x.
struct Witness {
  Vector x;
  double norm_residual = 0.0;  // ‖A‖ − ‖Ax‖
  double ip_residual = 0.0;    // |⟨Ax, Bx⟩|
  double epsilon = 0.0;        // max of the two residuals
};

/// Verdict of the definitional route: A ⊥ B iff inf_λ ‖A + λB‖ ≥ ‖A‖ − tol.
Verdict check_definitional(const Matrix& a, const Matrix& b, double tol = kDefaultDecisionTol);

struct VectorCheck {
  bool orthogonal = false;
  double abs_inner = 0.0;  // |⟨u, v⟩|
};

/// Birkhoff-James test for vectors; agrees with |⟨u, v⟩| ≈ 0.
VectorCheck vector_bj_check(const Vector& u, const Vector& v, double tol = 1e-8);

struct NumericalRangeTest {
  bool contains_zero = false;
  /// Angle θ* maximizing m(θ) = λ_min(Re(e^{iθ}C)).
  double theta = 0.0;
  /// m(θ*); when positive it is the distance from 0 to W(C).
  double support = 0.0;
};

/// Decides whether 0 lies in W(C) = {⟨Cy, y⟩ : ‖y‖ = 1} up to tol. COMPLEX scans
/// θ on a 720-point grid with golden-section refinement; REAL compares 0 with the
/// spectrum of the symmetric part.
NumericalRangeTest zero_in_numerical_range(const Matrix& c, double tol);

/// Compression of B*A to span{basis}: C_ij = ⟨B*A m_j, m_i⟩, so ⟨Cy, y⟩ = ⟨Ax, Bx⟩
/// for x = Σ y_i m_i.
Matrix compression(const Matrix& a, const Matrix& b, const std::vector<Vector>& basis);

struct WitnessOptions {
  double rank_tol = kDefaultRankTol;
  /// Numerical-range decision tolerance, relative to ‖A‖‖B‖.
  double tol = kDefaultDecisionTol;
  /// Largest accepted |⟨Ax, Bx⟩|, relative to ‖A‖‖B‖.
  double eps = kDefaultDecisionTol;
  int restarts = 32;
  int max_iterations = 3000;
  std::uint64_t seed = 0;
  Exec exec = Exec::Parallel;
};

using WitnessOutcome = std::variant<Witness, Verdict>;

/// Searches the norm-attaining subspace of A for a witness of A ⊥ B. Returns
/// a NOT_ORTHOGONAL verdict (with separating angle) when 0 ∉ W(C), and throws
/// NumericalFailure when 0 ∈ W(C) but no vector reaching eps was found.
WitnessOutcome find_witness(const Matrix& a, const Matrix& b, const WitnessOptions& opts = {});

/// Witness-route verdict derived from find_witness.
Verdict check_witness(const Matrix& a, const Matrix& b, double tol = kDefaultDecisionTol,
                      const WitnessOptions& opts = {});

struct EpsilonWitnessOptions {
  int restarts = 32;
  int max_iterations = 5000;
  std::uint64_t seed = 0;
  Exec exec = Exec::Parallel;
};

struct EpsilonWitnessOutcome {
  std::optional<Witness> witness;  // empty when no x reached the bound
  double best_value = 0.0;         // best inf_λ ‖Ax + λBx‖ found
  Vector best_x;
};

/// Looks for a unit x with inf_λ ‖Ax + λBx‖ > ‖A‖ − eps and both residuals ≤ eps
/// by multi-start ascent. Failure is the expected answer when A is not orthogonal to B.
EpsilonWitnessOutcome epsilon_witness(const Matrix& a, const Matrix& b, double eps,
                                      const EpsilonWitnessOptions& opts = {});

/// Residuals of a candidate witness, recomputed from scratch.
Witness make_witness(const Matrix& a, const Matrix& b, Vector x, double norm_a);

struct Decision {
  Status status = Status::NotOrthogonal;
  Verdict definitional;
  Verdict witness_route;
  std::optional<Witness> witness;
  bool routes_agree = true;
};

/// Runs both routes. Disagreement inside the band |margin| ≤ 10·tol yields BOUNDARY;
/// outside the band the definitional status is kept and routes_agree is false.
Decision decide(const Matrix& a, const Matrix& b, double tol = kDefaultDecisionTol,
                const WitnessOptions& opts = {});

}  // namespace bjorth
