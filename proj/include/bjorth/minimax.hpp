#pragma once

#include <cstdint>

#include <json.hpp>

#include "bjorth/line_search.hpp"
#include "bjorth/matrix.hpp"
#include "bjorth/parallel.hpp"

namespace bjorth {

struct MinimaxOptions {
  int restarts = 50;
  int max_iterations = 3000;
  /// Stall kicks per restart when the ascent stops improving.
  int perturbations = 2;
  std::uint64_t seed = 0;
  double tol = 1e-9;      // rhs line-search tolerance
  double gap_tol = 1e-4;  // relative to max(rhs, 1)
  Exec exec = Exec::Parallel;
};

struct SupInf {
  double value = 0.0;
  Vector argmax_x;
  int restarts_used = 0;
};

struct InfSup {
  double value = 0.0;
  cx argmin_lambda = 0.0;
  bool budget_limited = false;
};

/// sup over unit x of inf over λ of ‖Ax + λBx‖. Every reported value is h(x) at
/// an evaluated unit vector, so it is a lower bound on the true supremum.
/// Restart 0 starts from a top right singular vector of A; the rest are random.
SupInf lhs_sup_inf(const Matrix& a, const Matrix& b, const MinimaxOptions& opts = {});

/// inf over λ of ‖A + λB‖.
InfSup rhs_inf_sup(const Matrix& a, const Matrix& b, const MinimaxOptions& opts = {});

struct MinimaxReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // rhs − lhs
  Vector argmax_x;
  cx argmin_lambda = 0.0;
  int restarts_used = 0;
  Field field = Field::Complex;
  /// Gap stayed above gap_tol even after restarts were raised to 4× the request.
  bool restart_starved = false;

  double relative_gap() const { return gap / std::max(rhs, 1.0); }
};

/// Both sides plus the gap. A gap above gap_tol doubles the restart count (up to
/// 4× the request) before the report is returned. Throws NumericalFailure if
/// weak duality is violated beyond 1e-9.
MinimaxReport minimax_report(const Matrix& a, const Matrix& b, const MinimaxOptions& opts = {});

nlohmann::json to_json(const MinimaxReport& r);

}  // namespace bjorth
