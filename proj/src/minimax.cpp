#include "bjorth/minimax.hpp"

#include <algorithm>

#include "bjorth/errors.hpp"
#include "bjorth/matrix_json.hpp"
#include "bjorth/random.hpp"
#include "bjorth/spectral.hpp"
#include "bjorth/sphere_opt.hpp"

namespace bjorth {

namespace {

void check_pair(const Matrix& a, const Matrix& b) {
  validate_pair(a, b);
  if (!a.square()) throw InputError("minimax: matrices must be square");
  if (a.rows() < 2) throw InputError("minimax: dimension must be at least 2");
}

}  // namespace

SupInf lhs_sup_inf(const Matrix& a, const Matrix& b, const MinimaxOptions& opts) {
  check_pair(a, b);
  if (opts.restarts < 1) throw InputError("lhs_sup_inf: restarts must be positive");
  const Field field = common_field(a.field(), b.field());
  const SphereObjective h = inner_inf_objective(a, b, field);
  const Vector top = top_singular_subspace(a).top_subspace.front();

  AscentOptions ascent;
  ascent.max_iterations = opts.max_iterations;
  ascent.max_perturbations = opts.perturbations;

  auto results = map_indexed(static_cast<std::size_t>(opts.restarts), opts.exec, [&](std::size_t r) {
    Rng rng(substream_seed(opts.seed, {r}));
    Vector start = r == 0 ? top : rng.unit_vector(a.cols(), field);
    return sphere_ascent(h, std::move(start), ascent, &rng);
  });
  const std::size_t best = best_index(
      results, [](const AscentResult& x, const AscentResult& y) { return x.value > y.value; });
  return {results[best].value, results[best].x, opts.restarts};
}

InfSup rhs_inf_sup(const Matrix& a, const Matrix& b, const MinimaxOptions& opts) {
  check_pair(a, b);
  const LineMinResult r = global_inf_lambda(a, b, LineMinOptions{opts.tol});
  return {r.value, r.lambda_star, r.budget_limited};
}

MinimaxReport minimax_report(const Matrix& a, const Matrix& b, const MinimaxOptions& opts) {
  const InfSup rhs = rhs_inf_sup(a, b, opts);
  MinimaxOptions o = opts;
  SupInf lhs = lhs_sup_inf(a, b, o);

  MinimaxReport report;
  report.field = common_field(a.field(), b.field());
  report.rhs = rhs.value;
  report.argmin_lambda = rhs.argmin_lambda;
  auto fill = [&] {
    report.lhs = lhs.value;
    report.argmax_x = lhs.argmax_x;
    report.restarts_used = lhs.restarts_used;
    report.gap = report.rhs - report.lhs;
  };
  fill();
  while (report.relative_gap() > opts.gap_tol && o.restarts < 4 * opts.restarts) {
    o.restarts = std::min(2 * o.restarts, 4 * opts.restarts);
    lhs = lhs_sup_inf(a, b, o);
    fill();
  }
  report.restart_starved = report.relative_gap() > opts.gap_tol;
  if (report.gap < -1e-9) {
    throw NumericalFailure("weak duality violated: sup-inf exceeds inf-sup", -report.gap);
  }
  return report;
}

nlohmann::json to_json(const MinimaxReport& r) {
  return nlohmann::json{{"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"gap", r.gap},
                        {"argmin_lambda", to_json(r.argmin_lambda)},
                        {"argmax_x", to_json(r.argmax_x)},
                        {"restarts_used", r.restarts_used},
                        {"field", std::string(to_string(r.field))},
                        {"restart_starved", r.restart_starved}};
}

}  // namespace bjorth
