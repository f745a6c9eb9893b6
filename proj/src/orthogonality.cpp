#include "bjorth/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bjorth/errors.hpp"
#include "bjorth/random.hpp"
#include "bjorth/sphere_opt.hpp"

namespace bjorth {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Orthogonal: return "ORTHOGONAL";
    case Status::NotOrthogonal: return "NOT_ORTHOGONAL";
    case Status::Boundary: return "BOUNDARY";
  }
  return "?";
}

std::string_view to_string(Method m) {
  return m == Method::Definitional ? "DEFINITIONAL" : "WITNESS";
}

namespace {

void check_tol(double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw InputError("tol must lie in (0, 1)");
}

// Restarts run in blocks so that early exit on success does not depend on
// the execution policy.
constexpr int kRestartBlock = 8;

struct Candidate {
  AscentResult ascent;
  int restart = 0;
};

template <class StartFn, class DoneFn>
Candidate multistart(const SphereObjective& f, int restarts, const AscentOptions& opts, Exec exec,
                     std::uint64_t seed, StartFn start, DoneFn done) {
  std::optional<Candidate> best;
  for (int first = 0; first < restarts; first += kRestartBlock) {
    const int count = std::min(kRestartBlock, restarts - first);
    auto block = map_indexed(static_cast<std::size_t>(count), exec, [&](std::size_t i) {
      const int r = first + static_cast<int>(i);
      Rng rng(substream_seed(seed, {static_cast<std::uint64_t>(r)}));
      return Candidate{sphere_ascent(f, start(r, rng), opts, &rng), r};
    });
    const std::size_t k = best_index(block, [](const Candidate& a, const Candidate& b) {
      return a.ascent.value > b.ascent.value;
    });
    if (!best || block[k].ascent.value > best->ascent.value) best = std::move(block[k]);
    if (done(best->ascent)) break;
  }
  return std::move(*best);
}

}  // namespace

Witness make_witness(const Matrix& a, const Matrix& b, Vector x, double norm_a) {
  Witness w;
  w.x = x.normalized();
  const Vector ax = a * w.x;
  const Vector bx = b * w.x;
  w.norm_residual = std::max(0.0, norm_a - ax.norm());
  w.ip_residual = std::abs(inner(ax, bx));
  w.epsilon = std::max(w.norm_residual, w.ip_residual);
  return w;
}

Verdict check_definitional(const Matrix& a, const Matrix& b, double tol) {
  check_tol(tol);
  validate_pair(a, b);
  const double norm_a = operator_norm(a);
  const LineMinResult inf = global_inf_lambda(a, b, LineMinOptions{tol / 10.0});
  Verdict v;
  v.method = Method::Definitional;
  v.tol = tol;
  v.margin = std::min(0.0, inf.value - norm_a);
  v.status = v.margin >= -tol ? Status::Orthogonal : Status::NotOrthogonal;
  v.lambda_star = inf.lambda_star;
  v.budget_limited = inf.budget_limited;
  return v;
}

VectorCheck vector_bj_check(const Vector& u, const Vector& v, double tol) {
  if (u.dim() != v.dim()) throw InputError("vector_bj_check: dimension mismatch");
  const LineMinResult inf = inner_inf(u, v, common_field(u.field(), v.field()));
  return {inf.value >= u.norm() - tol, std::abs(inner(u, v))};
}

NumericalRangeTest zero_in_numerical_range(const Matrix& c, double tol) {
  if (!c.square()) throw InputError("zero_in_numerical_range: matrix must be square");
  validate(c, "C");
  NumericalRangeTest out;

  if (c.field() == Field::Real) {
    const auto eig = hermitian_eig(c.hermitian_part());
    const double lo = eig.values.front();
    const double hi = eig.values.back();
    if (lo >= -hi) {
      out.theta = 0.0;
      out.support = lo;
    } else {
      out.theta = std::numbers::pi;
      out.support = -hi;
    }
    out.contains_zero = out.support <= tol;
    return out;
  }

  const Matrix c_adj = c.adjoint();
  auto m = [&](double theta) {
    const cx rot = std::polar(1.0, theta);
    Matrix re = rot * c;
    re += std::conj(rot) * c_adj;
    re *= 0.5;
    return hermitian_eig(re).values.front();
  };

  constexpr int kGrid = 720;
  const double h = 2.0 * std::numbers::pi / kGrid;
  out.support = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kGrid; ++k) {
    const double v = m(k * h);
    if (v > out.support) {
      out.support = v;
      out.theta = k * h;
    }
  }
  const auto refined = golden_section_minimize([&](double t) { return -m(t); }, out.theta - h,
                                               out.theta + h, 1e-12, 200);
  if (-refined.fx > out.support) {
    out.support = -refined.fx;
    out.theta = std::remainder(refined.x, 2.0 * std::numbers::pi);
    if (out.theta < 0.0) out.theta += 2.0 * std::numbers::pi;
  }
  out.contains_zero = out.support <= tol;
  return out;
}

Matrix compression(const Matrix& a, const Matrix& b, const std::vector<Vector>& basis) {
  const Matrix g = b.adjoint() * a;
  const std::size_t k = basis.size();
  Field field = common_field(a.field(), b.field());
  Matrix c(k, k, field);
  std::vector<Vector> images;
  images.reserve(k);
  for (const auto& m : basis) images.push_back(g * m);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) c(i, j) = inner(images[j], basis[i]);
  }
  if (field == Field::Real) {
    for (std::size_t i = 0; i < k * k; ++i) c(i / k, i % k) = c(i / k, i % k).real();
  }
  return c;
}

WitnessOutcome find_witness(const Matrix& a, const Matrix& b, const WitnessOptions& opts) {
  validate_pair(a, b);
  if (!a.square()) throw InputError("find_witness: matrices must be square");
  if (opts.restarts < 1) throw InputError("find_witness: restarts must be positive");
  const Field field = common_field(a.field(), b.field());

  const SpectralData top = top_singular_subspace(a, opts.rank_tol);
  const double scale = top.op_norm * operator_norm(b);
  const Matrix c = compression(a, b, top.top_subspace);

  const NumericalRangeTest range = zero_in_numerical_range(c, opts.tol * scale);
  if (!range.contains_zero) {
    Verdict v;
    v.status = Status::NotOrthogonal;
    v.method = Method::Witness;
    v.tol = opts.tol;
    v.margin = -range.support;
    v.certificate = range.theta;
    return v;
  }

  // Minimize |⟨Cy, y⟩|² over the unit sphere of the compression space.
  const Matrix c_adj = c.adjoint();
  const SphereObjective objective = [&](const Vector& y, Vector* grad) {
    const Vector cy = c * y;
    const cx q = inner(cy, y);
    if (grad) {
      const Vector csy = c_adj * y;
      Vector g(y.dim(), y.field());
      for (std::size_t i = 0; i < g.dim(); ++i) g[i] = -2.0 * (std::conj(q) * cy[i] + q * csy[i]);
      *grad = std::move(g);
    }
    return -std::norm(q);
  };

  const double accept = opts.eps * scale;
  const double polish = 1e-15 * std::max(scale, c.frobenius_norm());
  AscentOptions ascent;
  ascent.max_iterations = opts.max_iterations;
  ascent.grad_tol = 0.0;
  ascent.target = -polish * polish;
  const std::size_t k = c.rows();

  const Candidate best = multistart(
      objective, opts.restarts, ascent, opts.exec, opts.seed,
      [&](int r, Rng& rng) { return r == 0 ? Vector::basis(k, 0, field) : rng.unit_vector(k, field); },
      [&](const AscentResult& res) { return std::sqrt(-res.value) <= polish; });

  Vector x(a.cols(), field);
  for (std::size_t i = 0; i < k; ++i) x += best.ascent.x[i] * top.top_subspace[i];
  Witness w = make_witness(a, b, std::move(x), top.op_norm);
  if (w.ip_residual > accept) {
    throw NumericalFailure("witness search failed: 0 lies in the numerical range but no vector "
                           "reached the requested residual",
                           w.ip_residual);
  }
  return w;
}

namespace {

Verdict witness_verdict(const Matrix& a, const Matrix& b, double tol, const WitnessOutcome& outcome) {
  if (const auto* v = std::get_if<Verdict>(&outcome)) return *v;
  const Witness& w = std::get<Witness>(outcome);
  const Field field = common_field(a.field(), b.field());
  Verdict v;
  v.status = Status::Orthogonal;
  v.method = Method::Witness;
  v.tol = tol;
  v.margin = std::min(0.0, inner_inf(a * w.x, b * w.x, field).value - operator_norm(a));
  return v;
}

}  // namespace

Verdict check_witness(const Matrix& a, const Matrix& b, double tol, const WitnessOptions& opts) {
  check_tol(tol);
  WitnessOptions o = opts;
  o.tol = tol;
  o.eps = std::max(opts.eps, tol);
  return witness_verdict(a, b, tol, find_witness(a, b, o));
}

EpsilonWitnessOutcome epsilon_witness(const Matrix& a, const Matrix& b, double eps,
                                      const EpsilonWitnessOptions& opts) {
  validate_pair(a, b);
  if (!a.square()) throw InputError("epsilon_witness: matrices must be square");
  if (opts.restarts < 1) throw InputError("epsilon_witness: restarts must be positive");
  const Field field = common_field(a.field(), b.field());
  const SpectralData top = top_singular_subspace(a);
  const double norm_a = top.op_norm;
  if (norm_a == 0.0) throw InputError("epsilon_witness: A must be nonzero");
  if (!(eps > 0.0 && eps < norm_a)) throw InputError("epsilon_witness: eps must lie in (0, ‖A‖)");

  const SphereObjective h = inner_inf_objective(a, b, field);
  AscentOptions ascent;
  ascent.max_iterations = opts.max_iterations;
  ascent.grad_tol = 0.0;
  ascent.target = norm_a;

  auto certifies = [&](const Vector& x, double value) {
    if (!(value > norm_a - eps)) return false;
    const Witness w = make_witness(a, b, x, norm_a);
    return w.norm_residual <= eps && w.ip_residual <= eps;
  };

  const Candidate best = multistart(
      h, opts.restarts, ascent, opts.exec, opts.seed,
      [&](int r, Rng& rng) {
        return r == 0 ? top.top_subspace.front() : rng.unit_vector(a.cols(), field);
      },
      [&](const AscentResult& res) { return certifies(res.x, res.value); });

  EpsilonWitnessOutcome out;
  out.best_value = best.ascent.value;
  out.best_x = best.ascent.x;
  if (certifies(best.ascent.x, best.ascent.value)) {
    out.witness = make_witness(a, b, best.ascent.x, norm_a);
  }
  return out;
}

Decision decide(const Matrix& a, const Matrix& b, double tol, const WitnessOptions& opts) {
  Decision d;
  d.definitional = check_definitional(a, b, tol);
  WitnessOptions o = opts;
  o.tol = tol;
  o.eps = std::max(opts.eps, tol);
  const WitnessOutcome outcome = find_witness(a, b, o);
  if (const auto* w = std::get_if<Witness>(&outcome)) d.witness = *w;
  d.witness_route = witness_verdict(a, b, tol, outcome);
  d.routes_agree = d.definitional.status == d.witness_route.status;
  if (d.routes_agree) {
    d.status = d.definitional.status;
  } else if (std::abs(d.definitional.margin) <= 10.0 * tol) {
    d.status = Status::Boundary;
  } else {
    d.status = d.definitional.status;
  }
  return d;
}

}  // namespace bjorth
