#include "bjorth/line_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bjorth/errors.hpp"
#include "bjorth/spectral.hpp"

namespace bjorth {

GoldenResult golden_section_minimize(const std::function<double(double)>& f, double a, double b,
                                     double xtol, std::size_t max_evaluations) {
  constexpr double kInvPhi = 0.6180339887498949;
  GoldenResult best{a, std::numeric_limits<double>::infinity(), 0};
  auto eval = [&](double x) {
    const double fx = f(x);
    ++best.evaluations;
    if (fx < best.fx) {
      best.fx = fx;
      best.x = x;
    }
    return fx;
  };

  if (b < a) std::swap(a, b);
  if (b - a <= xtol || max_evaluations < 2) {
    eval(0.5 * (a + b));
    return best;
  }
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > xtol && best.evaluations < max_evaluations) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  return best;
}

LineMinResult inner_inf(const Vector& u, const Vector& v, Field field) {
  if (u.dim() != v.dim()) throw InputError("inner_inf: dimension mismatch");
  LineMinResult out;
  const double v2 = v.norm_squared();
  if (v2 == 0.0) {
    out.value = u.norm();
    return out;
  }
  cx p = inner(u, v);
  if (field == Field::Real) p = p.real();
  out.lambda_star = -p / v2;
  // Residual norm of the projection; equals sqrt(‖u‖² − |⟨u,v⟩|²/‖v‖²) without
  // the cancellation of the subtracted form.
  Vector r = u;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += out.lambda_star * v[i];
  out.value = std::min(r.norm(), u.norm());
  return out;
}

double lambda_objective(const Matrix& a, const Matrix& b, cx lambda) {
  return operator_norm(a + lambda * b);
}

namespace {

// Parameter interval {s : |z + s d| ≤ r} for unit d.
std::pair<double, double> disk_chord(cx z, cx d, double r) {
  const double beta = (z * std::conj(d)).real();
  const double disc = beta * beta - std::norm(z) + r * r;
  if (disc <= 0.0) return {0.0, 0.0};
  const double root = std::sqrt(disc);
  return {-beta - root, -beta + root};
}

class LambdaSearch {
public:
  LambdaSearch(const Matrix& a, const Matrix& b, double radius, double xtol, std::size_t budget)
      : a_(a), b_(b), radius_(radius), xtol_(xtol), budget_(budget) {}

  double eval(cx lambda) {
    ++evaluations_;
    return lambda_objective(a_, b_, lambda);
  }

  bool exhausted() const { return evaluations_ >= budget_; }
  std::size_t evaluations() const { return evaluations_; }

  // Line search from `at` along unit direction d; moves `at` if the value improves.
  double along(cx& at, double& f_at, cx d) {
    if (exhausted()) return 0.0;
    auto [lo, hi] = disk_chord(at, d, radius_);
    if (hi - lo <= xtol_) return 0.0;
    auto g = golden_section_minimize([&](double s) { return eval(at + s * d); }, lo, hi, xtol_,
                                     budget_ - evaluations_);
    if (g.fx < f_at) {
      at += g.x * d;
      f_at = g.fx;
      return std::abs(g.x);
    }
    return 0.0;
  }

private:
  const Matrix& a_;
  const Matrix& b_;
  double radius_;
  double xtol_;
  std::size_t budget_;
  std::size_t evaluations_ = 0;
};

}  // namespace

LineMinResult global_inf_lambda(const Matrix& a, const Matrix& b, Field field,
                                const LineMinOptions& opts) {
  validate_pair(a, b);
  if (!(opts.tol > 0.0)) throw InputError("global_inf_lambda: tol must be positive");

  const double norm_a = operator_norm(a);
  const double norm_b = operator_norm(b);
  LineMinResult out;
  out.value = norm_a;
  if (norm_b == 0.0 || norm_a == 0.0) return out;

  const double radius = 2.0 * norm_a / norm_b;
  // ‖A + λB‖ is ‖B‖-Lipschitz in λ, so this step keeps the value within tol/10.
  const double xtol = opts.tol / (10.0 * norm_b);
  LambdaSearch search(a, b, radius, xtol, opts.max_evaluations);

  cx at = 0.0;
  double f_at = search.eval(at);

  if (field == Field::Real) {
    search.along(at, f_at, 1.0);
  } else {
    const cx diagonal1 = cx(1.0, 1.0) / std::sqrt(2.0);
    const cx diagonal2 = cx(1.0, -1.0) / std::sqrt(2.0);
    while (!search.exhausted()) {
      const cx start = at;
      double moved = search.along(at, f_at, 1.0);
      moved += search.along(at, f_at, cx(0.0, 1.0));
      const cx step = at - start;
      if (std::abs(step) > xtol) moved += search.along(at, f_at, step / std::abs(step));
      if (moved >= xtol) continue;
      if (search.along(at, f_at, diagonal1) + search.along(at, f_at, diagonal2) < xtol) break;
    }
  }

  out.value = f_at;
  out.lambda_star = at;
  out.evaluations = search.evaluations();
  out.budget_limited = search.exhausted();
  return out;
}

LineMinResult global_inf_lambda(const Matrix& a, const Matrix& b, const LineMinOptions& opts) {
  return global_inf_lambda(a, b, common_field(a.field(), b.field()), opts);
}

bool limit_lemma_check(cx l, double b, std::size_t samples) {
  if (samples < 4) throw InputError("limit_lemma_check: samples must be at least 4");
  std::vector<cx> directions = {1.0, -1.0, cx(0.0, 1.0), cx(0.0, -1.0)};
  for (std::size_t k = 0; k < samples; ++k) {
    directions.push_back(std::polar(1.0, 2.0 * std::numbers::pi * double(k) / double(samples)));
  }
  for (int e = 0; e <= 8; ++e) {
    const double t = std::pow(10.0, -e);
    for (cx d : directions) {
      const cx lambda = t * d;
      const double q = std::norm(lambda) * b * b + 2.0 * (std::conj(lambda) * l).real();
      if (q < 0.0) return false;
    }
  }
  return true;
}

}  // namespace bjorth
