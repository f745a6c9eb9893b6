// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "bjorth/ensemble.hpp"
#include "bjorth/line_search.hpp"
#include "bjorth/minimax.hpp"
#include "bjorth/orthogonality.hpp"
#include "bjorth/random.hpp"
#include "bjorth/spectral.hpp"
#include "oracles.hpp"

using namespace bjorth;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %-34s %s  %s (%.1fs)\n", id, name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Field alternate(int i) { return i % 2 ? Field::Real : Field::Complex; }

// Every witness returned while checking the equivalence, re-checked by the converse criterion.
struct ReturnedWitness {
  Matrix a, b;
  Witness w;
};
std::vector<ReturnedWitness> returned;

Outcome minimax_equality() {
  int duality_ok = 0, gap_ok = 0;
  double worst = 0.0;
  const int total = 200;
  for (int i = 0; i < total; ++i) {
    const int n = 2 + i % 5;
    const auto [a, b] = trial_inputs(Suite::Minimax, n, substream_seed(1001, {std::uint64_t(i)}), Field::Complex);
    MinimaxOptions o;
    o.restarts = 50;
    o.seed = std::uint64_t(i);
    const double lhs = lhs_sup_inf(a, b, o).value;
    const double rhs = rhs_inf_sup(a, b, o).value;
    const double rel = (rhs - lhs) / std::max(rhs, 1.0);
    duality_ok += lhs <= rhs + 1e-9;
    gap_ok += rel <= 1e-4;
    worst = std::max(worst, rel);
  }
  return {duality_ok == total && gap_ok == total,
          fmt("weak duality %d/%d, gap<=1e-4 %d/%d, max rel gap %.2e", duality_ok, total, gap_ok, total, worst)};
}

Outcome bhatia_semrl() {
  int witness_ok = 0;
  const int pairs = 100;
  double worst_norm = 0.0, worst_ip = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const int n = 2 + i % 5;
    const OrthogonalPair p = gen_orthogonal_pair(std::size_t(n), substream_seed(2002, {std::uint64_t(i)}), alternate(i / 5));
    const double na = operator_norm(p.a), nb = operator_norm(p.b);
    WitnessOptions opts;
    opts.seed = std::uint64_t(i);
    const WitnessOutcome out = find_witness(p.a, p.b, opts);
    if (const auto* w = std::get_if<Witness>(&out)) {
      returned.push_back({p.a, p.b, *w});
      worst_norm = std::max(worst_norm, w->norm_residual / na);
      worst_ip = std::max(worst_ip, w->ip_residual / (na * nb));
      witness_ok += w->norm_residual <= 1e-6 * na && w->ip_residual <= 1e-6 * na * nb;
    }
  }

  int compared = 0, agree = 0, boundary_band = 0;
  const int randoms = 500;
  for (int i = 0; i < randoms; ++i) {
    const int n = 2 + i % 5;
    const auto [a, b] = trial_inputs(Suite::Agreement, n, substream_seed(2003, {std::uint64_t(i)}), alternate(i / 5));
    WitnessOptions opts;
    opts.seed = std::uint64_t(i);
    const Decision d = decide(a, b, kDefaultDecisionTol, opts);
    if (d.witness) returned.push_back({a, b, *d.witness});
    if (std::abs(d.definitional.margin) > 1e-6) {
      ++compared;
      agree += d.definitional.status == d.witness_route.status;
    } else {
      ++boundary_band;
    }
  }
  return {witness_ok == pairs && agree == compared,
          fmt("witnesses %d/%d (max rel residuals %.1e, %.1e), routes agree %d/%d (%d within 1e-6)", witness_ok,
              pairs, worst_norm, worst_ip, agree, compared, boundary_band)};
}

Outcome converse() {
  if (returned.empty()) return {false, "no witnesses to check"};
  int ok = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& r : returned) {
    const double na = operator_norm(r.a);
    const Vector ax = r.a * r.w.x;
    const Vector bx = r.b * r.w.x;
    const Field field = common_field(r.a.field(), r.b.field());
    const double radius = 2.0 * na / std::max(operator_norm(r.b), 1e-300);
    auto f = [&](cx l) { return (ax + l * bx).norm(); };
    double lowest = std::numeric_limits<double>::infinity();
    if (field == Field::Real) {
      for (int k = 0; k < 1000; ++k) lowest = std::min(lowest, f(cx(-radius + 2.0 * radius * k / 999.0, 0.0)));
    } else {
      // 40 geometric radii from 1e-6·R to R, 25 angles each.
      for (int i = 0; i < 40; ++i) {
        const double rho = radius * std::pow(1e-6, 1.0 - i / 39.0);
        for (int j = 0; j < 25; ++j) lowest = std::min(lowest, f(std::polar(rho, 2.0 * std::numbers::pi * j / 25.0)));
      }
    }
    worst = std::min(worst, lowest - na);
    ok += lowest >= na - 1e-5;
  }
  return {ok == int(returned.size()),
          fmt("%d/%zu witnesses, min over grid of inf - ||A|| = %.2e", ok, returned.size(), worst)};
}

Outcome epsilon_ladder() {
  int ok = 0, rungs = 0;
  double worst_ratio = 0.0;
  for (int i = 0; i < 20; ++i) {
    const OrthogonalPair p =
        gen_orthogonal_pair(std::size_t(2 + i % 5), substream_seed(4004, {std::uint64_t(i)}), alternate(i / 5));
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
      ++rungs;
      EpsilonWitnessOptions opts;
      opts.seed = std::uint64_t(i);
      const EpsilonWitnessOutcome o = epsilon_witness(p.a, p.b, eps, opts);
      if (o.witness && o.witness->ip_residual <= eps) {
        ++ok;
        worst_ratio = std::max(worst_ratio, o.witness->ip_residual / eps);
      }
    }
  }
  return {ok == rungs, fmt("%d/%d rungs with ip_residual <= eps (max ip/eps %.2e)", ok, rungs, worst_ratio)};
}

Outcome scalar_lemma() {
  Rng rng(5005);
  int rejected = 0, total = 0;
  for (int i = 0; i < 100; ++i) {
    const cx dir = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const double b = rng.uniform(0.5, 2.0);
    for (double scale : {1e-6, 1.0, 1e6}) {
      ++total;
      rejected += !limit_lemma_check(scale * dir, b);
    }
  }
  const bool zero_ok = limit_lemma_check(0.0, 1.0) && limit_lemma_check(0.0, 0.5) && limit_lemma_check(0.0, 2.0);
  return {rejected == total && zero_ok,
          fmt("false for %d/%d nonzero L, true for L = 0: %s", rejected, total, zero_ok ? "yes" : "no")};
}

Outcome vector_equivalence() {
  Rng rng(6006);
  int disagreements = 0, orthogonal = 0;
  for (int t = 0; t < 1000; ++t) {
    const Field field = alternate(t);
    const std::size_t n = 1 + t % 6;
    Vector u(n, field), v(n, field);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = rng.gaussian(field);
      v[i] = rng.gaussian(field);
    }
    if (t % 4 < 2 && n > 1) v -= (inner(v, u) / u.norm_squared()) * u;
    const VectorCheck c = vector_bj_check(u, v, 1e-8);
    const bool classical = c.abs_inner <= 1e-6 * u.norm() * v.norm();
    disagreements += c.orthogonal != classical;
    orthogonal += classical;
  }
  return {disagreements == 0, fmt("%d disagreements over 1000 pairs (%d orthogonal)", disagreements, orthogonal)};
}

Outcome closed_form_vs_grid() {
  Rng rng(7007);
  int inner_ok = 0, global_ok = 0;
  double inner_worst = 0.0, global_worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const Field field = alternate(t);
    const std::size_t n = 1 + t % 5;
    Vector u(n, field), v(n, field);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = rng.gaussian(field);
      v[i] = rng.gaussian(field);
    }
    auto f = [&](cx l) { return (u + l * v).norm(); };
    const auto grid = oracle::grid_min_nested(f, 2.0 * u.norm() / v.norm(), 1e-3, field == Field::Real);
    const double diff = std::abs(inner_inf(u, v, field).value - grid.value);
    inner_worst = std::max(inner_worst, diff);
    inner_ok += diff <= 1e-3;
  }
  for (int t = 0; t < 500; ++t) {
    const Field field = alternate(t);
    const Matrix a = gen_ginibre(2, substream_seed(7008, {std::uint64_t(t), 0}), field);
    const Matrix b = gen_ginibre(2, substream_seed(7008, {std::uint64_t(t), 1}), field);
    auto f = [&](cx l) {
      return oracle::norm2x2(a(0, 0) + l * b(0, 0), a(0, 1) + l * b(0, 1), a(1, 0) + l * b(1, 0),
                             a(1, 1) + l * b(1, 1));
    };
    const double radius = 2.0 * f(0.0) / oracle::norm2x2(b(0, 0), b(0, 1), b(1, 0), b(1, 1));
    const auto grid = oracle::grid_min_nested(f, radius, 1e-3, field == Field::Real);
    const double diff = std::abs(global_inf_lambda(a, b, field).value - grid.value);
    global_worst = std::max(global_worst, diff);
    global_ok += diff <= 1e-3;
  }
  return {inner_ok == 500 && global_ok == 500,
          fmt("inner_inf %d/500 (max diff %.1e), global_inf_lambda %d/500 (max diff %.1e)", inner_ok, inner_worst,
              global_ok, global_worst)};
}

Outcome determinism() {
  const SuiteConfig config;
  const SuiteReport first = run_suite(config);
  const SuiteReport second = run_suite(config);
  auto dump = [](const SuiteReport& r) {
    nlohmann::json j = to_json(r);
    j.erase("runtimes");
    return j.dump();
  };
  const std::string a = dump(first);
  const bool same = a == dump(second);
  return {same, fmt("%zu bytes, identical: %s; suite %d/%d passed, max rel gap %.1e, median %.1e", a.size(),
                    same ? "yes" : "no", first.aggregates.passed, first.aggregates.total,
                    first.aggregates.max_relative_gap, first.aggregates.median_relative_gap)};
}

}  // namespace

int main() {
  report("C1", "minimax equality", minimax_equality);
  report("C2", "Bhatia-Semrl equivalence", bhatia_semrl);
  report("C3", "converse direction", converse);
  report("C4", "epsilon-witness ladder", epsilon_ladder);
  report("C5", "scalar limit lemma", scalar_lemma);
  report("C6", "vector-case equivalence", vector_equivalence);
  report("C7", "closed form vs brute force", closed_form_vs_grid);
  report("C8", "determinism", determinism);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
