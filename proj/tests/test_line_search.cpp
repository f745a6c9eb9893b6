#include <doctest.h>

#include "bjorth/ensemble.hpp"
#include "bjorth/errors.hpp"
#include "bjorth/line_search.hpp"
#include "bjorth/random.hpp"
#include "bjorth/spectral.hpp"
#include "oracles.hpp"

using namespace bjorth;

namespace {

Vector vec(std::initializer_list<cx> xs, Field f = Field::Complex) { return Vector(std::vector<cx>(xs), f); }

double vector_objective(const Vector& u, const Vector& v, cx l) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::norm(u[i] + l * v[i]);
  return std::sqrt(s);
}

double norm2x2_of(const Matrix& a, const Matrix& b, cx l) {
  return oracle::norm2x2(a(0, 0) + l * b(0, 0), a(0, 1) + l * b(0, 1), a(1, 0) + l * b(1, 0),
                         a(1, 1) + l * b(1, 1));
}

}  // namespace

TEST_CASE("golden section finds the vertex of a parabola and respects the budget") {
  auto f = [](double x) { return (x - 0.3) * (x - 0.3) + 1.0; };
  const GoldenResult r = golden_section_minimize(f, -2.0, 5.0, 1e-10, 1000);
  CHECK(r.x == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(r.fx == doctest::Approx(1.0).epsilon(1e-14));
  const GoldenResult capped = golden_section_minimize(f, -2.0, 5.0, 1e-10, 5);
  CHECK(capped.evaluations == 5);
}

TEST_CASE("inner_inf: trivial examples") {
  const Vector e1 = Vector::basis(2, 0, Field::Complex);
  const Vector e2 = Vector::basis(2, 1, Field::Complex);
  LineMinResult r = inner_inf(e1, e2, Field::Complex);
  CHECK(r.value == 1.0);
  CHECK(r.lambda_star == cx(0.0, 0.0));

  r = inner_inf(e1, e1, Field::Complex);
  CHECK(r.value == 0.0);
  CHECK(r.lambda_star == cx(-1.0, 0.0));

  r = inner_inf(e1, Vector(2, Field::Complex), Field::Complex);
  CHECK(r.value == 1.0);
  CHECK(r.lambda_star == cx(0.0, 0.0));

  CHECK_THROWS_AS(inner_inf(e1, Vector(3, Field::Complex), Field::Complex), InputError);
}

TEST_CASE("inner_inf: (1,1)/√2 against e1 matches a λ-grid search") {
  const double s = 1.0 / std::sqrt(2.0);
  const Vector u = vec({s, s});
  const Vector v = Vector::basis(2, 0, Field::Complex);
  const auto grid = oracle::grid_min_2d([&](cx l) { return vector_objective(u, v, l); }, 0.0, 2.0, 1e-3);
  const LineMinResult r = inner_inf(u, v, Field::Complex);
  CHECK(std::abs(r.value - grid.value) <= 1e-3);
  CHECK(std::abs(r.lambda_star - grid.at) <= 1e-3);
  CHECK(r.value == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("inner_inf: closed form vs grid oracle on random pairs") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Field field = t % 2 ? Field::Real : Field::Complex;
    const std::size_t n = 1 + t % 4;
    Vector u(n, field), v(n, field);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = rng.gaussian(field);
      v[i] = rng.gaussian(field);
    }
    const double radius = 2.0 * u.norm() / v.norm();
    auto f = [&](cx l) { return vector_objective(u, v, l); };
    const auto grid = field == Field::Real ? oracle::grid_min_1d(f, radius, 1e-3)
                                           : oracle::grid_min_refined(f, radius, 1e-3);
    const LineMinResult r = inner_inf(u, v, field);
    CAPTURE(t);
    CHECK(std::abs(r.value - grid.value) <= 1e-3);
    CHECK(r.value <= grid.value + 1e-12);
    CHECK(std::abs(r.value - f(r.lambda_star)) <= 1e-12);
    if (field == Field::Real) CHECK(r.lambda_star.imag() == 0.0);
  }
}

TEST_CASE("inner_inf: real field restricts λ to real values") {
  // u = e1, v = i e1: over ℂ the infimum is 0, over ℝ it is ‖u‖.
  const Vector u = Vector::basis(1, 0, Field::Complex);
  const Vector v = vec({cx(0, 1)});
  CHECK(inner_inf(u, v, Field::Complex).value == doctest::Approx(0.0));
  CHECK(inner_inf(u, v, Field::Real).value == doctest::Approx(1.0));
}

TEST_CASE("global_inf_lambda: trivial examples") {
  const LineMinResult r = global_inf_lambda(Matrix::diagonal({1.0, 0.0}), Matrix::diagonal({0.0, 1.0}),
                                            Field::Complex);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.lambda_star) <= 1.0 + 1e-9);  // ‖A+λB‖ = max(1, |λ|) is flat on |λ| ≤ 1

  const Matrix a = gen_ginibre(3, 5, Field::Complex);
  const LineMinResult z = global_inf_lambda(a, Matrix(3, 3, Field::Complex));
  CHECK(z.value == operator_norm(a));
  CHECK(z.lambda_star == cx(0.0, 0.0));

  CHECK_THROWS_AS(global_inf_lambda(Matrix::identity(2), Matrix::identity(3)), InputError);
}

TEST_CASE("global_inf_lambda: diag(2,1) against I matches a λ-grid brute force") {
  const Matrix a = Matrix::diagonal({2.0, 1.0});
  const Matrix b = Matrix::identity(2);
  const auto grid =
      oracle::grid_min_refined([&](cx l) { return norm2x2_of(a, b, l); }, 4.0, 1e-3);
  for (Field field : {Field::Complex, Field::Real}) {
    const LineMinResult r = global_inf_lambda(a, b, field);
    CHECK(std::abs(r.value - grid.value) <= 1e-3);
    CHECK(std::abs(r.lambda_star - grid.at) <= 1e-3);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(std::abs(r.lambda_star - cx(-1.5, 0.0)) <= 1e-6);
  }
}

TEST_CASE("global_inf_lambda: random 2x2 pairs against the grid oracle") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Field field = s % 4 == 3 ? Field::Real : Field::Complex;
    const Matrix a = gen_ginibre(2, 3 * s, field);
    const Matrix b = gen_ginibre(2, 3 * s + 1, field);
    const double radius = 2.0 * operator_norm(a) / operator_norm(b);
    auto f = [&](cx l) { return norm2x2_of(a, b, l); };
    const auto grid = field == Field::Real ? oracle::grid_min_1d(f, radius, 1e-3)
                                           : oracle::grid_min_refined(f, radius, 1e-3);
    const LineMinResult r = global_inf_lambda(a, b, field);
    CAPTURE(s);
    CHECK(std::abs(r.value - grid.value) <= 1e-3);
    CHECK(r.value <= grid.value + 1e-7);
    CHECK_FALSE(r.budget_limited);
  }
}

TEST_CASE("λ ↦ ‖A+λB‖ is convex on sampled segments") {
  Rng rng(8);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Matrix a = gen_ginibre(3, s, Field::Complex);
    const Matrix b = gen_ginibre(3, 100 + s, Field::Complex);
    for (int k = 0; k < 10; ++k) {
      const cx l1(rng.uniform(-3, 3), rng.uniform(-3, 3));
      const cx l2(rng.uniform(-3, 3), rng.uniform(-3, 3));
      const double t = rng.uniform(0, 1);
      const double mid = lambda_objective(a, b, t * l1 + (1 - t) * l2);
      CHECK(mid <= t * lambda_objective(a, b, l1) + (1 - t) * lambda_objective(a, b, l2) + 1e-10);
    }
  }
}

TEST_CASE("global_inf_lambda never exceeds ‖A‖ and is scale equivariant") {
  Rng rng(21);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Field field = s % 2 ? Field::Real : Field::Complex;
    const std::size_t n = 2 + s % 4;
    const Matrix a = gen_ginibre(n, s, field);
    const Matrix b = gen_ginibre(n, 50 + s, field);
    const LineMinOptions tight{1e-11};
    const LineMinResult r = global_inf_lambda(a, b, tight);
    CHECK(r.value <= operator_norm(a) + 1e-12);

    const double c = rng.uniform(0.2, 3.0) * (s % 3 == 0 ? -1.0 : 1.0);
    const LineMinResult scaled = global_inf_lambda(c * a, c * b, tight);
    CAPTURE(s);
    CHECK(std::abs(scaled.value - std::abs(c) * r.value) <= 1e-8);
  }
}

TEST_CASE("global_inf_lambda: the evaluation budget flags instead of failing") {
  const Matrix a = gen_ginibre(3, 1, Field::Complex);
  const Matrix b = gen_ginibre(3, 2, Field::Complex);
  const LineMinResult r = global_inf_lambda(a, b, LineMinOptions{1e-7, 10});
  CHECK(r.budget_limited);
  CHECK(r.evaluations <= 10);
  CHECK(r.value <= operator_norm(a) + 1e-12);
}

TEST_CASE("limit_lemma_check: examples") {
  CHECK(limit_lemma_check(0.0, 1.0));
  CHECK_FALSE(limit_lemma_check(1.0, 1.0));
  CHECK_FALSE(limit_lemma_check(cx(0.0, 1e-2), 1.0));
  CHECK(limit_lemma_check(0.0, 0.0));
  CHECK_THROWS_AS(limit_lemma_check(0.0, 1.0, 3), InputError);
}

TEST_CASE("limit_lemma_check: a true answer pins |L| to the 1e-8·b² scale") {
  // Along λ = −t·L/|L| the form is t²b² − 2t|L|, negative once t < 2|L|/b².
  for (double b : {0.5, 1.0, 2.0}) {
    for (int k = 0; k < 24; ++k) {
      const cx dir = std::polar(1.0, 0.26 * k);
      CHECK(limit_lemma_check(1e-10 * b * b * dir, b));
      CHECK_FALSE(limit_lemma_check(1e-7 * b * b * dir, b));
    }
  }
}
