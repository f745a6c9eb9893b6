#include "bjorth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bjorth/errors.hpp"

namespace bjorth {

namespace {

double off_diagonal_norm(const Matrix& h) {
  double s = 0.0;
  for (std::size_t p = 0; p < h.rows(); ++p) {
    for (std::size_t q = 0; q < h.cols(); ++q) {
      if (p != q) s += std::norm(h(p, q));
    }
  }
  return std::sqrt(s);
}

// One two-sided rotation zeroing h(p, q). The phase factor makes the pivot
// real, then a real Jacobi rotation finishes the 2x2 block.
void rotate(Matrix& h, Matrix& v, std::size_t p, std::size_t q) {
  const cx c = h(p, q);
  const double r = std::abs(c);
  if (r == 0.0) return;
  const cx phase = std::conj(c / r);
  const double a = h(p, p).real();
  const double b = h(q, q).real();
  const double theta = (b - a) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double cs = 1.0 / std::sqrt(t * t + 1.0);
  const double sn = t * cs;
  const cx jpp = cs;
  const cx jpq = sn;
  const cx jqp = -sn * phase;
  const cx jqq = cs * phase;

  const std::size_t n = h.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const cx hkp = h(k, p);
    const cx hkq = h(k, q);
    h(k, p) = hkp * jpp + hkq * jqp;
    h(k, q) = hkp * jpq + hkq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cx hpk = h(p, k);
    const cx hqk = h(q, k);
    h(p, k) = std::conj(jpp) * hpk + std::conj(jqp) * hqk;
    h(q, k) = std::conj(jpq) * hpk + std::conj(jqq) * hqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const cx vkp = v(k, p);
    const cx vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
}

// M*M scaled by 1/max|m_ij|², plus that scale.
std::pair<Matrix, double> scaled_gram(const Matrix& m) {
  double scale = 0.0;
  for (const auto& z : m.entries()) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return {Matrix(m.cols(), m.cols(), m.field()), 0.0};
  const Matrix ms = (1.0 / scale) * m;
  return {ms.adjoint() * ms, scale};
}

}  // namespace

EigenDecomposition hermitian_eig(const Matrix& input) {
  if (!input.square()) throw InputError("hermitian_eig: matrix must be square");
  validate(input, "H");
  const double fro = input.frobenius_norm();
  if ((input - input.adjoint()).frobenius_norm() > 1e-10 * fro) {
    throw InputError("hermitian_eig: matrix is not Hermitian");
  }

  const std::size_t n = input.rows();
  Matrix h = input.hermitian_part();
  Matrix v = Matrix::identity(n, input.field());

  EigenDecomposition out;
  const double threshold = kJacobiTol * fro;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(h);
    if (off == 0.0 || off <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(h, v, p, q);
    }
    out.sweeps = sweep + 1;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return h(i, i).real() < h(j, j).real(); });
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t i : order) {
    out.values.push_back(h(i, i).real());
    out.vectors.push_back(v.column(i));
  }
  return out;
}

double operator_norm(const Matrix& m) { return top_singular_subspace(m).op_norm; }

SpectralData top_singular_subspace(const Matrix& m, double rank_tol) {
  if (!(rank_tol > 0.0 && rank_tol < 1e-2)) {
    throw InputError("top_singular_subspace: rank_tol must lie in (0, 1e-2)");
  }
  validate(m, "M");

  SpectralData out;
  out.rank_tol = rank_tol;
  const auto [gram, scale] = scaled_gram(m);
  if (scale == 0.0) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      out.top_subspace.push_back(Vector::basis(m.cols(), k, m.field()));
    }
    return out;
  }

  const EigenDecomposition eig = hermitian_eig(gram);
  const double sigma_max = std::sqrt(std::max(eig.values.back(), 0.0));
  const double cutoff = sigma_max * (1.0 - rank_tol);
  double attained = sigma_max;
  for (std::size_t i = eig.values.size(); i-- > 0;) {
    if (std::sqrt(std::max(eig.values[i], 0.0)) < cutoff) break;
    out.top_subspace.push_back(eig.vectors[i]);
    attained = std::max(attained, (m * eig.vectors[i]).norm() / scale);
  }
  // ‖Mv‖ for the basis never exceeds the reported norm.
  out.op_norm = scale * attained;
  return out;
}

}  // namespace bjorth
