#include "bjorth/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bjorth/errors.hpp"

namespace bjorth {

std::string_view to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

Field field_from_string(std::string_view s) {
  if (s == "real" || s == "r") return Field::Real;
  if (s == "complex" || s == "c") return Field::Complex;
  throw InputError("unknown field '" + std::string(s) + "' (expected real|complex)");
}

namespace {

Field widen_for(Field f, cx s) { return s.imag() != 0.0 ? Field::Complex : f; }

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t dim, Field field) : data_(dim), field_(field) {}

Vector::Vector(std::vector<cx> entries, Field field) : data_(std::move(entries)), field_(field) {
  if (field_ == Field::Real) {
    for (const auto& z : data_) {
      if (z.imag() != 0.0) throw InputError("real vector with nonzero imaginary part");
    }
  }
}

Vector Vector::basis(std::size_t dim, std::size_t k, Field field) {
  Vector e(dim, field);
  e[k] = 1.0;
  return e;
}

double Vector::norm_squared() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return s;
}

double Vector::norm() const {
  // Scaled accumulation keeps tiny and huge vectors out of under/overflow.
  double scale = 0.0;
  for (const auto& z : data_) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z / scale);
  return scale * std::sqrt(s);
}

bool Vector::all_finite() const {
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

Vector Vector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InputError("cannot normalize a zero vector");
  Vector out = *this;
  for (auto& z : out.data_) z /= n;
  return out;
}

Vector& Vector::operator+=(const Vector& other) {
  if (dim() != other.dim()) throw InputError("vector dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  field_ = common_field(field_, other.field_);
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (dim() != other.dim()) throw InputError("vector dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  field_ = common_field(field_, other.field_);
  return *this;
}

Vector& Vector::operator*=(cx s) {
  for (auto& z : data_) z *= s;
  field_ = widen_for(field_, s);
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator*(cx s, Vector v) { return v *= s; }

cx inner(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) throw InputError("inner product dimension mismatch");
  cx s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), data_(rows * cols), field_(field) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cx> entries, Field field)
    : rows_(rows), cols_(cols), data_(std::move(entries)), field_(field) {
  if (data_.size() != rows_ * cols_) {
    throw InputError("matrix data length " + std::to_string(data_.size()) + " != rows*cols " +
                     std::to_string(rows_ * cols_));
  }
  if (field_ == Field::Real) {
    for (const auto& z : data_) {
      if (z.imag() != 0.0) throw InputError("real matrix with nonzero imaginary part");
    }
  }
}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::initializer_list<double> diag) {
  Matrix m(diag.size(), diag.size(), Field::Real);
  std::size_t i = 0;
  for (double d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<cx> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix rows");
    for (double x : row) data.emplace_back(x, 0.0);
  }
  return Matrix(r, c, std::move(data), Field::Real);
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<cx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<cx> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw InputError("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data), Field::Complex);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Matrix Matrix::hermitian_part() const {
  if (!square()) throw InputError("hermitian part of a non-square matrix");
  Matrix out(rows_, cols_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    }
  }
  return out;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool Matrix::all_finite() const {
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& z : data_) {
    if (z != 0.0) return false;
  }
  return true;
}

Matrix Matrix::with_field(Field field) const {
  if (field == Field::Real && field_ == Field::Complex) {
    throw InputError("refusing to demote a complex matrix to real");
  }
  Matrix out = *this;
  out.field_ = field;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  field_ = common_field(field_, other.field_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  field_ = common_field(field_, other.field_);
  return *this;
}

Matrix& Matrix::operator*=(cx s) {
  for (auto& z : data_) z *= s;
  field_ = widen_for(field_, s);
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cx s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols(), common_field(a.field(), b.field()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.dim()) throw InputError("matrix-vector shape mismatch");
  Vector out(m.rows(), common_field(m.field(), v.field()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cx s = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

void validate(const Matrix& m, std::string_view name) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InputError(std::string(name) + ": empty matrix");
  }
  if (!m.all_finite()) throw InputError(std::string(name) + ": non-finite entries");
}

void validate_pair(const Matrix& a, const Matrix& b) {
  validate(a, "A");
  validate(b, "B");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("A and B must have the same shape");
  }
}

}  // namespace bjorth
