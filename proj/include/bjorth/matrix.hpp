#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace bjorth {

using cx = std::complex<double>;

/// Scalar field of a matrix or vector. Storage is always complex; a REAL
/// object keeps every imaginary part at exactly zero.
enum class Field { Real, Complex };

std::string_view to_string(Field f);
Field field_from_string(std::string_view s);

/// Field of a binary operation: complex if either operand is complex.
inline Field common_field(Field a, Field b) {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real;
}

class Vector {
public:
  Vector() = default;
  Vector(std::size_t dim, Field field);
  Vector(std::vector<cx> entries, Field field);

  static Vector basis(std::size_t dim, std::size_t k, Field field);

  std::size_t dim() const { return data_.size(); }
  Field field() const { return field_; }

  cx& operator[](std::size_t i) { return data_[i]; }
  const cx& operator[](std::size_t i) const { return data_[i]; }

  std::span<const cx> entries() const { return data_; }
  std::span<cx> entries() { return data_; }

  double norm() const;
  double norm_squared() const;
  bool all_finite() const;

  /// Returns this / ‖this‖; throws InputError on a zero vector.
  Vector normalized() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(cx s);

private:
  std::vector<cx> data_;
  Field field_ = Field::Real;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(cx s, Vector v);

/// ⟨u, v⟩ = Σ uᵢ conj(vᵢ): linear in the first argument.
cx inner(const Vector& u, const Vector& v);

/// Dense row-major matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);
  Matrix(std::size_t rows, std::size_t cols, std::vector<cx> entries, Field field);

  static Matrix identity(std::size_t n, Field field = Field::Real);
  static Matrix diagonal(std::initializer_list<double> diag);
  /// Real matrix from nested rows; convenience for tests and examples.
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<cx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Field field() const { return field_; }

  cx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cx> entries() const { return data_; }

  Vector column(std::size_t c) const;
  Matrix adjoint() const;
  /// (M + M*)/2
  Matrix hermitian_part() const;
  double frobenius_norm() const;
  bool all_finite() const;
  bool is_zero() const;

  /// Copy relabelled with a (possibly wider) field; demotion to REAL is refused.
  Matrix with_field(Field field) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cx s);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cx> data_;
  Field field_ = Field::Real;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(cx s, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);

/// Throws InputError unless the matrix has positive shape and finite entries.
void validate(const Matrix& m, std::string_view name = "matrix");
/// validate() on both plus an equal-shape check.
void validate_pair(const Matrix& a, const Matrix& b);

}  // namespace bjorth
