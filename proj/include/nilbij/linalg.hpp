#pragma once

// Dense exact linear algebra over a finite field.
//
// A Matrix with r rows and c columns is stored row-major. An n x n Matrix
// acts on column vectors: (T x)_i = sum_j T(i, j) x_j.

#include <cstddef>
#include <span>
#include <vector>

#include "nilbij/field.hpp"

namespace nilbij {

class Vector {
 public:
  Vector(FieldPtr field, std::vector<Code> entries);

  static Vector zero(FieldPtr field, std::size_t n);
  /// The standard basis vector e_i (0-based).
  static Vector unit(FieldPtr field, std::size_t n, std::size_t i);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Code operator[](std::size_t i) const noexcept { return entries_[i]; }
  void set(std::size_t i, Code c);
  std::span<const Code> entries() const noexcept { return entries_; }
  FieldElement element(std::size_t i) const { return {field_, entries_[i]}; }

  bool is_zero() const noexcept;

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  /// Scalar multiple c * this.
  Vector scaled(Code c) const;

  bool operator==(const Vector& o) const noexcept {
    return entries_ == o.entries_ && same_field(field_, o.field_);
  }

 private:
  FieldPtr field_;
  std::vector<Code> entries_;
};

class Matrix {
 public:
  /// Zero matrix.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> data);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Code>>& rows,
                          std::size_t cols = 0);
  /// Matrix whose j-th column is columns[j]; every column must have length `rows`.
  static Matrix from_columns(FieldPtr field, std::size_t rows, std::span<const Vector> columns);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Code operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Code c);
  std::span<const Code> data() const noexcept { return data_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  bool is_zero() const noexcept;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;

  bool operator==(const Matrix& o) const noexcept {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ && same_field(field_, o.field_);
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& t, const Vector& x);
/// t^e; t^0 is the identity. Throws NonSquare.
Matrix mat_pow(const Matrix& t, std::uint64_t e);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Vector operator*(const Matrix& t, const Vector& x) { return apply(t, x); }

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // ascending column indices
};

/// Gauss-Jordan elimination to the unique reduced row echelon form.
Rref rref(const Matrix& a);

std::size_t rank(const Matrix& a);
/// One vector per free column of rref(a), ascending: x_free = 1, other free
/// coordinates 0, pivot coordinates read off the reduced rows.
std::vector<Vector> kernel_basis(const Matrix& a);
/// Columns of `a` at the pivot positions of rref(a), ascending.
std::vector<Vector> image_basis(const Matrix& a);

/// rank(t) == n. The 0 x 0 operator is invertible.
bool is_invertible(const Matrix& t);
/// t^n == 0. The 0 x 0 operator is nilpotent.
bool is_nilpotent(const Matrix& t);

/// Throws NonSquare, or NotAutomorphism when t is singular.
Matrix mat_inverse(const Matrix& t);

}  // namespace nilbij
