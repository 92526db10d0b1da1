#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "homlie/field.hpp"

namespace homlie::exact {

using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec field, std::size_t n);
Vec basis_vec(FieldSpec field, std::size_t n, std::size_t index);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense row-major matrix with all entries over one field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);  // zero matrix
  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, const std::vector<Vec>& rows);
  /// Integer literals, convenient in tests and zoo constructors.
  static Matrix from_ints(FieldSpec field, std::initializer_list<std::initializer_list<long long>> rows);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  Matrix pow(std::size_t k) const;  // square matrices

  bool is_zero() const;
  bool operator==(const Matrix&) const = default;

  /// Row-major flattening, used to view End(A) as F^(n^2).
  Vec flatten() const { return e_; }
  static Matrix unflatten(FieldSpec field, std::size_t rows, std::size_t cols, const Vec& flat);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> e_;
};

}  // namespace homlie::exact
