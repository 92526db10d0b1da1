#include "homlie/matrix.hpp"

namespace homlie::exact {

namespace {

void check_same_length(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

Vec zero_vec(FieldSpec field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

Vec basis_vec(FieldSpec field, std::size_t n, std::size_t index) {
  Vec v = zero_vec(field, n);
  v.at(index) = Scalar::one(field);
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  check_same_length(a, b);
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  check_same_length(a, b);
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vec>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw DimensionError("ragged rows in from_rows");
    for (std::size_t c = 0; c < nc; ++c) {
      if (rows[r][c].field() != field) throw FieldMismatchError("mixed-field entries in from_rows");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(FieldSpec field,
                         std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<Vec> rv;
  for (const auto& row : rows) {
    Vec v;
    for (long long x : row) v.push_back(Scalar::from_int(field, x));
    rv.push_back(std::move(v));
  }
  return from_rows(field, rv);
}

Vec Matrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("set_row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw DimensionError("set_col length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix m(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatchError("matrix fields differ");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix shapes differ");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += rhs.e_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatchError("matrix fields differ");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix shapes differ");
  Matrix m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= rhs.e_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatchError("matrix fields differ");
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix m(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        m(r, c) += a * rhs(k, c);
      }
    }
  }
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.e_) x *= c;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix apply length mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::pow(std::size_t k) const {
  if (!is_square()) throw DimensionError("pow requires a square matrix");
  Matrix acc = identity(field_, rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::unflatten(FieldSpec field, std::size_t rows, std::size_t cols, const Vec& flat) {
  if (flat.size() != rows * cols) throw DimensionError("unflatten length mismatch");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i].field() != field) throw FieldMismatchError("mixed-field entries in unflatten");
    m.e_[i] = flat[i];
  }
  return m;
}

}  // namespace homlie::exact
