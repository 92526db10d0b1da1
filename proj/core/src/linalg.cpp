#include "homlie/linalg.hpp"

namespace homlie::exact {

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t pr = r;
    while (pr < nr && a(pr, c).is_zero()) ++pr;
    if (pr == nr) continue;
    if (pr != r) {
      for (std::size_t k = 0; k < nc; ++k) std::swap(a(r, k), a(pr, k));
    }
    const Scalar inv = a(r, c).inverse();
    for (std::size_t k = c; k < nc; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (std::size_t k = c; k < nc; ++k) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: rhs length != rows");
  const FieldSpec f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    if (b[r].field() != f) throw FieldMismatchError("solve: rhs field differs");
    aug(r, m.cols()) = b[r];
  }
  const RrefResult rr = rref(aug);
  // inconsistent iff some pivot sits in the augmented column
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;
  }
  Vec x = zero_vec(f, m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    x[rr.pivots[i]] = rr.mat(i, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse requires a square matrix");
  const std::size_t n = m.rows();
  const FieldSpec f = m.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(f);
  }
  const RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivots.back() >= n) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.mat(r, n + c);
  return inv;
}

bool is_invertible(const Matrix& m) {
  if (!m.is_square()) return false;
  return rank(m) == m.rows();
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant requires a square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  const FieldSpec f = a.field();
  Scalar det = Scalar::one(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && a(pr, c).is_zero()) ++pr;
    if (pr == n) return Scalar::zero(f);
    if (pr != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(pr, k));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar fct = a(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(i, k) -= fct * a(c, k);
    }
  }
  return det;
}

EchelonBasis::EchelonBasis(FieldSpec field, std::size_t ambient)
    : field_(field), ambient_(ambient) {}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != ambient_) throw DimensionError("EchelonBasis: ambient mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[leads_[i]];
    if (!c.is_zero()) v = vec_sub(v, vec_scale(c, rows_[i]));
  }
  std::size_t lead = 0;
  while (lead < ambient_ && v[lead].is_zero()) ++lead;
  if (lead == ambient_) return false;
  v = vec_scale(v[lead].inverse(), v);
  rows_.push_back(std::move(v));
  leads_.push_back(lead);
  return true;
}

bool EchelonBasis::contains(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[leads_[i]];
    if (!c.is_zero()) v = vec_sub(v, vec_scale(c, rows_[i]));
  }
  return vec_is_zero(v);
}

EchelonBasis spin(FieldSpec field, std::size_t ambient, const std::vector<Vec>& seeds,
                  std::span<const Matrix> generators) {
  EchelonBasis basis(field, ambient);
  std::vector<Vec> work = seeds;
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    if (!basis.insert(v)) continue;
    if (basis.full()) break;
    const Vec& added = basis.rows().back();
    for (const Matrix& g : generators) work.push_back(g.apply(added));
  }
  return basis;
}

}  // namespace homlie::exact
