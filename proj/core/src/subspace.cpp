#include "homlie/subspace.hpp"

namespace homlie::exact {

Subspace Subspace::zero(FieldSpec field, std::size_t ambient) {
  return Subspace(ambient, Matrix(field, 0, ambient));
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient) {
  return Subspace(ambient, Matrix::identity(field, ambient));
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const Vec& v : vectors) {
    if (v.size() != ambient) throw DimensionError("span: vector length != ambient");
  }
  if (vectors.empty()) return zero(field, ambient);
  const RrefResult rr = rref(Matrix::from_rows(field, vectors));
  Matrix basis(field, rr.rank, ambient);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < ambient; ++c) basis(r, c) = rr.mat(r, c);
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::line(const Vec& v) {
  if (v.empty()) throw DimensionError("line: empty vector");
  return span(v.front().field(), v.size(), {v});
}

std::vector<Vec> Subspace::basis_rows() const {
  std::vector<Vec> rows;
  rows.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_.row(r));
  return rows;
}

void Subspace::check_compatible(const Subspace& other) const {
  if (field() != other.field()) throw FieldMismatchError("subspace fields differ");
  if (ambient_ != other.ambient_) throw DimensionError("subspace ambient dims differ");
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: vector length != ambient");
  EchelonBasis eb(field(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) eb.insert(basis_.row(r));
  return eb.contains(v);
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  std::vector<Vec> rows = basis_rows();
  for (auto& r : other.basis_rows()) rows.push_back(std::move(r));
  return span(field(), ambient_, rows);
}

Subspace kernel(const Matrix& m) {
  const RrefResult rr = rref(m);
  const FieldSpec f = m.field();
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t cf = 0; cf < nc; ++cf) {
    if (is_pivot[cf]) continue;
    Vec v = zero_vec(f, nc);
    v[cf] = Scalar::one(f);
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.mat(r, cf);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, nc, basis);
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  // Zassenhaus: rref of [A|A ; B|0]; rows with zero left half carry the
  // intersection in their right half.
  const std::size_t n = ambient_;
  const FieldSpec f = field();
  Matrix big(f, dim() + other.dim(), 2 * n);
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      big(r, c) = basis_(r, c);
      big(r, n + c) = basis_(r, c);
    }
  }
  for (std::size_t r = 0; r < other.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) big(dim() + r, c) = other.basis_(r, c);
  }
  const RrefResult rr = rref(big);
  std::vector<Vec> inter;
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] < n) continue;  // left half nonzero
    Vec v(n, Scalar::zero(f));
    for (std::size_t c = 0; c < n; ++c) v[c] = rr.mat(r, n + c);
    inter.push_back(std::move(v));
  }
  return span(f, n, inter);
}

}  // namespace homlie::exact
