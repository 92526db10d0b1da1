#pragma once

#include "homlie/linalg.hpp"

namespace homlie::exact {

/// A subspace of F^n held as its unique RREF basis (no zero rows), so
/// equality of representations is equality of subspaces.
class Subspace {
 public:
  static Subspace zero(FieldSpec field, std::size_t ambient);
  static Subspace full(FieldSpec field, std::size_t ambient);
  static Subspace span(FieldSpec field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace line(const Vec& v);

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// RREF basis, one row per dimension.
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_rows() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;  // Zassenhaus

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  void check_compatible(const Subspace& other) const;

  std::size_t ambient_;
  Matrix basis_;
};

/// {v : m v = 0} as a canonical subspace; dim = cols - rank.
Subspace kernel(const Matrix& m);

}  // namespace homlie::exact
