#pragma once

#include <optional>
#include <span>
#include <vector>

#include "homlie/matrix.hpp"

namespace homlie::exact {

struct RrefResult {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Unique reduced row-echelon form; exact arithmetic, no rounding.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some solution of m x = b, or nullopt exactly when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Incremental echelon basis of a subspace of F^n; insertion order agnostic.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec field, std::size_t ambient);

  /// Reduces v against the basis; returns true when the rank grew.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  bool full() const { return rows_.size() == ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;           // echelon, leading entry 1
  std::vector<std::size_t> leads_;  // lead column of each row
};

/// Smallest subspace containing the seeds and invariant under every
/// generator; this is the spinning step shared by ideal closures and the
/// irreducibility tests.
EchelonBasis spin(FieldSpec field, std::size_t ambient, const std::vector<Vec>& seeds,
                  std::span<const Matrix> generators);

}  // namespace homlie::exact
