#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "homlie/matrix.hpp"
#include "homlie/subspace.hpp"

// Compact GF(p) arithmetic on int64 residues. The exhaustive enumerations
// (line closures, subspace scans) run on this representation and convert
// back to canonical Subspace values at the boundary.
namespace homlie::fp {

using exact::FieldSpec;

inline std::int64_t add(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b, std::int64_t p) {
  std::int64_t s = a - b;
  return s < 0 ? s + p : s;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }
std::int64_t inv(std::int64_t a, std::int64_t p);

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::int64_t p = 2;
  std::vector<std::int64_t> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, std::int64_t prime) : rows(r), cols(c), p(prime), a(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

Mat from_matrix(const exact::Matrix& m);
exact::Matrix to_matrix(const Mat& m, FieldSpec field);

std::vector<std::int64_t> apply(const Mat& m, const std::vector<std::int64_t>& v);

std::size_t rref_in_place(Mat& m);

/// Incremental echelon basis over GF(p).
class Basis {
 public:
  Basis(std::size_t ambient, std::int64_t p) : n_(ambient), p_(p) {}
  bool insert(std::vector<std::int64_t> v);
  bool contains(std::vector<std::int64_t> v) const;
  std::size_t dim() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  exact::Subspace to_subspace(FieldSpec field) const;

 private:
  std::size_t n_;
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> leads_;
};

/// Spin a seed under the generator matrices; stops early once full.
Basis spin(const std::vector<std::vector<std::int64_t>>& seeds, std::span<const Mat> generators,
           std::size_t ambient, std::int64_t p);

/// Canonical line representatives of GF(p)^n (first nonzero coordinate 1).
class LineIter {
 public:
  LineIter(std::size_t dim, std::int64_t p) : n_(dim), p_(p), cur_(dim, 0) {
    if (n_ == 0) done_ = true;
  }
  bool next(std::vector<std::int64_t>& out);

 private:
  std::size_t n_;
  std::int64_t p_;
  std::vector<std::int64_t> cur_;
  std::size_t lead_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// All RREF bases of k-dimensional subspaces of GF(p)^n, every subspace once.
/// visit receives the rows of the basis; return false from visit to stop.
/// Returns false when the visitor stopped early.
bool for_each_subspace_basis(std::size_t n, std::size_t k, std::int64_t p,
                             const std::function<bool(const std::vector<std::vector<std::int64_t>>&)>& visit);

/// Number of k-dim subspaces of GF(p)^n (Gaussian binomial).
std::uint64_t subspace_count(std::size_t n, std::size_t k, std::int64_t p);

}  // namespace homlie::fp
