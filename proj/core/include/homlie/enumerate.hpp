#pragma once

#include <optional>

#include "homlie/subspace.hpp"

namespace homlie::exact {

/// Streams all p^n vectors of GF(p)^n in odometer order.
class VectorEnumerator {
 public:
  VectorEnumerator(FieldSpec field, std::size_t dim);
  std::optional<Vec> next();

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::int64_t> cur_;
  bool done_ = false;
  bool started_ = false;
};

/// Streams all (p^n - 1)/(p - 1) one-dimensional subspaces of GF(p)^n, each
/// once, via the canonical first-nonzero-coordinate-equals-1 representative.
class LineEnumerator {
 public:
  LineEnumerator(FieldSpec field, std::size_t dim);
  std::optional<Subspace> next();
  std::optional<Vec> next_representative();

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::size_t lead_ = 0;
  std::vector<std::int64_t> tail_;  // coordinates after the leading 1
  bool done_ = false;
  bool started_ = false;
};

/// Number of lines in GF(p)^n.
std::uint64_t line_count(FieldSpec field, std::size_t dim);

}  // namespace homlie::exact
