#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "homlie/enumerate.hpp"
#include "homlie/poly.hpp"
#include "homlie/subspace.hpp"

namespace homlie::alg {

using exact::FieldSpec;
using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;

struct BracketEntry {
  std::size_t i, j;  // i < j
  Vec v;             // coefficients of [e_i, e_j]
};

/// Anticommutative algebra given by structure constants: [e_i, e_j] for
/// i < j; the i >= j values follow from [x,x] = 0. Immutable once built.
class AnticommAlgebra {
 public:
  AnticommAlgebra(FieldSpec field, std::size_t dim, std::vector<BracketEntry> brackets = {});

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  /// Nonzero structure constants, keyed by (i, j) with i < j.
  const std::map<std::pair<std::size_t, std::size_t>, Vec>& entries() const { return constants_; }

  /// [e_i, e_j] for arbitrary index order.
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of y -> [x, y].
  Matrix ad(const Vec& x) const;
  std::size_t rank_ad(const Vec& x) const;

  bool is_abelian() const;
  /// Classical Jacobi identity on all basis triples.
  bool is_lie() const;

  Subspace center() const;
  /// A, [A,A], [[A,A],[A,A]], ... until stable.
  std::vector<Subspace> derived_series() const;
  /// A, [A,A], [[A,A],A], ... until stable.
  std::vector<Subspace> lower_central_series() const;
  bool is_solvable() const;
  bool is_nilpotent() const;

  bool operator==(const AnticommAlgebra&) const = default;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> constants_;
};

/// Span of [s, a] for s in S, a in A (bilinear product of subspaces).
Subspace bracket_span(const AnticommAlgebra& a, const Subspace& s, const Subspace& t);

/// Least superspace of S with [closure, A] contained in it.
Subspace ideal_closure(const AnticommAlgebra& a, const Subspace& s);
bool is_ideal(const AnticommAlgebra& a, const Subspace& s);

enum class Verdict { Simple, NotSimple, Inconclusive };

struct IdealReport {
  Verdict verdict = Verdict::Inconclusive;
  /// Proper nontrivial ideal certifying NotSimple. Absent for abelian
  /// hom-verdicts, where no such Hom-ideal need exist.
  std::optional<Subspace> witness;
  std::vector<Subspace> proper_nontrivial_ideals_seen;
  std::string note;

  bool is_simple() const { return verdict == Verdict::Simple; }
  bool conclusive() const { return verdict != Verdict::Inconclusive; }
};

struct SimplicityOptions {
  int norton_budget = 32;      // envelope elements tried over Q
  int random_lines = 8;        // extra random line closures over Q
  std::uint64_t seed = 0;
  bool collect_ideals = false; // keep scanning after the first witness
};

/// Exhaustive line-closure test over GF(p); quick checks plus a
/// Norton-style irreducibility test over Q (three-valued).
IdealReport is_simple(const AnticommAlgebra& a, const SimplicityOptions& opts = {});

/// Certifies that `candidate` is the unique proper nontrivial ideal, by
/// closing every line inside and outside it. GF(p) only.
bool unique_proper_ideal_check(const AnticommAlgebra& a, const Subspace& candidate);

/// The subspace condition: [S,A] = A or [S,A] strictly inside [[S,A],A].
bool simplicity_criterion_condition(const AnticommAlgebra& a, const Subspace& s);

/// Quantifies the condition over every nontrivial subspace of GF(p)^n.
bool is_simple_via_criterion(const AnticommAlgebra& a, std::uint64_t budget = 2'000'000);

AnticommAlgebra direct_sum(const AnticommAlgebra& a, const AnticommAlgebra& b);

/// Appends a basis vector d (last index) with [d, x] = D x on the old
/// algebra; brackets inside the old algebra are unchanged.
AnticommAlgebra extend_by_element(const AnticommAlgebra& a, const Matrix& d);

/// Exhaustive search over GL(n, p) for an algebra isomorphism; budget-bound
/// (dim <= 4, p <= 3).
std::optional<Matrix> isomorphic_bruteforce(const AnticommAlgebra& a, const AnticommAlgebra& b);

/// ad matrices of all basis vectors (generators of the multiplication
/// envelope).
std::vector<Matrix> ad_generators(const AnticommAlgebra& a);

}  // namespace homlie::alg
