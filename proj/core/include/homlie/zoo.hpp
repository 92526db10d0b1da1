#pragma once

#include <set>

#include "homlie/hom.hpp"

namespace homlie::zoo {

using alg::AnticommAlgebra;
using exact::FieldSpec;
using exact::Matrix;
using exact::Subspace;

/// A catalog algebra together with the claims its family is known for; the
/// tags are validated as regression tests, any sigma passes is_twisting_map
/// at construction.
struct ZooEntry {
  std::string name;
  std::vector<long long> params;
  AnticommAlgebra algebra;
  std::optional<Matrix> sigma;
  std::set<std::string> expected;
  std::optional<Subspace> distinguished_ideal;  // e.g. the unique ideal of aff
};

ZooEntry abelian(std::size_t n, FieldSpec field);
/// aff(F): [x, y] = y on basis {x, y}.
ZooEntry aff(FieldSpec field);
/// Cross-product constants [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2.
ZooEntry so3(FieldSpec field);
/// Standard basis {e, h, f}; characteristic 2 is rejected.
ZooEntry sl2(FieldSpec field);
/// Dim 2n+1, [e_{2i-1}, e_{2i}] = e_{2n+1}; sigma is the down-shift
/// e_j -> e_{j-1}, e_1 -> 0 (the minimal completion of the pinned orbit
/// sigma^i(e_{2n+1}) = e_{2n+1-i}).
ZooEntry heisenberg(std::size_t n, FieldSpec field);
/// Dim n >= 3: [e_i, e_{i+1}] = e_{i+2} (i <= n-2), [e_{n-1}, e_n] = e_1,
/// [e_n, e_1] = e_2.
ZooEntry s_family(std::size_t n, FieldSpec field);
/// A_{n+1} = F d \ltimes S_n with [d, e_1] = e_2; sigma(e_n) = d, all other
/// basis images zero. d sits at the last index.
ZooEntry a_ext(std::size_t n, FieldSpec field);
/// Dim 2n >= 4: [e_{2i-1}, e_{2i}] = e_{2i+1}, [e_{2n-1}, e_{2n}] = e_1;
/// sigma(e_{2i-1}) = e_{2i+2}, sigma(e_{2n-1}) = e_2, zero on even vectors
/// (forced by sigma^2 = 0).
ZooEntry r_family(std::size_t n, FieldSpec field);
/// aff + abelian a_n (n >= 1) with the cyclic sigma
/// y -> x -> e_1 -> ... -> e_n -> y. Basis order: x, y, e_1..e_n.
ZooEntry aff_plus_abelian(std::size_t n, FieldSpec field);
/// n copies of a simple Lie algebra s with bracket sigma o (componentwise
/// bracket) and sigma built from the given automorphisms along the standard
/// n-cycle.
ZooEntry regular_construction(const AnticommAlgebra& s, std::size_t n,
                              const std::vector<Matrix>& autos);
/// Abelian a_2 over GF(q) with a companion sigma whose characteristic
/// polynomial is irreducible, so no line is sigma-stable.
ZooEntry abelian2_with_irreducible_sigma(std::int64_t q);
/// Dim 4 simple algebra with a 4-dimensional space of twisting maps, all of
/// them singular: [e1,e2]=e3, [e1,e3]=e4, [e1,e4]=e1, [e2,e4]=e2.
ZooEntry example_a1(FieldSpec field);
/// example_a1 plus [e2,e3]=e1; simple with no nonzero twisting map at all.
ZooEntry example_a2(FieldSpec field);

/// Catalog dispatcher for the CLI: name + params + field.
ZooEntry by_name(const std::string& name, const std::vector<long long>& params, FieldSpec field);
std::vector<std::string> catalog_names();

/// Words in a small generating set of Aut(so3) (signed permutations of the
/// basis), seeded; each result is verified to preserve the bracket.
std::vector<Matrix> so3_automorphisms(FieldSpec field, std::size_t count, std::uint64_t seed);

}  // namespace homlie::zoo
