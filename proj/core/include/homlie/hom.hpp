#pragma once

#include "homlie/algebra.hpp"

namespace homlie::hom {

using alg::AnticommAlgebra;
using alg::IdealReport;
using alg::SimplicityOptions;
using exact::FieldSpec;
using exact::Matrix;
using exact::Polynomial;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;

/// J(x,y,z) = [sigma x,[y,z]] + [sigma y,[z,x]] + [sigma z,[x,y]].
Vec hom_jacobian(const AnticommAlgebra& a, const Matrix& sigma, const Vec& x, const Vec& y,
                 const Vec& z);

/// The Hom-Jacobi identity; vanishing on basis triples i<j<k suffices since
/// the Hom-Jacobian is trilinear and alternating.
bool is_twisting_map(const AnticommAlgebra& a, const Matrix& sigma);

/// An algebra paired with a validated twisting map.
class HomLie {
 public:
  HomLie(AnticommAlgebra algebra, Matrix sigma);

  const AnticommAlgebra& algebra() const { return algebra_; }
  const Matrix& sigma() const { return sigma_; }
  FieldSpec field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }

 private:
  AnticommAlgebra algebra_;
  Matrix sigma_;
};

/// The space HS(A) of all twisting maps, as the kernel of the linear map
/// sending sigma to its Hom-Jacobian on basis triples.
struct HSSpace {
  AnticommAlgebra algebra;
  Subspace flat;               // subspace of F^(n^2), row-major
  std::vector<Matrix> basis;   // same data reshaped to n x n

  std::size_t dim() const { return basis.size(); }
};

HSSpace hs_space(const AnticommAlgebra& a);

/// Least superspace of S closed under all ad e_i and under sigma.
Subspace hom_ideal_closure(const AnticommAlgebra& a, const Matrix& sigma, const Subspace& s);
bool is_hom_ideal(const AnticommAlgebra& a, const Matrix& sigma, const Subspace& s);

/// Exhaustive line closures over GF(p); Norton-style irreducibility over Q
/// with sigma adjoined to the envelope generators.
IdealReport is_hom_simple(const AnticommAlgebra& a, const Matrix& sigma,
                          const SimplicityOptions& opts = {});

bool is_multiplicative(const AnticommAlgebra& a, const Matrix& sigma);
bool is_regular(const AnticommAlgebra& a, const Matrix& sigma);

/// Bracket replaced by theta o [.,.]; anticommutativity is automatic.
AnticommAlgebra outside_twist(const AnticommAlgebra& a, const Matrix& theta);
/// Bracket replaced by [theta ., theta .].
AnticommAlgebra inside_twist(const AnticommAlgebra& a, const Matrix& theta);

/// (A, theta o [.,.], theta o sigma) for multiplicative theta; the twisted
/// Hom-Jacobian is theta^2 o J, so the result validates.
HomLie yau_twist(const HomLie& h, const Matrix& theta);

/// Algebra with bracket sigma^{-1} o [.,.]. Requires sigma invertible and
/// checks the result is Lie; when sigma is multiplicative it also is an
/// automorphism of the result.
AnticommAlgebra induced_lie(const HomLie& h);

/// phi [x,y]_1 = [phi x, phi y]_2 on basis pairs, and phi sigma_1 = sigma_2 phi.
bool is_hom_morphism(const Matrix& phi, const HomLie& h1, const HomLie& h2);

/// Invariant factors of sigma^n restricted to a sigma^n-stable component;
/// the similarity class is a necessary invariant of the structure. Equal
/// similarity classes do not certify isomorphism (conjugacy is taken inside
/// the full automorphism group, which this does not decide).
std::vector<Polynomial> regular_invariant(const HomLie& h, const Subspace& component,
                                          std::size_t n);

enum class PsVerdict { Yes, No, ProbablyNo };

struct ClassMembership {
  bool simple = false;
  bool ss = false;       // simple with respect to every twisting map
  bool ss_star = false;  // ss with HS(A) != 0
  PsVerdict ps = PsVerdict::No;
  std::string notes;
};

struct MembershipOptions {
  std::uint64_t enumeration_budget = 1'000'000;  // exact when p^dim HS fits
  int samples = 200;                             // randomized fallback
  std::uint64_t seed = 0;
  SimplicityOptions simplicity;
};

ClassMembership classify_membership(const AnticommAlgebra& a, const MembershipOptions& opts = {});

const char* ps_verdict_name(PsVerdict v);

}  // namespace homlie::hom
