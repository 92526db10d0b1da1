#include "doctest.h"

#include <random>

#include "homlie/algebra.hpp"
#include "homlie/zoo.hpp"

using namespace homlie;
using namespace homlie::alg;
using exact::FieldSpec;
using exact::Matrix;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Vec ev(FieldSpec f, std::size_t n, std::size_t i) { return exact::basis_vec(f, n, i); }

Vec random_vec(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::from_int(f, d(rng)));
  return v;
}

}  // namespace

TEST_CASE("bracket: pinned values and antisymmetry") {
  const auto so3 = zoo::so3(Q).algebra;
  CHECK(so3.bracket(ev(Q, 3, 0), ev(Q, 3, 1)) == ev(Q, 3, 2));
  CHECK(so3.bracket(ev(Q, 3, 1), ev(Q, 3, 2)) == ev(Q, 3, 0));
  CHECK(so3.bracket(ev(Q, 3, 2), ev(Q, 3, 0)) == ev(Q, 3, 1));

  const auto aff = zoo::aff(Q).algebra;
  CHECK(aff.bracket(ev(Q, 2, 0), ev(Q, 2, 1)) == ev(Q, 2, 1));

  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const Vec x = random_vec(Q, 3, rng);
    const Vec y = random_vec(Q, 3, rng);
    CHECK(exact::vec_is_zero(so3.bracket(x, x)));
    CHECK(so3.bracket(x, y) == exact::vec_scale(Scalar::from_int(Q, -1), so3.bracket(y, x)));
  }
  CHECK_THROWS_AS(so3.bracket(ev(Q, 2, 0), ev(Q, 3, 0)), DimensionError);
}

TEST_CASE("ad: ranks") {
  const auto so3 = zoo::so3(Q).algebra;
  CHECK(so3.rank_ad(ev(Q, 3, 0)) == 2);  // image spans e3, -e2
  const auto ab = zoo::abelian(4, Q).algebra;
  std::mt19937_64 rng(2);
  CHECK(ab.rank_ad(random_vec(Q, 4, rng)) == 0);
  const auto aff = zoo::aff(Q).algebra;
  CHECK(aff.rank_ad(ev(Q, 2, 0)) == 1);  // image = F y
}

TEST_CASE("is_lie: so3 and abelian yes, examples-7.4 A1 no") {
  CHECK(zoo::so3(Q).algebra.is_lie());
  CHECK(zoo::abelian(3, Q).algebra.is_lie());
  CHECK(zoo::sl2(Q).algebra.is_lie());

  const auto a1 = zoo::example_a1(Q).algebra;
  CHECK_FALSE(a1.is_lie());
  // the Jacobi defect on (e1,e3,e4) is e4
  Vec jac = a1.bracket(ev(Q, 4, 0), a1.bracket(ev(Q, 4, 2), ev(Q, 4, 3)));
  jac = exact::vec_add(jac, a1.bracket(ev(Q, 4, 2), a1.bracket(ev(Q, 4, 3), ev(Q, 4, 0))));
  jac = exact::vec_add(jac, a1.bracket(ev(Q, 4, 3), a1.bracket(ev(Q, 4, 0), ev(Q, 4, 2))));
  CHECK(jac == ev(Q, 4, 3));
}

TEST_CASE("series, solvability, center") {
  SUBCASE("heisenberg h3 is 2-step nilpotent with center e3") {
    const auto h3 = zoo::heisenberg(1, Q).algebra;
    CHECK(h3.is_nilpotent());
    CHECK(h3.lower_central_series().size() == 3);  // A > [A,A] > 0
    CHECK(h3.center() == Subspace::line(ev(Q, 3, 2)));
  }
  SUBCASE("aff is solvable, not nilpotent") {
    const auto aff = zoo::aff(Q).algebra;
    CHECK(aff.is_solvable());
    CHECK_FALSE(aff.is_nilpotent());
    const auto ds = aff.derived_series();
    REQUIRE(ds.size() == 3);
    CHECK(ds[1] == Subspace::line(ev(Q, 2, 1)));
    CHECK(ds[2].is_zero());
    CHECK(aff.lower_central_series().back() == Subspace::line(ev(Q, 2, 1)));
  }
  SUBCASE("so3 is not solvable and centerless") {
    CHECK_FALSE(zoo::so3(Q).algebra.is_solvable());
    CHECK(zoo::so3(Q).algebra.center().is_zero());
  }
  SUBCASE("series terms are ideals") {
    for (const auto& entry : {zoo::aff(Q), zoo::heisenberg(2, Q), zoo::r_family(2, Q)}) {
      for (const auto& term : entry.algebra.derived_series()) {
        CHECK(is_ideal(entry.algebra, term));
      }
      for (const auto& term : entry.algebra.lower_central_series()) {
        CHECK(is_ideal(entry.algebra, term));
      }
    }
  }
}

TEST_CASE("ideal_closure: pinned examples and closure-operator laws") {
  const auto so3 = zoo::so3(Q).algebra;
  const auto aff = zoo::aff(Q).algebra;
  CHECK(ideal_closure(so3, Subspace::line(ev(Q, 3, 0))).is_full());
  CHECK(ideal_closure(aff, Subspace::line(ev(Q, 2, 1))) == Subspace::line(ev(Q, 2, 1)));
  CHECK(ideal_closure(so3, Subspace::zero(Q, 3)).is_zero());

  CHECK(is_ideal(aff, Subspace::line(ev(Q, 2, 1))));
  CHECK_FALSE(is_ideal(so3, Subspace::line(ev(Q, 3, 0))));
  CHECK(is_ideal(so3, Subspace::full(Q, 3)));

  SUBCASE("extensive, monotone, idempotent on sampled subspaces") {
    std::mt19937_64 rng(3);
    const auto h5 = zoo::heisenberg(2, FieldSpec::gf(3)).algebra;
    for (int t = 0; t < 15; ++t) {
      const Vec v = random_vec(h5.field(), 5, rng);
      const Vec w = random_vec(h5.field(), 5, rng);
      const Subspace s = Subspace::span(h5.field(), 5, {v});
      const Subspace s2 = Subspace::span(h5.field(), 5, {v, w});
      const Subspace c = ideal_closure(h5, s);
      const Subspace c2 = ideal_closure(h5, s2);
      CHECK(c.contains(s));              // extensive
      CHECK(c2.contains(c));             // monotone
      CHECK(ideal_closure(h5, c) == c);  // idempotent
    }
  }
}

TEST_CASE("is_simple: exhaustive over GF(p), norton over Q") {
  SUBCASE("so3 over GF(5) is simple by closing all 31 lines") {
    const auto r = is_simple(zoo::so3(FieldSpec::gf(5)).algebra);
    CHECK(r.is_simple());
  }
  SUBCASE("aff is not simple, witness span{y}") {
    for (FieldSpec f : {Q, FieldSpec::gf(2), FieldSpec::gf(3)}) {
      const auto r = is_simple(zoo::aff(f).algebra);
      CHECK_FALSE(r.is_simple());
      CHECK(r.conclusive());
      REQUIRE(r.witness.has_value());
      CHECK(*r.witness == Subspace::line(ev(f, 2, 1)));
    }
  }
  SUBCASE("S4 over GF(3) is simple") {
    CHECK(is_simple(zoo::s_family(4, FieldSpec::gf(3)).algebra).is_simple());
  }
  SUBCASE("norton closes the rational cases conclusively") {
    for (const auto& entry :
         {zoo::so3(Q), zoo::sl2(Q), zoo::example_a1(Q), zoo::example_a2(Q), zoo::s_family(5, Q)}) {
      const auto r = is_simple(entry.algebra);
      CHECK(r.conclusive());
      CHECK(r.is_simple());
    }
    const auto twocopies = is_simple(direct_sum(zoo::so3(Q).algebra, zoo::so3(Q).algebra));
    CHECK(twocopies.conclusive());
    CHECK_FALSE(twocopies.is_simple());
    REQUIRE(twocopies.witness.has_value());
    CHECK(twocopies.witness->dim() == 3);
  }
  SUBCASE("abelian algebras are never simple") {
    const auto r = is_simple(zoo::abelian(2, FieldSpec::gf(3)).algebra);
    CHECK_FALSE(r.is_simple());
    CHECK(r.note == "abelian");
  }
}

TEST_CASE("unique_proper_ideal_check") {
  const FieldSpec F5 = FieldSpec::gf(5);
  SUBCASE("F d + so3 has so3 as its unique proper nontrivial ideal") {
    Matrix e11(F5, 3, 3);
    e11(0, 0) = Scalar::one(F5);
    const auto ext = extend_by_element(zoo::so3(F5).algebra, e11);
    const Subspace so3_inside = Subspace::span(F5, 4, {ev(F5, 4, 0), ev(F5, 4, 1), ev(F5, 4, 2)});
    CHECK(unique_proper_ideal_check(ext, so3_inside));
  }
  SUBCASE("aff over GF(3): span{y}") {
    const FieldSpec F3 = FieldSpec::gf(3);
    CHECK(unique_proper_ideal_check(zoo::aff(F3).algebra, Subspace::line(ev(F3, 2, 1))));
  }
  SUBCASE("direct sum has two ideals, so the certificate fails") {
    const auto sum = direct_sum(zoo::so3(F5).algebra, zoo::so3(F5).algebra);
    const Subspace first = Subspace::span(F5, 6, {ev(F5, 6, 0), ev(F5, 6, 1), ev(F5, 6, 2)});
    CHECK_FALSE(unique_proper_ideal_check(sum, first));
  }
  CHECK_THROWS_AS(unique_proper_ideal_check(zoo::aff(Q).algebra, Subspace::line(ev(Q, 2, 1))),
                  UnsupportedFieldError);
  CHECK_THROWS_AS(unique_proper_ideal_check(zoo::aff(FieldSpec::gf(3)).algebra,
                                            Subspace::full(FieldSpec::gf(3), 2)),
                  PreconditionError);
}

TEST_CASE("simplicity criterion") {
  const FieldSpec F2 = FieldSpec::gf(2);
  SUBCASE("condition on single subspaces") {
    CHECK(simplicity_criterion_condition(zoo::so3(F2).algebra, Subspace::line(ev(F2, 3, 0))));
    CHECK_FALSE(simplicity_criterion_condition(zoo::aff(F2).algebra, Subspace::line(ev(F2, 2, 1))));
    CHECK_THROWS_AS(simplicity_criterion_condition(zoo::so3(FieldSpec::gf(3)).algebra,
                                                   Subspace::full(FieldSpec::gf(3), 3)),
                    PreconditionError);
  }
  SUBCASE("full sweep agrees with line-closure simplicity") {
    for (FieldSpec f : {FieldSpec::gf(2), FieldSpec::gf(3)}) {
      CHECK(is_simple_via_criterion(zoo::so3(f).algebra));
      CHECK_FALSE(is_simple_via_criterion(zoo::aff(f).algebra));
      CHECK_FALSE(is_simple_via_criterion(zoo::heisenberg(1, f).algebra));
      CHECK_FALSE(is_simple_via_criterion(zoo::abelian(3, f).algebra));
      for (const auto& entry :
           {zoo::so3(f), zoo::aff(f), zoo::heisenberg(1, f), zoo::abelian(3, f)}) {
        CHECK(is_simple_via_criterion(entry.algebra) == is_simple(entry.algebra).is_simple());
      }
    }
    CHECK(is_simple_via_criterion(zoo::sl2(FieldSpec::gf(3)).algebra) ==
          is_simple(zoo::sl2(FieldSpec::gf(3)).algebra).is_simple());
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(is_simple_via_criterion(zoo::so3(FieldSpec::gf(3)).algebra, 5),
                    BudgetExceededError);
  }
}

TEST_CASE("direct_sum and extend_by_element") {
  SUBCASE("rank-one extension of so3") {
    Matrix e11(Q, 3, 3);
    e11(0, 0) = Scalar::one(Q);
    const auto ext = extend_by_element(zoo::so3(Q).algebra, e11);
    CHECK(ext.dim() == 4);
    CHECK(ext.bracket(ev(Q, 4, 3), ev(Q, 4, 0)) == ev(Q, 4, 0));  // [d, e1] = e1
    CHECK(exact::vec_is_zero(ext.bracket(ev(Q, 4, 3), ev(Q, 4, 1))));
    CHECK(exact::vec_is_zero(ext.bracket(ev(Q, 4, 3), ev(Q, 4, 2))));
  }
  SUBCASE("so3 + so3 has at least two proper ideals") {
    SimplicityOptions opts;
    opts.collect_ideals = true;
    const auto sum =
        direct_sum(zoo::so3(FieldSpec::gf(5)).algebra, zoo::so3(FieldSpec::gf(5)).algebra);
    const auto r = is_simple(sum, opts);
    CHECK_FALSE(r.is_simple());
    CHECK(r.proper_nontrivial_ideals_seen.size() >= 2);
  }
  SUBCASE("extending abelian a1 by zero gives abelian a2") {
    const auto a2 = extend_by_element(zoo::abelian(1, Q).algebra, Matrix(Q, 1, 1));
    CHECK(a2.dim() == 2);
    CHECK(a2.is_abelian());
  }
}

TEST_CASE("isomorphic_bruteforce") {
  const FieldSpec F3 = FieldSpec::gf(3);
  const auto aff3 = zoo::aff(F3).algebra;
  SUBCASE("an algebra is isomorphic to itself") {
    const auto phi = isomorphic_bruteforce(aff3, aff3);
    REQUIRE(phi.has_value());
  }
  SUBCASE("aff vs abelian a2: none") {
    CHECK_FALSE(isomorphic_bruteforce(zoo::aff(FieldSpec::gf(2)).algebra,
                                      zoo::abelian(2, FieldSpec::gf(2)).algebra)
                    .has_value());
  }
  SUBCASE("every 2-dim nonabelian is isomorphic to aff") {
    // [e1, e2] = e1 + e2
    AnticommAlgebra other(F3, 2, {{0, 1, exact::vec_add(ev(F3, 2, 0), ev(F3, 2, 1))}});
    const auto phi = isomorphic_bruteforce(other, aff3);
    REQUIRE(phi.has_value());
    // phi([x,y]_other) = [phi x, phi y]_aff
    const Vec lhs = phi->apply(other.bracket(ev(F3, 2, 0), ev(F3, 2, 1)));
    const Vec rhs = aff3.bracket(phi->col(0), phi->col(1));
    CHECK(lhs == rhs);
    CHECK(exact::is_invertible(*phi));
  }
  SUBCASE("agreement with line-closure simplicity on 2-dim algebras over GF(2)") {
    const FieldSpec F2 = FieldSpec::gf(2);
    const auto aff2 = zoo::aff(F2).algebra;
    // all 2-dim algebras: bracket [e1,e2] = v for the four vectors v
    for (int b0 = 0; b0 < 2; ++b0) {
      for (int b1 = 0; b1 < 2; ++b1) {
        Vec v{Scalar::from_int(F2, b0), Scalar::from_int(F2, b1)};
        AnticommAlgebra a(F2, 2, {{0, 1, v}});
        const bool nonabelian = !a.is_abelian();
        // every 2-dim algebra is non-simple; nonabelian ones are iso to aff
        CHECK_FALSE(is_simple(a).is_simple());
        CHECK(isomorphic_bruteforce(a, aff2).has_value() == nonabelian);
      }
    }
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(isomorphic_bruteforce(zoo::abelian(5, FieldSpec::gf(2)).algebra,
                                          zoo::abelian(5, FieldSpec::gf(2)).algebra),
                    BudgetExceededError);
  }
}

TEST_CASE("rank of ad on simple algebras (exhaustive small fields)") {
  // simple Lie algebras: every nonzero x has rank(ad x) >= 2
  for (std::int64_t p : {3, 5}) {
    const FieldSpec f = FieldSpec::gf(p);
    for (const auto& entry : {zoo::so3(f), zoo::sl2(f)}) {
      exact::VectorEnumerator vecs(f, 3);
      while (auto x = vecs.next()) {
        if (exact::vec_is_zero(*x)) continue;
        CHECK(entry.algebra.rank_ad(*x) >= 2);
      }
    }
  }
  // aff has a rank-one adjoint: x itself
  CHECK(zoo::aff(FieldSpec::gf(3)).algebra.rank_ad(ev(FieldSpec::gf(3), 2, 0)) == 1);
}
