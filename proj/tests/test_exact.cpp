#include "doctest.h"

#include <random>
#include <set>

#include "homlie/enumerate.hpp"
#include "homlie/linalg.hpp"
#include "homlie/poly.hpp"
#include "homlie/subspace.hpp"

using namespace homlie;
using namespace homlie::exact;

namespace {

Scalar q(long long num, long long den = 1) {
  return Scalar::from_rational(BigRat(BigInt(num), BigInt(den)));
}

Matrix random_matrix(FieldSpec f, std::size_t n, std::mt19937_64& rng, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::from_int(f, d(rng));
  return m;
}

Matrix random_invertible(FieldSpec f, std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

TEST_CASE("field: prime validation and characteristics") {
  CHECK_NOTHROW(FieldSpec::gf(2));
  CHECK_NOTHROW(FieldSpec::gf(11));
  CHECK_THROWS_AS(FieldSpec::gf(1), UnsupportedFieldError);
  CHECK_THROWS_AS(FieldSpec::gf(4), UnsupportedFieldError);
  CHECK_THROWS_AS(FieldSpec::gf(91), UnsupportedFieldError);  // 7 * 13
  CHECK(FieldSpec::rationals().characteristic() == 0);
  CHECK(FieldSpec::gf(5).characteristic() == 5);
}

TEST_CASE("scalar: canonical rational arithmetic") {
  const FieldSpec Q = FieldSpec::rationals();
  const Scalar half = q(1, 2);
  const Scalar third = q(1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK((q(2, 4)).str() == "1/2");  // reduced on construction
  CHECK((q(-6, 4)).str() == "-3/2");
  CHECK(half.inverse().str() == "2");
  CHECK_THROWS(Scalar::zero(Q).inverse());
}

TEST_CASE("scalar: GF(p) arithmetic and canonical residues") {
  const FieldSpec F5 = FieldSpec::gf(5);
  const Scalar a = Scalar::from_int(F5, 3);
  const Scalar b = Scalar::from_int(F5, 4);
  CHECK((a + b).residue() == 2);
  CHECK((a * b).residue() == 2);
  CHECK((a - b).residue() == 4);
  CHECK(a.inverse().residue() == 2);  // 3*2 = 6 = 1 mod 5
  CHECK(Scalar::from_int(F5, -1).residue() == 4);
  CHECK_THROWS_AS(a + Scalar::from_int(FieldSpec::gf(3), 1), FieldMismatchError);
  CHECK_THROWS_AS(a + q(1), FieldMismatchError);
}

TEST_CASE("scalar: text format round-trips bit-exactly") {
  const FieldSpec Q = FieldSpec::rationals();
  for (const char* text : {"0", "7", "-7", "3/2", "-11/13", "100000000000000000000/7"}) {
    CHECK(Scalar::parse(Q, text).str() == text);
  }
  CHECK(Scalar::parse(Q, "+5").str() == "5");
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "a"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, ""), ParseError);

  const FieldSpec F7 = FieldSpec::gf(7);
  for (const char* text : {"0", "3", "6"}) CHECK(Scalar::parse(F7, text).str() == text);
  CHECK_THROWS_AS(Scalar::parse(F7, "7"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(F7, "-1"), ParseError);
}

TEST_CASE("rref: pinned examples") {
  const FieldSpec Q = FieldSpec::rationals();
  SUBCASE("proportional rows collapse") {
    const auto rr = rref(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
    CHECK(rr.rank == 1);
    CHECK(rr.mat(0, 0) == q(1));
    CHECK(rr.mat(0, 1) == q(2));
  }
  SUBCASE("identity over GF(5) is fixed") {
    const Matrix id = Matrix::identity(FieldSpec::gf(5), 3);
    const auto rr = rref(id);
    CHECK(rr.rank == 3);
    CHECK(rr.mat == id);
  }
  SUBCASE("swap matrix over GF(2) reduces to the identity") {
    // by hand: swap rows, both pivots found
    const FieldSpec F2 = FieldSpec::gf(2);
    const auto rr = rref(Matrix::from_ints(F2, {{0, 1}, {1, 0}}));
    CHECK(rr.rank == 2);
    CHECK(rr.mat == Matrix::identity(F2, 2));
  }
}

TEST_CASE("rref: idempotence and rank-nullity on random matrices") {
  std::mt19937_64 rng(20240811);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(5)}) {
    for (int t = 0; t < 25; ++t) {
      const Matrix m = random_matrix(f, 4, rng);
      const auto rr = rref(m);
      CHECK(rref(rr.mat).mat == rr.mat);
      CHECK(kernel(m).dim() + rr.rank == m.cols());
    }
  }
}

TEST_CASE("kernel: pinned examples") {
  const FieldSpec Q = FieldSpec::rationals();
  CHECK(kernel(Matrix(Q, 2, 2)).is_full());
  CHECK(kernel(Matrix::identity(Q, 3)).is_zero());

  // oracle: enumerate all four vectors of GF(2)^2 and keep the annihilated ones
  const FieldSpec F2 = FieldSpec::gf(2);
  const Matrix ones = Matrix::from_ints(F2, {{1, 1}, {1, 1}});
  std::vector<Vec> annihilated;
  VectorEnumerator all(F2, 2);
  while (auto v = all.next()) {
    if (vec_is_zero(ones.apply(*v)) && !vec_is_zero(*v)) annihilated.push_back(*v);
  }
  REQUIRE(annihilated.size() == 1);
  const Subspace k = kernel(ones);
  CHECK(k.dim() == 1);
  CHECK(k == Subspace::line(annihilated.front()));
}

TEST_CASE("solve: pinned examples") {
  const FieldSpec Q = FieldSpec::rationals();
  const Vec b = {q(3), q(-1)};
  SUBCASE("identity returns rhs") {
    const auto x = solve(Matrix::identity(Q, 2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
  }
  SUBCASE("zero map with nonzero rhs is inconsistent") {
    CHECK_FALSE(solve(Matrix(Q, 2, 2), b).has_value());
  }
  SUBCASE("scalar division") {
    const auto x = solve(Matrix::from_ints(Q, {{2}}), Vec{q(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == q(3, 2));
  }
  SUBCASE("solutions satisfy the system") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
      const Matrix m = random_matrix(FieldSpec::gf(3), 3, rng);
      const Vec rhs = m.apply(random_matrix(FieldSpec::gf(3), 3, rng).col(0));
      const auto x = solve(m, rhs);
      REQUIRE(x.has_value());
      CHECK(m.apply(*x) == rhs);
    }
  }
  CHECK_THROWS_AS(solve(Matrix(Q, 2, 3), Vec{q(1)}), DimensionError);
}

TEST_CASE("subspace: lattice operations") {
  const FieldSpec Q = FieldSpec::rationals();
  const Subspace e1 = Subspace::line(basis_vec(Q, 3, 0));
  const Subspace e2 = Subspace::line(basis_vec(Q, 3, 1));
  const Subspace e12 = Subspace::span(Q, 3, {basis_vec(Q, 3, 0), basis_vec(Q, 3, 1)});
  const Subspace e23 = Subspace::span(Q, 3, {basis_vec(Q, 3, 1), basis_vec(Q, 3, 2)});

  CHECK(e1.sum(e2) == e12);
  CHECK(e12.intersect(e23) == e2);
  CHECK(Subspace::line(Vec{q(1), q(1)}).contains(Vec{q(2), q(2)}));

  SUBCASE("dimension formula on random pairs") {
    std::mt19937_64 rng(99);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::gf(3)}) {
      for (int t = 0; t < 20; ++t) {
        std::vector<Vec> ra, rb;
        for (int k = 0; k < 2; ++k) ra.push_back(random_matrix(f, 4, rng).col(0));
        for (int k = 0; k < 3; ++k) rb.push_back(random_matrix(f, 4, rng).col(0));
        const Subspace a = Subspace::span(f, 4, ra);
        const Subspace b = Subspace::span(f, 4, rb);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
        CHECK(a.sum(b).contains(a));
        CHECK(a.contains(a.intersect(b)));
      }
    }
  }
  SUBCASE("mutual containment is representation equality") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
      std::vector<Vec> rows;
      for (int k = 0; k < 2; ++k) rows.push_back(random_matrix(FieldSpec::gf(3), 4, rng).col(0));
      const Subspace a = Subspace::span(FieldSpec::gf(3), 4, rows);
      // rebuild from scaled + summed spanning vectors
      std::vector<Vec> rows2;
      for (const Vec& r : rows) rows2.push_back(vec_scale(Scalar::from_int(FieldSpec::gf(3), 2), r));
      if (rows.size() == 2) rows2.push_back(vec_add(rows[0], rows[1]));
      const Subspace b = Subspace::span(FieldSpec::gf(3), 4, rows2);
      CHECK(a.contains(b));
      CHECK(b.contains(a));
      CHECK(a == b);
    }
  }
  CHECK_THROWS_AS(e1.sum(Subspace::line(Vec{q(1), q(0)})), DimensionError);
}

TEST_CASE("charpoly: pinned examples") {
  const FieldSpec Q = FieldSpec::rationals();
  SUBCASE("companion matrix") {
    // x^2 - a1 x - a0 for the companion of the quadratic
    for (auto [a0, a1] : {std::pair{2LL, 3LL}, std::pair{-1LL, 0LL}, std::pair{5LL, -7LL}}) {
      const Matrix m = Matrix::from_ints(Q, {{0, a0}, {1, a1}});
      CHECK(charpoly(m) == Polynomial::from_ints(Q, {-a0, -a1, 1}));
    }
  }
  SUBCASE("identity gives (x-1)^n") {
    const Polynomial x_minus_1 = Polynomial::from_ints(Q, {-1, 1});
    Polynomial expect = Polynomial::from_ints(Q, {1});
    for (std::size_t n = 1; n <= 4; ++n) {
      expect = expect * x_minus_1;
      CHECK(charpoly(Matrix::identity(Q, n)) == expect);
    }
  }
  SUBCASE("diag(1,2)") {
    CHECK(charpoly(Matrix::from_ints(Q, {{1, 0}, {0, 2}})) ==
          Polynomial::from_ints(Q, {2, -3, 1}));
  }
  SUBCASE("conjugation invariance") {
    std::mt19937_64 rng(31337);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::gf(5)}) {
      for (int t = 0; t < 10; ++t) {
        const Matrix m = random_matrix(f, 3, rng);
        const Matrix p = random_invertible(f, 3, rng);
        const Matrix conj = p * m * inverse(p).value();
        CHECK(charpoly(conj) == charpoly(m));
      }
    }
  }
  CHECK_THROWS_AS(charpoly(Matrix(Q, 2, 3)), DimensionError);
}

TEST_CASE("rational canonical form and similarity") {
  const FieldSpec Q = FieldSpec::rationals();
  SUBCASE("rcf(diag(1,1)) is two copies of x-1") {
    const auto inv = invariant_factors(Matrix::identity(Q, 2));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == Polynomial::from_ints(Q, {-1, 1}));
    CHECK(inv[1] == Polynomial::from_ints(Q, {-1, 1}));
  }
  SUBCASE("identity vs nilpotent Jordan block") {
    const Matrix nil = Matrix::from_ints(Q, {{0, 1}, {0, 0}});
    CHECK_FALSE(is_similar(Matrix::identity(Q, 2), nil));
  }
  SUBCASE("conjugates are similar; divisibility chain holds") {
    std::mt19937_64 rng(424242);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::gf(3)}) {
      for (int t = 0; t < 10; ++t) {
        const Matrix m = random_matrix(f, 4, rng);
        const Matrix p = random_invertible(f, 4, rng);
        CHECK(is_similar(m, p * m * inverse(p).value()));
        const auto inv = invariant_factors(m);
        Polynomial prod = Polynomial::from_ints(f, {1});
        for (std::size_t k = 0; k + 1 < inv.size(); ++k) {
          CHECK(inv[k + 1].divmod(inv[k]).second.is_zero());
        }
        for (const auto& d : inv) prod = prod * d;
        CHECK(prod == charpoly(m));
      }
    }
  }
  SUBCASE("is_similar is an equivalence relation on a sample") {
    std::mt19937_64 rng(11);
    std::vector<Matrix> sample;
    for (int t = 0; t < 6; ++t) sample.push_back(random_matrix(FieldSpec::gf(2), 3, rng));
    for (const auto& a : sample) CHECK(is_similar(a, a));
    for (const auto& a : sample) {
      for (const auto& b : sample) {
        CHECK(is_similar(a, b) == is_similar(b, a));
        for (const auto& c : sample) {
          if (is_similar(a, b) && is_similar(b, c)) CHECK(is_similar(a, c));
        }
      }
    }
  }
  CHECK_THROWS_AS(is_similar(Matrix::identity(Q, 2), Matrix::identity(Q, 3)), DimensionError);
}

TEST_CASE("enumeration: vectors and canonical lines") {
  CHECK_THROWS_AS(VectorEnumerator(FieldSpec::rationals(), 2), UnsupportedFieldError);
  CHECK_THROWS_AS(LineEnumerator(FieldSpec::rationals(), 2), UnsupportedFieldError);

  SUBCASE("vector counts") {
    VectorEnumerator ve(FieldSpec::gf(3), 2);
    int count = 0;
    while (ve.next()) ++count;
    CHECK(count == 9);
  }
  SUBCASE("line counts: GF(2)^3 -> 7, GF(3)^2 -> 4, GF(5)^1 -> 1") {
    auto count_lines = [](FieldSpec f, std::size_t n) {
      LineEnumerator le(f, n);
      std::size_t c = 0;
      while (le.next()) ++c;
      return c;
    };
    CHECK(count_lines(FieldSpec::gf(2), 3) == 7);
    CHECK(count_lines(FieldSpec::gf(3), 2) == 4);
    CHECK(count_lines(FieldSpec::gf(5), 1) == 1);
    CHECK(line_count(FieldSpec::gf(2), 3) == 7);
    CHECK(line_count(FieldSpec::gf(3), 2) == 4);
  }
  SUBCASE("lines are pairwise distinct one-dimensional subspaces") {
    LineEnumerator le(FieldSpec::gf(3), 3);
    std::vector<Subspace> seen;
    while (auto s = le.next()) {
      CHECK(s->dim() == 1);
      for (const auto& prev : seen) CHECK_FALSE(prev == *s);
      seen.push_back(std::move(*s));
    }
    CHECK(seen.size() == 13);
  }
}
