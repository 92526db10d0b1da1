#include "homlie/zoo.hpp"

#include <random>

namespace homlie::zoo {

using alg::BracketEntry;
using exact::Scalar;
using exact::Vec;

namespace {

Vec e(FieldSpec f, std::size_t n, std::size_t i) { return exact::basis_vec(f, n, i); }

Matrix validated_sigma(const AnticommAlgebra& a, Matrix sigma) {
  if (!hom::is_twisting_map(a, sigma)) {
    throw std::logic_error("zoo sigma must satisfy the Hom-Jacobi identity");
  }
  return sigma;
}

}  // namespace

ZooEntry abelian(std::size_t n, FieldSpec field) {
  return {"abelian", {static_cast<long long>(n)}, AnticommAlgebra(field, n), std::nullopt,
          {"abelian", "nilpotent", "solvable", "lie"}, std::nullopt};
}

ZooEntry aff(FieldSpec field) {
  AnticommAlgebra a(field, 2, {{0, 1, e(field, 2, 1)}});
  return {"aff", {}, a, std::nullopt, {"solvable", "lie", "not-simple"},
          Subspace::line(e(field, 2, 1))};
}

ZooEntry so3(FieldSpec field) {
  std::vector<BracketEntry> br;
  br.push_back({0, 1, e(field, 3, 2)});
  br.push_back({1, 2, e(field, 3, 0)});
  br.push_back({0, 2, exact::vec_scale(-Scalar::one(field), e(field, 3, 1))});  // [e3,e1]=e2
  AnticommAlgebra a(field, 3, std::move(br));
  return {"so3", {}, a, std::nullopt, {"simple", "lie"}, std::nullopt};
}

ZooEntry sl2(FieldSpec field) {
  if (field.characteristic() == 2) {
    throw UnsupportedFieldError("sl2 is degenerate in characteristic 2");
  }
  // basis e, h, f: [e,f] = h, [h,e] = 2e, [h,f] = -2f
  std::vector<BracketEntry> br;
  br.push_back({0, 2, e(field, 3, 1)});
  br.push_back({0, 1, exact::vec_scale(Scalar::from_int(field, -2), e(field, 3, 0))});
  br.push_back({1, 2, exact::vec_scale(Scalar::from_int(field, -2), e(field, 3, 2))});
  AnticommAlgebra a(field, 3, std::move(br));
  return {"sl2", {}, a, std::nullopt, {"simple", "lie"}, std::nullopt};
}

ZooEntry heisenberg(std::size_t n, FieldSpec field) {
  if (n < 1) throw PreconditionError("heisenberg requires n >= 1");
  const std::size_t d = 2 * n + 1;
  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i < n; ++i) br.push_back({2 * i, 2 * i + 1, e(field, d, d - 1)});
  AnticommAlgebra a(field, d, std::move(br));
  Matrix sigma(field, d, d);
  for (std::size_t j = 1; j < d; ++j) sigma(j - 1, j) = Scalar::one(field);
  return {"heisenberg",
          {static_cast<long long>(n)},
          a,
          validated_sigma(a, sigma),
          {"nilpotent", "solvable", "lie", "hom-simple", "not-simple"},
          std::nullopt};
}

ZooEntry s_family(std::size_t n, FieldSpec field) {
  if (n < 3) throw PreconditionError("s_family requires n >= 3");
  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i + 2 < n; ++i) br.push_back({i, i + 1, e(field, n, i + 2)});
  br.push_back({n - 2, n - 1, e(field, n, 0)});
  // [e_n, e_1] = e_2 stored as (0, n-1) -> -e_2
  br.push_back({0, n - 1, exact::vec_scale(-Scalar::one(field), e(field, n, 1))});
  AnticommAlgebra a(field, n, std::move(br));
  return {"s_family", {static_cast<long long>(n)}, a, std::nullopt, {"simple"}, std::nullopt};
}

ZooEntry a_ext(std::size_t n, FieldSpec field) {
  if (n < 3) throw PreconditionError("a_ext requires n >= 3");
  const ZooEntry s = s_family(n, field);
  const std::size_t d = n + 1;
  // F d \ltimes S_n with ad d = the rank-one map e_1 -> e_2
  Matrix dmat(field, n, n);
  dmat(1, 0) = Scalar::one(field);
  AnticommAlgebra a = alg::extend_by_element(s.algebra, dmat);
  Matrix sigma(field, d, d);
  sigma(n, n - 1) = Scalar::one(field);  // sigma(e_n) = d
  return {"a_ext",
          {static_cast<long long>(n)},
          a,
          validated_sigma(a, sigma),
          {"hom-simple", "not-simple"},
          Subspace::span(field, d,
                         [&] {
                           std::vector<Vec> rows;
                           for (std::size_t i = 0; i < n; ++i) rows.push_back(e(field, d, i));
                           return rows;
                         }())};
}

ZooEntry r_family(std::size_t n, FieldSpec field) {
  if (n < 2) throw PreconditionError("r_family requires n >= 2");
  const std::size_t d = 2 * n;
  std::vector<BracketEntry> br;
  for (std::size_t i = 1; i < n; ++i) {
    br.push_back({2 * i - 2, 2 * i - 1, e(field, d, 2 * i)});  // [e_{2i-1}, e_{2i}] = e_{2i+1}
  }
  br.push_back({d - 2, d - 1, e(field, d, 0)});
  AnticommAlgebra a(field, d, std::move(br));
  Matrix sigma(field, d, d);
  for (std::size_t i = 1; i < n; ++i) {
    sigma(2 * i + 1, 2 * i - 2) = Scalar::one(field);  // sigma(e_{2i-1}) = e_{2i+2}
  }
  sigma(1, d - 2) = Scalar::one(field);  // sigma(e_{2n-1}) = e_2
  if (!(sigma * sigma).is_zero()) throw std::logic_error("r_family sigma must square to zero");
  return {"r_family",
          {static_cast<long long>(n)},
          a,
          validated_sigma(a, sigma),
          {"solvable", "hom-simple", "not-simple"},
          std::nullopt};
}

ZooEntry aff_plus_abelian(std::size_t n, FieldSpec field) {
  if (n < 1) throw PreconditionError("aff_plus_abelian requires n >= 1");
  const std::size_t d = n + 2;  // x, y, e_1..e_n
  AnticommAlgebra a(field, d, {{0, 1, e(field, d, 1)}});
  Matrix sigma(field, d, d);
  sigma(0, 1) = Scalar::one(field);  // sigma(y) = x
  sigma(2, 0) = Scalar::one(field);  // sigma(x) = e_1
  for (std::size_t i = 1; i < n; ++i) sigma(2 + i, 1 + i) = Scalar::one(field);
  sigma(1, d - 1) = Scalar::one(field);  // sigma(e_n) = y
  return {"aff_plus_abelian",
          {static_cast<long long>(n)},
          a,
          validated_sigma(a, sigma),
          {"solvable", "hom-simple", "not-simple"},
          std::nullopt};
}

ZooEntry regular_construction(const AnticommAlgebra& s, std::size_t n,
                              const std::vector<Matrix>& autos) {
  if (n < 1) throw PreconditionError("regular_construction requires n >= 1");
  if (autos.size() != n) throw PreconditionError("need one automorphism per component");
  if (!s.is_lie()) throw PreconditionError("component algebra must be Lie");
  if (!alg::is_simple(s).is_simple()) throw PreconditionError("component algebra must be simple");
  const std::size_t m = s.dim();
  const FieldSpec f = s.field();
  for (const Matrix& phi : autos) {
    if (phi.rows() != m || phi.cols() != m || phi.field() != f) {
      throw DimensionError("automorphism shape mismatch");
    }
    if (!exact::is_invertible(phi) || !hom::is_multiplicative(s, phi)) {
      throw PreconditionError("entries of autos must be automorphisms of the component");
    }
  }
  const std::size_t d = n * m;
  // sigma maps component i onto component i+1 (mod n) through autos[i]
  Matrix sigma(f, d, d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t target = (i + 1) % n;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) sigma(target * m + r, i * m + c) = autos[i](r, c);
  }
  // bracket = sigma o (componentwise bracket)
  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [key, v] : s.entries()) {
      Vec big = exact::zero_vec(f, d);
      for (std::size_t k = 0; k < m; ++k) big[i * m + k] = v[k];
      br.push_back({i * m + key.first, i * m + key.second, sigma.apply(big)});
    }
  }
  AnticommAlgebra a(f, d, std::move(br));
  ZooEntry entry{"regular_construction",
                 {static_cast<long long>(n)},
                 a,
                 validated_sigma(a, sigma),
                 {"hom-simple", "regular", "multiplicative"},
                 std::nullopt};
  if (!hom::is_regular(a, *entry.sigma)) {
    throw std::logic_error("regular_construction must produce a regular structure");
  }
  return entry;
}

ZooEntry abelian2_with_irreducible_sigma(std::int64_t q) {
  const FieldSpec f = FieldSpec::gf(q);
  AnticommAlgebra a(f, 2);
  // scan for an irreducible x^2 - a1 x - a0 (no root in GF(q))
  for (std::int64_t a1 = 0; a1 < q; ++a1) {
    for (std::int64_t a0 = 0; a0 < q; ++a0) {
      bool has_root = false;
      for (std::int64_t lam = 0; lam < q && !has_root; ++lam) {
        has_root = ((lam * lam - a1 * lam - a0) % q + q) % q == 0;
      }
      if (has_root) continue;
      Matrix sigma(f, 2, 2);
      sigma(0, 1) = Scalar::from_residue(f, a0);
      sigma(1, 0) = Scalar::one(f);
      sigma(1, 1) = Scalar::from_residue(f, a1);
      return {"abelian2_irreducible_sigma", {q},         a, validated_sigma(a, sigma),
              {"abelian", "trivial-hom-ideals-only"},    std::nullopt};
    }
  }
  throw std::logic_error("every finite field admits an irreducible monic quadratic");
}

ZooEntry example_a1(FieldSpec field) {
  std::vector<BracketEntry> br;
  br.push_back({0, 1, e(field, 4, 2)});
  br.push_back({0, 2, e(field, 4, 3)});
  br.push_back({0, 3, e(field, 4, 0)});
  br.push_back({1, 3, e(field, 4, 1)});
  AnticommAlgebra a(field, 4, std::move(br));
  return {"A1", {}, a, std::nullopt, {"simple", "singular-hs"}, std::nullopt};
}

ZooEntry example_a2(FieldSpec field) {
  ZooEntry base = example_a1(field);
  std::vector<BracketEntry> br;
  for (const auto& [key, v] : base.algebra.entries()) br.push_back({key.first, key.second, v});
  br.push_back({1, 2, e(field, 4, 0)});
  AnticommAlgebra a(field, 4, std::move(br));
  return {"A2", {}, a, std::nullopt, {"simple", "hs-zero"}, std::nullopt};
}

std::vector<std::string> catalog_names() {
  return {"abelian", "aff",      "so3",      "sl2",
          "heisenberg", "s_family", "a_ext",  "r_family",
          "aff_plus_abelian", "so3_power", "abelian2_irreducible_sigma",
          "A1", "A2"};
}

ZooEntry by_name(const std::string& name, const std::vector<long long>& params, FieldSpec field) {
  auto p1 = [&](long long fallback) { return params.empty() ? fallback : params[0]; };
  if (name == "abelian") return abelian(static_cast<std::size_t>(p1(1)), field);
  if (name == "aff") return aff(field);
  if (name == "so3") return so3(field);
  if (name == "sl2") return sl2(field);
  if (name == "heisenberg") return heisenberg(static_cast<std::size_t>(p1(1)), field);
  if (name == "s_family") return s_family(static_cast<std::size_t>(p1(3)), field);
  if (name == "a_ext") return a_ext(static_cast<std::size_t>(p1(3)), field);
  if (name == "r_family") return r_family(static_cast<std::size_t>(p1(2)), field);
  if (name == "aff_plus_abelian") return aff_plus_abelian(static_cast<std::size_t>(p1(1)), field);
  if (name == "so3_power") {
    const std::size_t n = static_cast<std::size_t>(p1(1));
    const std::uint64_t seed = params.size() > 1 ? static_cast<std::uint64_t>(params[1]) : 0;
    return regular_construction(so3(field).algebra, n, so3_automorphisms(field, n, seed));
  }
  if (name == "abelian2_irreducible_sigma") {
    if (!field.is_prime_field()) {
      throw UnsupportedFieldError("abelian2_irreducible_sigma needs GF(q)");
    }
    return abelian2_with_irreducible_sigma(field.prime());
  }
  if (name == "A1") return example_a1(field);
  if (name == "A2") return example_a2(field);
  throw PreconditionError("unknown zoo entry: " + name);
}

std::vector<Matrix> so3_automorphisms(FieldSpec field, std::size_t count, std::uint64_t seed) {
  const AnticommAlgebra a = so3(field).algebra;
  // generators: the basis 3-cycle, a sign flip and a signed swap
  const Matrix cyc = Matrix::from_ints(field, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  const Matrix flip = Matrix::from_ints(field, {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
  const Matrix swap = Matrix::from_ints(field, {{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  const std::vector<Matrix> gens{cyc, flip, swap};
  std::mt19937_64 rng(seed);
  std::vector<Matrix> out;
  while (out.size() < count) {
    Matrix w = Matrix::identity(field, 3);
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < len; ++k) w = w * gens[rng() % gens.size()];
    if (!hom::is_multiplicative(a, w) || !exact::is_invertible(w)) {
      throw std::logic_error("so3 automorphism words must stay automorphisms");
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace homlie::zoo
