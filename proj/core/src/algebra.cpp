#include "homlie/algebra.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "homlie/fp.hpp"
#include "homlie/meataxe.hpp"

namespace homlie::alg {

AnticommAlgebra::AnticommAlgebra(FieldSpec field, std::size_t dim,
                                 std::vector<BracketEntry> brackets)
    : field_(field), dim_(dim) {
  for (auto& e : brackets) {
    if (e.i >= e.j) {
      throw PreconditionError("bracket entries require i < j, got i=" + std::to_string(e.i) +
                              ", j=" + std::to_string(e.j));
    }
    if (e.j >= dim_) throw DimensionError("bracket index out of range");
    if (e.v.size() != dim_) throw DimensionError("bracket vector length != dim");
    for (const Scalar& c : e.v) {
      if (c.field() != field_) throw FieldMismatchError("bracket coefficients off-field");
    }
    if (!exact::vec_is_zero(e.v)) constants_[{e.i, e.j}] = std::move(e.v);
  }
}

Vec AnticommAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return exact::zero_vec(field_, dim_);
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = constants_.find({i, j});
  if (it == constants_.end()) return exact::zero_vec(field_, dim_);
  return flip ? exact::vec_scale(-Scalar::one(field_), it->second) : it->second;
}

Vec AnticommAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("bracket operand length != dim");
  Vec out = exact::zero_vec(field_, dim_);
  for (const auto& [key, v] : constants_) {
    const auto [i, j] = key;
    // coefficient of [e_i,e_j] in [x,y] is x_i y_j - x_j y_i
    const Scalar c = x[i] * y[j] - x[j] * y[i];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) out[k] += c * v[k];
  }
  return out;
}

Matrix AnticommAlgebra::ad(const Vec& x) const {
  if (x.size() != dim_) throw DimensionError("ad operand length != dim");
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    m.set_col(j, bracket(x, exact::basis_vec(field_, dim_, j)));
  }
  return m;
}

std::size_t AnticommAlgebra::rank_ad(const Vec& x) const { return exact::rank(ad(x)); }

bool AnticommAlgebra::is_abelian() const { return constants_.empty(); }

bool AnticommAlgebra::is_lie() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vec ei = exact::basis_vec(field_, dim_, i);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Vec ej = exact::basis_vec(field_, dim_, j);
      for (std::size_t k = j + 1; k < dim_; ++k) {
        const Vec ek = exact::basis_vec(field_, dim_, k);
        Vec jac = bracket(ei, bracket_basis(j, k));
        jac = exact::vec_add(jac, bracket(ej, bracket_basis(k, i)));
        jac = exact::vec_add(jac, bracket(ek, bracket_basis(i, j)));
        if (!exact::vec_is_zero(jac)) return false;
      }
    }
  }
  return true;
}

Subspace AnticommAlgebra::center() const {
  // x central iff ad(e_i) x = 0 for all i
  Matrix stacked(field_, dim_ * dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Matrix adi = ad(exact::basis_vec(field_, dim_, i));
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) stacked(i * dim_ + r, c) = adi(r, c);
  }
  return kernel(stacked);
}

Subspace bracket_span(const AnticommAlgebra& a, const Subspace& s, const Subspace& t) {
  std::vector<Vec> prods;
  for (const Vec& x : s.basis_rows()) {
    for (const Vec& y : t.basis_rows()) {
      prods.push_back(a.bracket(x, y));
    }
  }
  return Subspace::span(a.field(), a.dim(), prods);
}

std::vector<Subspace> AnticommAlgebra::derived_series() const {
  std::vector<Subspace> series{Subspace::full(field_, dim_)};
  while (true) {
    const Subspace next = bracket_span(*this, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

std::vector<Subspace> AnticommAlgebra::lower_central_series() const {
  const Subspace whole = Subspace::full(field_, dim_);
  std::vector<Subspace> series{whole};
  while (true) {
    const Subspace next = bracket_span(*this, series.back(), whole);
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

bool AnticommAlgebra::is_solvable() const { return derived_series().back().is_zero(); }

bool AnticommAlgebra::is_nilpotent() const { return lower_central_series().back().is_zero(); }

std::vector<Matrix> ad_generators(const AnticommAlgebra& a) {
  std::vector<Matrix> gens;
  gens.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    gens.push_back(a.ad(exact::basis_vec(a.field(), a.dim(), i)));
  }
  return gens;
}

Subspace ideal_closure(const AnticommAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionError("ideal_closure: ambient != dim");
  const std::vector<Matrix> gens = ad_generators(a);
  const exact::EchelonBasis eb = exact::spin(a.field(), a.dim(), s.basis_rows(), gens);
  return Subspace::span(a.field(), a.dim(), eb.rows());
}

bool is_ideal(const AnticommAlgebra& a, const Subspace& s) { return ideal_closure(a, s) == s; }

namespace {

std::vector<fp::Mat> fp_ad_generators(const AnticommAlgebra& a) {
  std::vector<fp::Mat> gens;
  for (const Matrix& g : ad_generators(a)) gens.push_back(fp::from_matrix(g));
  return gens;
}

IdealReport simple_exhaustive_gf(const AnticommAlgebra& a, std::span<const fp::Mat> gens,
                                 const SimplicityOptions& opts) {
  const std::size_t n = a.dim();
  const std::int64_t p = a.field().prime();
  IdealReport report;
  fp::LineIter lines(n, p);
  std::vector<std::int64_t> rep;
  while (lines.next(rep)) {
    const fp::Basis closure = fp::spin({rep}, gens, n, p);
    if (closure.full()) continue;
    const Subspace w = closure.to_subspace(a.field());
    report.verdict = Verdict::NotSimple;
    if (!report.witness) report.witness = w;
    if (std::find(report.proper_nontrivial_ideals_seen.begin(),
                  report.proper_nontrivial_ideals_seen.end(),
                  w) == report.proper_nontrivial_ideals_seen.end()) {
      report.proper_nontrivial_ideals_seen.push_back(w);
    }
    if (!opts.collect_ideals) return report;
  }
  if (report.verdict != Verdict::NotSimple) report.verdict = Verdict::Simple;
  return report;
}

}  // namespace

IdealReport is_simple(const AnticommAlgebra& a, const SimplicityOptions& opts) {
  IdealReport report;
  if (a.is_abelian()) {
    report.verdict = Verdict::NotSimple;
    report.note = "abelian";
    if (a.dim() >= 2) {
      report.witness = Subspace::line(exact::basis_vec(a.field(), a.dim(), 0));
      report.proper_nontrivial_ideals_seen.push_back(*report.witness);
    }
    return report;
  }
  if (a.field().is_prime_field()) {
    const auto gens = fp_ad_generators(a);
    return simple_exhaustive_gf(a, gens, opts);
  }
  // Over Q: close basis lines and a few random lines first, then run the
  // irreducibility test for completeness.
  const FieldSpec f = a.field();
  const std::size_t n = a.dim();
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(exact::basis_vec(f, n, i));
  for (int t = 0; t < opts.random_lines; ++t) {
    Vec v = exact::zero_vec(f, n);
    bool nonzero = false;
    for (auto& c : v) {
      const int k = coeff(rng);
      nonzero |= k != 0;
      c = Scalar::from_int(f, k);
    }
    if (nonzero) probes.push_back(std::move(v));
  }
  for (const Vec& v : probes) {
    const Subspace cl = ideal_closure(a, Subspace::line(v));
    if (!cl.is_full()) {
      report.verdict = Verdict::NotSimple;
      report.witness = cl;
      report.proper_nontrivial_ideals_seen.push_back(cl);
      return report;
    }
  }
  return norton_irreducible(f, n, ad_generators(a), opts);
}

bool unique_proper_ideal_check(const AnticommAlgebra& a, const Subspace& candidate) {
  if (!a.field().is_prime_field()) {
    throw UnsupportedFieldError("unique_proper_ideal_check needs exhaustive GF(p) enumeration");
  }
  if (candidate.ambient_dim() != a.dim()) throw DimensionError("candidate ambient != dim");
  if (candidate.is_zero() || candidate.is_full()) {
    throw PreconditionError("candidate must be proper and nontrivial");
  }
  if (!is_ideal(a, candidate)) return false;

  const std::size_t n = a.dim();
  const std::int64_t p = a.field().prime();
  const auto gens = fp_ad_generators(a);
  fp::Basis cand(n, p);
  for (const Vec& row : candidate.basis_rows()) {
    std::vector<std::int64_t> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = row[k].residue();
    cand.insert(std::move(v));
  }

  bool some_line_closes_to_candidate = false;
  fp::LineIter lines(n, p);
  std::vector<std::int64_t> rep;
  while (lines.next(rep)) {
    const bool inside = cand.contains(rep);
    const fp::Basis closure = fp::spin({rep}, gens, n, p);
    if (closure.full()) {
      if (inside) return false;  // a line of the candidate escapes it
      continue;
    }
    if (!inside) return false;  // proper ideal not inside the candidate
    if (closure.to_subspace(a.field()) == candidate) {
      some_line_closes_to_candidate = true;
    } else {
      return false;  // a smaller ideal lives inside the candidate
    }
  }
  return some_line_closes_to_candidate;
}

bool simplicity_criterion_condition(const AnticommAlgebra& a, const Subspace& s) {
  if (!a.is_lie()) throw PreconditionError("simplicity criterion applies to Lie algebras");
  if (s.ambient_dim() != a.dim()) throw DimensionError("subspace ambient != dim");
  if (s.is_zero() || s.is_full()) throw PreconditionError("S must be a nontrivial subspace");
  const Subspace whole = Subspace::full(a.field(), a.dim());
  const Subspace t = bracket_span(a, s, whole);
  if (t.is_full()) return true;
  const Subspace u = bracket_span(a, t, whole);
  return u.contains(t) && u != t;  // strict containment
}

bool is_simple_via_criterion(const AnticommAlgebra& a, std::uint64_t budget) {
  if (!a.field().is_prime_field()) {
    throw UnsupportedFieldError("criterion sweep needs exhaustive GF(p) enumeration");
  }
  if (!a.is_lie()) throw PreconditionError("simplicity criterion applies to Lie algebras");
  const std::size_t n = a.dim();
  const std::int64_t p = a.field().prime();
  std::uint64_t total = 0;
  for (std::size_t k = 1; k < n; ++k) total += fp::subspace_count(n, k, p);
  if (total > budget) {
    throw BudgetExceededError("subspace enumeration needs " + std::to_string(total) +
                              " subspaces, budget is " + std::to_string(budget));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const bool completed = fp::for_each_subspace_basis(
        n, k, p, [&](const std::vector<std::vector<std::int64_t>>& basis) {
          std::vector<Vec> rows;
          rows.reserve(basis.size());
          for (const auto& r : basis) {
            Vec v;
            v.reserve(n);
            for (std::int64_t x : r) v.push_back(Scalar::from_residue(a.field(), x));
            rows.push_back(std::move(v));
          }
          return simplicity_criterion_condition(a, Subspace::span(a.field(), n, rows));
        });
    if (!completed) return false;
  }
  return true;
}

AnticommAlgebra direct_sum(const AnticommAlgebra& a, const AnticommAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatchError("direct_sum: fields differ");
  const std::size_t n = a.dim() + b.dim();
  std::vector<BracketEntry> entries;
  for (const auto& [key, v] : a.entries()) {
    Vec w = v;
    w.resize(n, Scalar::zero(a.field()));
    entries.push_back({key.first, key.second, std::move(w)});
  }
  for (const auto& [key, v] : b.entries()) {
    Vec w = exact::zero_vec(a.field(), n);
    for (std::size_t k = 0; k < b.dim(); ++k) w[a.dim() + k] = v[k];
    entries.push_back({a.dim() + key.first, a.dim() + key.second, std::move(w)});
  }
  return AnticommAlgebra(a.field(), n, std::move(entries));
}

AnticommAlgebra extend_by_element(const AnticommAlgebra& a, const Matrix& d) {
  if (d.rows() != a.dim() || d.cols() != a.dim()) throw DimensionError("extend: D must be dim x dim");
  if (d.field() != a.field()) throw FieldMismatchError("extend: field mismatch");
  const std::size_t n = a.dim() + 1;
  std::vector<BracketEntry> entries;
  for (const auto& [key, v] : a.entries()) {
    Vec w = v;
    w.resize(n, Scalar::zero(a.field()));
    entries.push_back({key.first, key.second, std::move(w)});
  }
  // d sits at the last index; [e_i, d] = -(D e_i)
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec col = d.col(i);
    Vec w = exact::zero_vec(a.field(), n);
    bool nonzero = false;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      w[k] = -col[k];
      nonzero |= !col[k].is_zero();
    }
    if (nonzero) entries.push_back({i, a.dim(), std::move(w)});
  }
  return AnticommAlgebra(a.field(), n, std::move(entries));
}

namespace {

bool is_algebra_hom(const AnticommAlgebra& a, const AnticommAlgebra& b, const Matrix& phi) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Vec lhs = phi.apply(a.bracket_basis(i, j));
      const Vec rhs = b.bracket(phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Matrix> isomorphic_bruteforce(const AnticommAlgebra& a, const AnticommAlgebra& b) {
  if (a.field() != b.field()) throw FieldMismatchError("isomorphic_bruteforce: fields differ");
  if (!a.field().is_prime_field()) {
    throw UnsupportedFieldError("isomorphic_bruteforce enumerates GL(n, p)");
  }
  if (a.dim() != b.dim()) return std::nullopt;
  const std::size_t n = a.dim();
  const std::int64_t p = a.field().prime();
  if (n > 4 || p > 3) {
    throw BudgetExceededError("isomorphic_bruteforce budget is dim <= 4 and p <= 3");
  }
  if (n == 0) return Matrix(a.field(), 0, 0);

  // build phi column by column, keeping the chosen columns independent
  Matrix phi(a.field(), n, n);
  std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(n, 0));
  std::optional<Matrix> found;
  std::function<bool(std::size_t)> rec = [&](std::size_t c) -> bool {
    if (c == n) {
      if (is_algebra_hom(a, b, phi)) {
        found = phi;
        return true;
      }
      return false;
    }
    std::vector<std::int64_t> v(n, 0);
    while (true) {
      // odometer over GF(p)^n, zero vector skipped by the rank check
      std::size_t i = n;
      bool advanced = false;
      while (i-- > 0) {
        if (++v[i] < p) {
          advanced = true;
          break;
        }
        v[i] = 0;
      }
      if (!advanced) return false;
      fp::Basis basis(n, p);
      for (std::size_t k = 0; k < c; ++k) basis.insert(cols[k]);
      if (!basis.insert(v)) continue;  // dependent column
      cols[c] = v;
      for (std::size_t r = 0; r < n; ++r) phi(r, c) = Scalar::from_residue(a.field(), v[r]);
      if (rec(c + 1)) return true;
    }
  };
  rec(0);
  return found;
}

}  // namespace homlie::alg
