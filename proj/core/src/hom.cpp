#include "homlie/hom.hpp"

#include <array>
#include <random>

#include "homlie/fp.hpp"
#include "homlie/meataxe.hpp"

namespace homlie::hom {

Vec hom_jacobian(const AnticommAlgebra& a, const Matrix& sigma, const Vec& x, const Vec& y,
                 const Vec& z) {
  if (sigma.rows() != a.dim() || sigma.cols() != a.dim()) {
    throw DimensionError("sigma must be dim x dim");
  }
  Vec out = a.bracket(sigma.apply(x), a.bracket(y, z));
  out = exact::vec_add(out, a.bracket(sigma.apply(y), a.bracket(z, x)));
  out = exact::vec_add(out, a.bracket(sigma.apply(z), a.bracket(x, y)));
  return out;
}

bool is_twisting_map(const AnticommAlgebra& a, const Matrix& sigma) {
  if (sigma.rows() != a.dim() || sigma.cols() != a.dim()) {
    throw DimensionError("sigma must be dim x dim");
  }
  if (sigma.field() != a.field()) throw FieldMismatchError("sigma field differs from algebra");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ei = exact::basis_vec(a.field(), n, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec ej = exact::basis_vec(a.field(), n, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ek = exact::basis_vec(a.field(), n, k);
        if (!exact::vec_is_zero(hom_jacobian(a, sigma, ei, ej, ek))) return false;
      }
    }
  }
  return true;
}

HomLie::HomLie(AnticommAlgebra algebra, Matrix sigma)
    : algebra_(std::move(algebra)), sigma_(std::move(sigma)) {
  if (!is_twisting_map(algebra_, sigma_)) {
    throw PreconditionError("sigma violates the Hom-Jacobi identity");
  }
}

HSSpace hs_space(const AnticommAlgebra& a) {
  const std::size_t n = a.dim();
  const FieldSpec f = a.field();
  // unknowns: sigma(r, c) flattened row-major; one equation per basis triple
  // and output coordinate
  std::vector<Vec> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<Vec> rows(n, exact::zero_vec(f, n * n));
        const std::array<std::array<std::size_t, 3>, 3> cyc = {{{i, j, k}, {j, k, i}, {k, i, j}}};
        for (const auto& t : cyc) {
          const std::size_t x = t[0];
          const Vec w = a.bracket_basis(t[1], t[2]);
          if (exact::vec_is_zero(w)) continue;
          for (std::size_t m = 0; m < n; ++m) {
            const Vec em_w = a.bracket(exact::basis_vec(f, n, m), w);
            for (std::size_t out = 0; out < n; ++out) {
              rows[out][m * n + x] += em_w[out];
            }
          }
        }
        for (auto& r : rows) {
          if (!exact::vec_is_zero(r)) eqs.push_back(std::move(r));
        }
      }
    }
  }
  Subspace flat =
      eqs.empty() ? Subspace::full(f, n * n) : exact::kernel(Matrix::from_rows(f, eqs));
  std::vector<Matrix> basis;
  for (const Vec& row : flat.basis_rows()) {
    basis.push_back(Matrix::unflatten(f, n, n, row));
  }
  HSSpace hs{a, std::move(flat), std::move(basis)};
  for (const Matrix& b : hs.basis) {
    if (!is_twisting_map(a, b)) throw std::logic_error("hs_space produced a non-twisting map");
  }
  return hs;
}

Subspace hom_ideal_closure(const AnticommAlgebra& a, const Matrix& sigma, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionError("hom_ideal_closure: ambient != dim");
  std::vector<Matrix> gens = alg::ad_generators(a);
  gens.push_back(sigma);
  const exact::EchelonBasis eb = exact::spin(a.field(), a.dim(), s.basis_rows(), gens);
  return Subspace::span(a.field(), a.dim(), eb.rows());
}

bool is_hom_ideal(const AnticommAlgebra& a, const Matrix& sigma, const Subspace& s) {
  return hom_ideal_closure(a, sigma, s) == s;
}

IdealReport is_hom_simple(const AnticommAlgebra& a, const Matrix& sigma,
                          const SimplicityOptions& opts) {
  if (sigma.rows() != a.dim() || sigma.cols() != a.dim()) {
    throw DimensionError("sigma must be dim x dim");
  }
  IdealReport report;
  if (a.is_abelian()) {
    // not simple by definition; a witness ideal need not exist here (an
    // eigenvector-free sigma leaves no proper nontrivial Hom-ideal at all)
    report.verdict = alg::Verdict::NotSimple;
    report.note = "abelian";
    return report;
  }
  std::vector<Matrix> gens = alg::ad_generators(a);
  gens.push_back(sigma);

  if (a.field().is_prime_field()) {
    const std::size_t n = a.dim();
    const std::int64_t p = a.field().prime();
    std::vector<fp::Mat> fgens;
    fgens.reserve(gens.size());
    for (const Matrix& g : gens) fgens.push_back(fp::from_matrix(g));
    fp::LineIter lines(n, p);
    std::vector<std::int64_t> rep;
    while (lines.next(rep)) {
      const fp::Basis closure = fp::spin({rep}, fgens, n, p);
      if (closure.full()) continue;
      report.verdict = alg::Verdict::NotSimple;
      if (!report.witness) report.witness = closure.to_subspace(a.field());
      report.proper_nontrivial_ideals_seen.push_back(closure.to_subspace(a.field()));
      if (!opts.collect_ideals) return report;
    }
    if (report.verdict != alg::Verdict::NotSimple) report.verdict = alg::Verdict::Simple;
    return report;
  }

  // over Q: basis-line closures, then Norton with sigma in the envelope
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Subspace cl =
        hom_ideal_closure(a, sigma, Subspace::line(exact::basis_vec(a.field(), a.dim(), i)));
    if (!cl.is_full()) {
      report.verdict = alg::Verdict::NotSimple;
      report.witness = cl;
      report.proper_nontrivial_ideals_seen.push_back(cl);
      return report;
    }
  }
  return alg::norton_irreducible(a.field(), a.dim(), gens, opts);
}

bool is_multiplicative(const AnticommAlgebra& a, const Matrix& sigma) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = sigma.apply(a.bracket_basis(i, j));
      const Vec rhs = a.bracket(sigma.col(i), sigma.col(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_regular(const AnticommAlgebra& a, const Matrix& sigma) {
  return is_multiplicative(a, sigma) && exact::is_invertible(sigma);
}

AnticommAlgebra outside_twist(const AnticommAlgebra& a, const Matrix& theta) {
  if (theta.rows() != a.dim() || theta.cols() != a.dim()) {
    throw DimensionError("theta must be dim x dim");
  }
  std::vector<alg::BracketEntry> entries;
  for (const auto& [key, v] : a.entries()) {
    entries.push_back({key.first, key.second, theta.apply(v)});
  }
  return AnticommAlgebra(a.field(), a.dim(), std::move(entries));
}

AnticommAlgebra inside_twist(const AnticommAlgebra& a, const Matrix& theta) {
  if (theta.rows() != a.dim() || theta.cols() != a.dim()) {
    throw DimensionError("theta must be dim x dim");
  }
  const std::size_t n = a.dim();
  std::vector<alg::BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = a.bracket(theta.col(i), theta.col(j));
      if (!exact::vec_is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  }
  return AnticommAlgebra(a.field(), n, std::move(entries));
}

HomLie yau_twist(const HomLie& h, const Matrix& theta) {
  if (!is_multiplicative(h.algebra(), theta)) {
    throw PreconditionError("yau_twist requires a multiplicative theta");
  }
  return HomLie(outside_twist(h.algebra(), theta), theta * h.sigma());
}

AnticommAlgebra induced_lie(const HomLie& h) {
  const auto inv = exact::inverse(h.sigma());
  if (!inv) throw PreconditionError("induced_lie requires an invertible sigma");
  AnticommAlgebra out = outside_twist(h.algebra(), *inv);
  if (!out.is_lie()) {
    throw PreconditionError("sigma^{-1} o bracket violates the Jacobi identity");
  }
  if (is_multiplicative(h.algebra(), h.sigma()) && !is_multiplicative(out, h.sigma())) {
    throw std::logic_error("regular sigma must be an automorphism of the induced Lie algebra");
  }
  return out;
}

bool is_hom_morphism(const Matrix& phi, const HomLie& h1, const HomLie& h2) {
  if (h1.field() != h2.field() || phi.field() != h1.field()) {
    throw FieldMismatchError("is_hom_morphism: fields differ");
  }
  if (phi.rows() != h2.dim() || phi.cols() != h1.dim()) {
    throw DimensionError("phi must map dim(h1) to dim(h2)");
  }
  for (std::size_t i = 0; i < h1.dim(); ++i) {
    for (std::size_t j = i + 1; j < h1.dim(); ++j) {
      const Vec lhs = phi.apply(h1.algebra().bracket_basis(i, j));
      const Vec rhs = h2.algebra().bracket(phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  }
  return phi * h1.sigma() == h2.sigma() * phi;
}

std::vector<Polynomial> regular_invariant(const HomLie& h, const Subspace& component,
                                          std::size_t n) {
  if (!is_regular(h.algebra(), h.sigma())) {
    throw PreconditionError("regular_invariant requires a regular structure");
  }
  const Matrix power = h.sigma().pow(n);
  for (const Vec& row : component.basis_rows()) {
    if (!component.contains(power.apply(row))) {
      throw PreconditionError("component is not stable under sigma^n");
    }
  }
  // restriction in the component's basis: solve basis^T x = sigma^n b
  const Matrix basis_t = component.basis().transpose();
  const std::size_t k = component.dim();
  Matrix restricted(h.field(), k, k);
  const auto rows = component.basis_rows();
  for (std::size_t c = 0; c < k; ++c) {
    const auto coords = exact::solve(basis_t, power.apply(rows[c]));
    if (!coords) throw std::logic_error("stable component must contain its own image");
    restricted.set_col(c, *coords);
  }
  return exact::invariant_factors(restricted);
}

const char* ps_verdict_name(PsVerdict v) {
  switch (v) {
    case PsVerdict::Yes: return "yes";
    case PsVerdict::No: return "no";
    case PsVerdict::ProbablyNo: return "probably-no";
  }
  return "?";
}

ClassMembership classify_membership(const AnticommAlgebra& a, const MembershipOptions& opts) {
  ClassMembership out;
  const IdealReport rep = alg::is_simple(a, opts.simplicity);
  out.simple = rep.is_simple();
  out.ss = out.simple;  // strongly simple iff simple
  const HSSpace hs = hs_space(a);
  out.ss_star = out.ss && hs.dim() > 0;
  if (!out.ss_star) {
    out.ps = PsVerdict::No;
    out.notes = out.ss ? (hs.dim() == 0 ? "HS(A) = 0" : "") : "not simple";
    if (!rep.conclusive()) out.notes = "simplicity inconclusive: " + rep.note;
    return out;
  }

  const std::size_t d = hs.dim();
  const FieldSpec f = a.field();
  auto element = [&](const std::vector<Scalar>& coords) {
    Matrix m(f, a.dim(), a.dim());
    for (std::size_t t = 0; t < d; ++t) {
      if (!coords[t].is_zero()) m = m + hs.basis[t].scaled(coords[t]);
    }
    return m;
  };

  if (f.is_prime_field()) {
    const std::int64_t p = f.prime();
    long double size = 1;
    for (std::size_t t = 0; t < d; ++t) size *= static_cast<long double>(p);
    if (size <= static_cast<long double>(opts.enumeration_budget)) {
      std::vector<std::int64_t> digits(d, 0);
      bool found = false;
      while (true) {
        std::vector<Scalar> coords;
        coords.reserve(d);
        for (std::int64_t x : digits) coords.push_back(Scalar::from_residue(f, x));
        if (exact::is_invertible(element(coords))) {
          found = true;
          break;
        }
        std::size_t i = d;
        bool advanced = false;
        while (i-- > 0) {
          if (++digits[i] < p) {
            advanced = true;
            break;
          }
          digits[i] = 0;
        }
        if (!advanced) break;
      }
      out.ps = found ? PsVerdict::Yes : PsVerdict::No;
      out.notes = "GL intersection decided by full enumeration of HS coefficients";
      return out;
    }
  }

  // randomized: an invertible sample proves Yes; all-singular samples only
  // support ProbablyNo (Schwartz-Zippel on the determinant polynomial)
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int t = 0; t < opts.samples; ++t) {
    std::vector<Scalar> coords;
    coords.reserve(d);
    bool nonzero = false;
    for (std::size_t k = 0; k < d; ++k) {
      const int c = coeff(rng);
      nonzero |= c != 0;
      coords.push_back(Scalar::from_int(f, c));
    }
    if (!nonzero) continue;
    if (exact::is_invertible(element(coords))) {
      out.ps = PsVerdict::Yes;
      out.notes = "invertible twisting map found by sampling";
      return out;
    }
  }
  out.ps = PsVerdict::ProbablyNo;
  out.notes = "no invertible element among " + std::to_string(opts.samples) + " samples";
  return out;
}

}  // namespace homlie::hom
