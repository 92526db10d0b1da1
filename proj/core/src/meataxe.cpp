#include "homlie/meataxe.hpp"

#include <random>

#include "homlie/poly.hpp"

namespace homlie::alg {

namespace {

using exact::BigInt;
using exact::BigRat;
using exact::EchelonBasis;
using exact::FieldSpec;
using exact::Matrix;
using exact::Polynomial;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;

// U-perp = kernel of the matrix whose rows are a basis of U.
Subspace perp(const Subspace& u) { return exact::kernel(u.basis()); }

std::vector<BigInt> small_divisors(BigInt v, std::size_t cap) {
  if (v < 0) v = -v;
  std::vector<BigInt> out;
  if (v == 0) return out;
  for (BigInt d = 1; d * d <= v && out.size() < cap; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

// Exact roots of p in the field. Over GF(q) all residues are scanned; over Q
// the rational root theorem bounds the candidates after clearing
// denominators.
std::vector<Scalar> field_roots(const Polynomial& p, std::size_t cap) {
  const FieldSpec f = p.field();
  std::vector<Scalar> roots;
  if (p.is_zero()) return roots;
  if (f.is_prime_field()) {
    for (std::int64_t r = 0; r < f.prime(); ++r) {
      const Scalar x = Scalar::from_residue(f, r);
      if (p.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  BigInt denom_lcm = 1;
  for (const Scalar& c : p.coeffs()) {
    const BigInt d = boost::multiprecision::denominator(c.rational());
    denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, d) * d;
  }
  std::vector<BigInt> ints;
  for (const Scalar& c : p.coeffs()) {
    const BigRat scaled = c.rational() * BigRat(denom_lcm);
    ints.push_back(boost::multiprecision::numerator(scaled));
  }
  if (p.eval(Scalar::zero(f)).is_zero()) roots.push_back(Scalar::zero(f));
  const auto nums = small_divisors(ints.front(), cap);
  const auto dens = small_divisors(ints.back(), cap);
  std::size_t tried = 0;
  for (const BigInt& num : nums) {
    for (const BigInt& den : dens) {
      if (tried++ > cap * cap) return roots;
      for (int sign : {1, -1}) {
        const Scalar x = Scalar::from_rational(BigRat(sign * num, den));
        if (p.eval(x).is_zero()) {
          if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        }
      }
    }
  }
  return roots;
}

}  // namespace

IdealReport norton_irreducible(FieldSpec field, std::size_t dim,
                               const std::vector<Matrix>& generators,
                               const SimplicityOptions& opts) {
  IdealReport report;
  if (dim == 0) {
    report.verdict = Verdict::NotSimple;
    report.note = "zero module";
    return report;
  }
  if (generators.empty()) {
    report.verdict = Verdict::NotSimple;
    report.note = "trivial action";
    if (dim >= 2) report.witness = Subspace::line(exact::basis_vec(field, dim, 0));
    return report;
  }

  std::vector<Matrix> transposed;
  transposed.reserve(generators.size());
  for (const Matrix& g : generators) transposed.push_back(g.transpose());

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);

  auto random_element = [&]() {
    // sparse random envelope element: a combination of the generators plus
    // a couple of short products
    Matrix t(field, dim, dim);
    for (const Matrix& g : generators) {
      const int c = coeff(rng);
      if (c != 0) t = t + g.scaled(Scalar::from_int(field, c));
    }
    const int products = static_cast<int>(rng() % 3);
    for (int k = 0; k < products; ++k) {
      const int c = coeff(rng);
      if (c != 0) {
        t = t + (generators[pick(rng)] * generators[pick(rng)]).scaled(Scalar::from_int(field, c));
      }
    }
    return t;
  };

  // Spins a kernel vector set; nullity one is decided outright, any proper
  // spin is a witness. Returns true when the verdict got settled.
  auto norton_step = [&](const Matrix& t) -> bool {
    const Subspace null = exact::kernel(t);
    if (null.is_zero() || null.is_full()) return false;
    for (const Vec& v : null.basis_rows()) {
      const EchelonBasis sp = exact::spin(field, dim, {v}, generators);
      if (!sp.full()) {
        report.verdict = Verdict::NotSimple;
        report.witness = Subspace::span(field, dim, sp.rows());
        report.proper_nontrivial_ideals_seen.push_back(*report.witness);
        return true;
      }
    }
    if (null.dim() != 1) return false;
    // co-spin a kernel vector of T^tr in the transpose module
    const Subspace dual_null = exact::kernel(t.transpose());
    const Vec w = dual_null.basis_rows().front();
    const EchelonBasis dual_spin = exact::spin(field, dim, {w}, transposed);
    if (dual_spin.full()) {
      report.verdict = Verdict::Simple;
      return true;
    }
    report.verdict = Verdict::NotSimple;
    report.witness = perp(Subspace::span(field, dim, dual_spin.rows()));
    report.proper_nontrivial_ideals_seen.push_back(*report.witness);
    return true;
  };

  int tried = 0;
  std::size_t next_generator = 0;
  while (tried < opts.norton_budget) {
    const Matrix m = next_generator < generators.size() ? generators[next_generator++]
                                                        : random_element();
    ++tried;
    if (norton_step(m)) return report;
    // singular shifts of m stabilize every submodule as well, so each
    // rational eigenvalue yields another usable element
    for (const Scalar& lambda : field_roots(exact::charpoly(m), 24)) {
      if (lambda.is_zero()) continue;  // m itself was just tried
      if (tried >= opts.norton_budget) break;
      ++tried;
      if (norton_step(m - Matrix::identity(field, dim).scaled(lambda))) return report;
    }
  }

  report.verdict = Verdict::Inconclusive;
  report.note = "norton budget of " + std::to_string(opts.norton_budget) +
                " elements exhausted without a nullity-one element";
  return report;
}

}  // namespace homlie::alg
