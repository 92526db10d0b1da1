#include "homlie/poly.hpp"

#include <optional>

namespace homlie::exact {

Polynomial::Polynomial(FieldSpec field, std::vector<Scalar> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (const Scalar& c : c_) {
    if (c.field() != field_) throw FieldMismatchError("mixed-field polynomial coefficients");
  }
  normalize();
}

Polynomial Polynomial::from_ints(FieldSpec field, std::initializer_list<long long> coeffs) {
  std::vector<Scalar> c;
  for (long long v : coeffs) c.push_back(Scalar::from_int(field, v));
  return Polynomial(field, std::move(c));
}

Polynomial Polynomial::x(FieldSpec field) { return from_ints(field, {0, 1}); }

Polynomial Polynomial::constant(const Scalar& c) {
  return Polynomial(c.field(), std::vector<Scalar>{c});
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : Scalar::zero(field_);
}

Scalar Polynomial::leading() const {
  return c_.empty() ? Scalar::zero(field_) : c_.back();
}

bool Polynomial::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatchError("polynomial fields differ");
  std::vector<Scalar> out(std::max(c_.size(), rhs.c_.size()), Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> out = c_;
  for (auto& c : out) c = -c;
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatchError("polynomial fields differ");
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  std::vector<Scalar> out(c_.size() + rhs.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  std::vector<Scalar> out = c_;
  for (auto& x : out) x *= c;
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (field_ != divisor.field_) throw FieldMismatchError("polynomial fields differ");
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial rem = *this;
  std::vector<Scalar> q(std::max<int>(0, degree() - divisor.degree() + 1), Scalar::zero(field_));
  const Scalar lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    const Scalar f = rem.leading() * lead_inv;
    q[shift] = f;
    std::vector<Scalar> sub(shift, Scalar::zero(field_));
    for (const Scalar& c : divisor.c_) sub.push_back(c * f);
    rem = rem - Polynomial(field_, std::move(sub));
  }
  return {Polynomial(field_, std::move(q)), rem};
}

Scalar Polynomial::eval(const Scalar& at) const {
  Scalar acc = Scalar::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].str();
    bool neg = !coeff.empty() && coeff.front() == '-';
    if (neg) coeff.erase(0, 1);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

using PolyMat = std::vector<std::vector<Polynomial>>;

// Smith normal form over F[x] by elementary operations; diag entries end up
// monic with d1 | d2 | ... .
std::vector<Polynomial> smith_diagonal(PolyMat a, FieldSpec field) {
  const std::size_t n = a.size();
  std::vector<Polynomial> diag;
  std::size_t t = 0;
  auto nonzero_min_degree = [&](std::size_t from) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    int best_deg = 0;
    for (std::size_t i = from; i < n; ++i) {
      for (std::size_t j = from; j < n; ++j) {
        if (a[i][j].is_zero()) continue;
        if (!best || a[i][j].degree() < best_deg) {
          best = {{i, j}};
          best_deg = a[i][j].degree();
        }
      }
    }
    return best;
  };
  while (t < n) {
    auto pos = nonzero_min_degree(t);
    if (!pos) break;
    std::swap(a[t], a[pos->first]);
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pos->second]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column t
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [q, r] = a[i][t].divmod(a[t][t]);
        for (std::size_t j = t; j < n; ++j) a[i][j] = a[i][j] - q * a[t][j];
        if (!r.is_zero()) {
          std::swap(a[t], a[i]);  // smaller-degree pivot
          clean = false;
        }
      }
      if (!clean) continue;
      // clear row t
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [q, r] = a[t][j].divmod(a[t][t]);
        for (std::size_t i = t; i < n; ++i) a[i][j] = a[i][j] - q * a[i][t];
        if (!r.is_zero()) {
          for (std::size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix
      for (std::size_t i = t + 1; i < n && clean; ++i) {
        for (std::size_t j = t + 1; j < n && clean; ++j) {
          if (a[i][j].is_zero()) continue;
          auto [q, r] = a[i][j].divmod(a[t][t]);
          if (!r.is_zero()) {
            // fold the offending row into row t and restart
            for (std::size_t k = t; k < n; ++k) a[t][k] = a[t][k] + a[i][k];
            clean = false;
          }
        }
      }
    }
    diag.push_back(a[t][t].monic());
    ++t;
  }
  return diag;
}

PolyMat characteristic_matrix(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic matrix requires a square matrix");
  const std::size_t n = m.rows();
  const FieldSpec f = m.field();
  PolyMat a(n, std::vector<Polynomial>(n, Polynomial(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> coeffs{-m(i, j)};
      if (i == j) coeffs.push_back(Scalar::one(f));
      a[i][j] = Polynomial(f, std::move(coeffs));
    }
  }
  return a;
}

}  // namespace

Polynomial charpoly(const Matrix& m) {
  const FieldSpec f = m.field();
  Polynomial prod = Polynomial::from_ints(f, {1});
  for (const Polynomial& d : smith_diagonal(characteristic_matrix(m), f)) prod = prod * d;
  return prod.monic();
}

std::vector<Polynomial> invariant_factors(const Matrix& m) {
  std::vector<Polynomial> out;
  for (Polynomial& d : smith_diagonal(characteristic_matrix(m), m.field())) {
    if (d.degree() >= 1) out.push_back(std::move(d));
  }
  return out;
}

bool is_similar(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("is_similar requires square matrices");
  if (a.field() != b.field()) throw FieldMismatchError("is_similar: fields differ");
  if (a.rows() != b.rows()) throw DimensionError("is_similar: sizes differ");
  return invariant_factors(a) == invariant_factors(b);
}

}  // namespace homlie::exact
