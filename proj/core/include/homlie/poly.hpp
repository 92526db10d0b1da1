#pragma once

#include <utility>

#include "homlie/matrix.hpp"

namespace homlie::exact {

/// Dense univariate polynomial over a field, coefficients low to high.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec field) : field_(field) {}  // zero
  Polynomial(FieldSpec field, std::vector<Scalar> coeffs);
  static Polynomial from_ints(FieldSpec field, std::initializer_list<long long> coeffs);
  static Polynomial x(FieldSpec field);
  static Polynomial constant(const Scalar& c);

  FieldSpec field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree, with deg 0 = -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t k) const;
  Scalar leading() const;
  bool is_monic() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial monic() const;

  /// Euclidean division: (*this) = q * divisor + r with deg r < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Scalar eval(const Scalar& at) const;

  bool operator==(const Polynomial&) const = default;

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();

  FieldSpec field_;
  std::vector<Scalar> c_;
};

/// Monic characteristic polynomial, exact coefficients (via the Smith normal
/// form of xI - m over F[x]).
Polynomial charpoly(const Matrix& m);

/// Invariant factors of m (each dividing the next, all monic nonconstant);
/// this is the rational canonical form data and a complete similarity
/// invariant.
std::vector<Polynomial> invariant_factors(const Matrix& m);

bool is_similar(const Matrix& a, const Matrix& b);

}  // namespace homlie::exact
