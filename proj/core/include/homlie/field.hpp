#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "homlie/errors.hpp"

namespace homlie::exact {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, Prime };

/// The coefficient field: either the rationals or GF(p) for a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec gf(std::int64_t p);

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::Prime; }
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }

  /// Characteristic p; only valid for prime fields.
  std::int64_t prime() const;

  std::int64_t characteristic() const { return is_prime_field() ? p_ : 0; }

  bool operator==(const FieldSpec&) const = default;

  std::string str() const;

 private:
  FieldKind kind_ = FieldKind::Rationals;
  std::int64_t p_ = 0;
};

/// An exact field element in canonical form: a reduced fraction over the
/// rationals, a residue in [0,p) over GF(p). Equality is representation
/// equality.
class Scalar {
 public:
  Scalar() = default;  // 0 over the rationals

  explicit Scalar(FieldSpec field);  // zero of the field
  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return from_int(field, 1); }
  static Scalar from_int(FieldSpec field, long long value);
  static Scalar from_rational(const BigRat& value);  // rationals only
  static Scalar from_residue(FieldSpec field, std::int64_t residue);

  /// Scalar text format: "a" or "a/b" over the rationals (optional sign on a),
  /// a bare residue "k" with 0 <= k < p over GF(p).
  static Scalar parse(FieldSpec field, std::string_view text);
  std::string str() const;

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Payload accessors; wrong-field access throws.
  const BigRat& rational() const;
  std::int64_t residue() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // throws on division by zero
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  bool operator==(const Scalar&) const = default;

 private:
  void check_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  BigRat q_ = 0;        // rationals payload
  std::int64_t r_ = 0;  // GF(p) payload
};

}  // namespace homlie::exact
