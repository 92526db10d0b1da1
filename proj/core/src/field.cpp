#include "homlie/field.hpp"

#include <charconv>

namespace homlie::exact {

namespace {

bool is_prime_trial_division(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_positive(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// extended Euclid; a in [1,p)
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_positive(t, p);
}

}  // namespace

FieldSpec FieldSpec::gf(std::int64_t p) {
  if (!is_prime_trial_division(p)) {
    throw UnsupportedFieldError("GF(p) requires a prime p, got " + std::to_string(p));
  }
  // residue products must fit in int64
  if (p >= (std::int64_t{1} << 31)) {
    throw UnsupportedFieldError("prime too large: " + std::to_string(p));
  }
  FieldSpec f;
  f.kind_ = FieldKind::Prime;
  f.p_ = p;
  return f;
}

std::int64_t FieldSpec::prime() const {
  if (!is_prime_field()) throw UnsupportedFieldError("field is not GF(p)");
  return p_;
}

std::string FieldSpec::str() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(FieldSpec field) : field_(field) {}

Scalar Scalar::from_int(FieldSpec field, long long value) {
  Scalar s(field);
  if (field.is_rationals()) {
    s.q_ = value;
  } else {
    s.r_ = mod_positive(value, field.prime());
  }
  return s;
}

Scalar Scalar::from_rational(const BigRat& value) {
  Scalar s{FieldSpec::rationals()};
  s.q_ = value;  // cpp_rational keeps gcd(a,b)=1, b>0
  return s;
}

Scalar Scalar::from_residue(FieldSpec field, std::int64_t residue) {
  if (!field.is_prime_field()) throw UnsupportedFieldError("from_residue requires GF(p)");
  Scalar s(field);
  s.r_ = mod_positive(residue, field.prime());
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

const BigRat& Scalar::rational() const {
  if (!field_.is_rationals()) throw UnsupportedFieldError("not a rational scalar");
  return q_;
}

std::int64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw UnsupportedFieldError("not a GF(p) scalar");
  return r_;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw FieldMismatchError("scalar fields differ: " + field_.str() + " vs " + rhs.field_.str());
  }
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.prime() - r_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  check_same_field(rhs);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ + rhs.q_;
  } else {
    const std::int64_t p = field_.prime();
    s.r_ = r_ + rhs.r_;
    if (s.r_ >= p) s.r_ -= p;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  check_same_field(rhs);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ - rhs.q_;
  } else {
    const std::int64_t p = field_.prime();
    s.r_ = r_ - rhs.r_;
    if (s.r_ < 0) s.r_ += p;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  check_same_field(rhs);
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = q_ * rhs.q_;
  } else {
    s.r_ = (r_ * rhs.r_) % field_.prime();
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = inv_mod(r_, field_.prime());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  check_same_field(rhs);
  return *this * rhs.inverse();
}

namespace {

// strict unsigned decimal; rejects empty and non-digits
BigInt parse_digits(std::string_view text, std::string_view original) {
  if (text.empty()) throw ParseError("malformed scalar '" + std::string(original) + "'");
  BigInt v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("malformed scalar '" + std::string(original) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  const std::string original(text);
  if (field.is_prime_field()) {
    // bare residue, no sign, must be < p
    BigInt v = parse_digits(text, original);
    if (v >= field.prime()) {
      throw ParseError("residue out of range for " + field.str() + ": '" + original + "'");
    }
    return from_residue(field, static_cast<std::int64_t>(v));
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  BigInt num, den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_digits(text.substr(0, slash), original);
    den = parse_digits(text.substr(slash + 1), original);
    if (den == 0) throw ParseError("zero denominator in '" + original + "'");
  } else {
    num = parse_digits(text, original);
  }
  if (negative) num = -num;
  return from_rational(BigRat(num, den));
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  const BigInt num = boost::multiprecision::numerator(q_);
  const BigInt den = boost::multiprecision::denominator(q_);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace homlie::exact
