#include "homlie/enumerate.hpp"

namespace homlie::exact {

namespace {

FieldSpec require_prime(FieldSpec field, const char* who) {
  if (!field.is_prime_field()) {
    throw UnsupportedFieldError(std::string(who) + " requires a finite field GF(p)");
  }
  return field;
}

bool odometer_step(std::vector<std::int64_t>& digits, std::int64_t p) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

VectorEnumerator::VectorEnumerator(FieldSpec field, std::size_t dim)
    : field_(require_prime(field, "enumerate_vectors")), dim_(dim), cur_(dim, 0) {}

std::optional<Vec> VectorEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !odometer_step(cur_, field_.prime())) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  Vec v;
  v.reserve(dim_);
  for (std::int64_t d : cur_) v.push_back(Scalar::from_residue(field_, d));
  return v;
}

LineEnumerator::LineEnumerator(FieldSpec field, std::size_t dim)
    : field_(require_prime(field, "enumerate_lines")), dim_(dim) {
  if (dim_ == 0) done_ = true;
  tail_.assign(dim_ > 0 ? dim_ - 1 : 0, 0);
}

std::optional<Vec> LineEnumerator::next_representative() {
  if (done_) return std::nullopt;
  if (started_) {
    // tail runs over the coordinates after the canonical leading 1
    std::vector<std::int64_t> digits(tail_.begin(), tail_.begin() + (dim_ - 1 - lead_));
    if (odometer_step(digits, field_.prime())) {
      std::copy(digits.begin(), digits.end(), tail_.begin());
    } else {
      std::fill(tail_.begin(), tail_.end(), 0);
      if (++lead_ == dim_) {
        done_ = true;
        return std::nullopt;
      }
    }
  }
  started_ = true;
  Vec v = zero_vec(field_, dim_);
  v[lead_] = Scalar::one(field_);
  for (std::size_t i = 0; i < dim_ - 1 - lead_; ++i) {
    v[lead_ + 1 + i] = Scalar::from_residue(field_, tail_[i]);
  }
  return v;
}

std::optional<Subspace> LineEnumerator::next() {
  auto rep = next_representative();
  if (!rep) return std::nullopt;
  return Subspace::line(*rep);
}

std::uint64_t line_count(FieldSpec field, std::size_t dim) {
  require_prime(field, "line_count");
  const std::uint64_t p = static_cast<std::uint64_t>(field.prime());
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total += power;
    power *= p;
  }
  return total;  // 1 + p + ... + p^(n-1)
}

}  // namespace homlie::exact
