#include "homlie/fp.hpp"

#include <functional>

namespace homlie::fp {

std::int64_t inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  t %= p;
  return t < 0 ? t + p : t;
}

Mat from_matrix(const exact::Matrix& m) {
  const std::int64_t p = m.field().prime();
  Mat out(m.rows(), m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m(r, c).residue();
  return out;
}

exact::Matrix to_matrix(const Mat& m, FieldSpec field) {
  exact::Matrix out(field, m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      out(r, c) = exact::Scalar::from_residue(field, m.at(r, c));
  return out;
}

std::vector<std::int64_t> apply(const Mat& m, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> out(m.rows, 0);
  for (std::size_t c = 0; c < m.cols; ++c) {
    const std::int64_t x = v[c];
    if (x == 0) continue;
    for (std::size_t r = 0; r < m.rows; ++r) {
      out[r] = (out[r] + m.at(r, c) * x) % m.p;
    }
  }
  return out;
}

std::size_t rref_in_place(Mat& m) {
  const std::int64_t p = m.p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pr = r;
    while (pr < m.rows && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != r) {
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m.at(r, k), m.at(pr, k));
    }
    const std::int64_t iv = inv(m.at(r, c), p);
    for (std::size_t k = c; k < m.cols; ++k) m.at(r, k) = mul(m.at(r, k), iv, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const std::int64_t f = m.at(i, c);
      for (std::size_t k = c; k < m.cols; ++k) {
        m.at(i, k) = sub(m.at(i, k), mul(f, m.at(r, k), p), p);
      }
    }
    ++r;
  }
  return r;
}

bool Basis::insert(std::vector<std::int64_t> v) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::int64_t c = v[leads_[i]];
    if (c) {
      const auto& row = rows_[i];
      for (std::size_t k = 0; k < n_; ++k) v[k] = sub(v[k], mul(c, row[k], p_), p_);
    }
  }
  std::size_t lead = 0;
  while (lead < n_ && v[lead] == 0) ++lead;
  if (lead == n_) return false;
  const std::int64_t iv = inv(v[lead], p_);
  for (auto& x : v) x = mul(x, iv, p_);
  rows_.push_back(std::move(v));
  leads_.push_back(lead);
  return true;
}

bool Basis::contains(std::vector<std::int64_t> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::int64_t c = v[leads_[i]];
    if (c) {
      const auto& row = rows_[i];
      for (std::size_t k = 0; k < n_; ++k) v[k] = sub(v[k], mul(c, row[k], p_), p_);
    }
  }
  for (std::int64_t x : v) {
    if (x) return false;
  }
  return true;
}

exact::Subspace Basis::to_subspace(FieldSpec field) const {
  std::vector<exact::Vec> rows;
  for (const auto& r : rows_) {
    exact::Vec v;
    v.reserve(n_);
    for (std::int64_t x : r) v.push_back(exact::Scalar::from_residue(field, x));
    rows.push_back(std::move(v));
  }
  return exact::Subspace::span(field, n_, rows);
}

Basis spin(const std::vector<std::vector<std::int64_t>>& seeds, std::span<const Mat> generators,
           std::size_t ambient, std::int64_t p) {
  Basis basis(ambient, p);
  std::vector<std::vector<std::int64_t>> work = seeds;
  while (!work.empty()) {
    auto v = std::move(work.back());
    work.pop_back();
    if (!basis.insert(std::move(v))) continue;
    if (basis.full()) break;
    const auto& added = basis.rows().back();
    for (const Mat& g : generators) work.push_back(apply(g, added));
  }
  return basis;
}

bool LineIter::next(std::vector<std::int64_t>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    std::fill(cur_.begin(), cur_.end(), 0);
    cur_[lead_] = 1;
    out = cur_;
    return true;
  }
  // advance the tail after the leading 1
  for (std::size_t i = n_; i-- > lead_ + 1;) {
    if (++cur_[i] < p_) {
      out = cur_;
      return true;
    }
    cur_[i] = 0;
  }
  if (++lead_ == n_) {
    done_ = true;
    return false;
  }
  std::fill(cur_.begin(), cur_.end(), 0);
  cur_[lead_] = 1;
  out = cur_;
  return true;
}

std::uint64_t subspace_count(std::size_t n, std::size_t k, std::int64_t p) {
  // gaussian binomial [n choose k]_p
  if (k > n) return 0;
  unsigned __int128 num = 1, den = 1;
  auto ppow = [&](std::size_t e) {
    unsigned __int128 v = 1;
    while (e--) v *= static_cast<unsigned __int128>(p);
    return v;
  };
  for (std::size_t i = 0; i < k; ++i) {
    num *= ppow(n - i) - 1;
    den *= ppow(i + 1) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

bool for_each_subspace_basis(std::size_t n, std::size_t k, std::int64_t p,
                             const std::function<bool(const std::vector<std::vector<std::int64_t>>&)>& visit) {
  if (k == 0 || k > n) return true;
  // choose pivot columns, then run an odometer over the free entries
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  auto next_combination = [&]() -> bool {
    std::size_t i = k;
    while (i-- > 0) {
      if (pivots[i] < n - k + i) {
        ++pivots[i];
        for (std::size_t j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  while (true) {
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    // free positions: (r, c) with c > pivots[r] and c not a pivot column
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_pos.emplace_back(r, c);
      }
    }
    std::vector<std::int64_t> digits(free_pos.size(), 0);
    std::vector<std::vector<std::int64_t>> basis(k, std::vector<std::int64_t>(n, 0));
    while (true) {
      for (std::size_t r = 0; r < k; ++r) {
        std::fill(basis[r].begin(), basis[r].end(), 0);
        basis[r][pivots[r]] = 1;
      }
      for (std::size_t t = 0; t < free_pos.size(); ++t) {
        basis[free_pos[t].first][free_pos[t].second] = digits[t];
      }
      if (!visit(basis)) return false;
      std::size_t i = digits.size();
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
    if (!next_combination()) break;
  }
  return true;
}

}  // namespace homlie::fp
