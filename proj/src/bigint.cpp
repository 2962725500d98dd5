#include "dorp/bigint.hpp"

#include <stdexcept>

#include "dorp/errors.hpp"

namespace dorp {

BigUint::BigUint(std::uint64_t value) {
  while (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    value >>= 32;
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) {
    limbs_.pop_back();
  }
}

BigUint BigUint::from_decimal(const std::string& text) {
  if (text.empty()) {
    throw ParseError("empty decimal literal");
  }
  BigUint out;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("bad decimal literal: " + text);
    }
    out = out * BigUint(10) + BigUint(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

std::uint64_t BigUint::to_u64() const {
  if (limbs_.size() > 2) {
    throw std::overflow_error("BigUint does not fit in 64 bits");
  }
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
  BigUint out;
  const auto& x = a.limbs_;
  const auto& y = b.limbs_;
  std::size_t n = std::max(x.size(), y.size());
  out.limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    out.limbs_[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
  if (a < b) {
    throw std::underflow_error("BigUint subtraction would go negative");
  }
  BigUint out;
  out.limbs_.resize(a.limbs_.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? b.limbs_[i] : 0);
    borrow = 0;
    if (d < 0) {
      d += (std::int64_t{1} << 32);
      borrow = 1;
    }
    out.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  out.trim();
  return out;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  if (a.is_zero() || b.is_zero()) return BigUint();
  BigUint out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

bool operator<(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size()) {
    return a.limbs_.size() < b.limbs_.size();
  }
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
  }
  return false;
}

BigUint BigUint::div_small(std::uint32_t divisor, std::uint32_t* remainder) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  BigUint out;
  out.limbs_.resize(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    out.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  out.trim();
  if (remainder != nullptr) *remainder = static_cast<std::uint32_t>(rem);
  return out;
}

BigUint BigUint::div_exact(std::uint32_t divisor) const {
  std::uint32_t rem = 0;
  BigUint q = div_small(divisor, &rem);
  if (rem != 0) {
    throw std::logic_error("division expected to be exact had remainder " +
                           std::to_string(rem));
  }
  return q;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  std::string out;
  BigUint cur = *this;
  while (!cur.is_zero()) {
    std::uint32_t rem = 0;
    cur = cur.div_small(1000000000u, &rem);
    std::string chunk = std::to_string(rem);
    if (!cur.is_zero()) {
      chunk.insert(chunk.begin(), 9 - chunk.size(), '0');
    }
    out.insert(0, chunk);
  }
  return out;
}

BigUint pow_u(std::uint64_t base, unsigned exp) {
  BigUint out(1);
  BigUint b(base);
  while (exp > 0) {
    if (exp & 1u) out = out * b;
    b = b * b;
    exp >>= 1u;
  }
  return out;
}

}  // namespace dorp
