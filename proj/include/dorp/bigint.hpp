// Minimal arbitrary-precision unsigned integer.
//
// Counting formulas must be exact for any n the CLI accepts, so counts are
// carried as BigUint everywhere and fixed-width arithmetic is only used
// inside the limbs. Division is provided for small divisors only; the
// formulas that divide (Schroder, idempotent count) assert exactness.

#ifndef DORP_BIGINT_HPP_
#define DORP_BIGINT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace dorp {

class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT: implicit by design
  static BigUint from_decimal(const std::string& text);

  bool is_zero() const { return limbs_.empty(); }
  std::string to_decimal() const;

  // Returns the value as uint64_t; throws std::overflow_error if too large.
  std::uint64_t to_u64() const;

  friend BigUint operator+(const BigUint& a, const BigUint& b);
  // Requires a >= b.
  friend BigUint operator-(const BigUint& a, const BigUint& b);
  friend BigUint operator*(const BigUint& a, const BigUint& b);
  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigUint& a, const BigUint& b) {
    return !(a == b);
  }
  friend bool operator<(const BigUint& a, const BigUint& b);
  friend bool operator<=(const BigUint& a, const BigUint& b) {
    return a == b || a < b;
  }

  BigUint& operator+=(const BigUint& b) { return *this = *this + b; }
  BigUint& operator*=(const BigUint& b) { return *this = *this * b; }

  // Quotient by a small divisor; remainder written to *remainder if non-null.
  BigUint div_small(std::uint32_t divisor, std::uint32_t* remainder) const;

  // Quotient by a small divisor that must divide exactly.
  BigUint div_exact(std::uint32_t divisor) const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

BigUint pow_u(std::uint64_t base, unsigned exp);

}  // namespace dorp

#endif  // DORP_BIGINT_HPP_
