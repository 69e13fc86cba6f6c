#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace agmpi {

/// Arbitrary-size natural number on 64-bit limbs (little endian, no
/// leading zero limbs). This is the mantissa engine behind BigFixed;
/// every operation is deterministic and exact unless stated otherwise.
class BigNat {
 public:
  BigNat() = default;
  explicit BigNat(std::uint64_t value);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t limb_count() const { return limbs_.size(); }
  std::uint64_t limb(std::size_t i) const {
    return i < limbs_.size() ? limbs_[i] : 0;
  }
  std::size_t bit_length() const;
  bool bit(std::size_t i) const { return (limb(i / 64) >> (i % 64)) & 1; }

  /// Value as uint64; throws std::overflow_error if it does not fit.
  std::uint64_t to_u64() const;

  static int compare(const BigNat& a, const BigNat& b);

  static BigNat add(const BigNat& a, const BigNat& b);
  /// Requires a >= b; throws std::invalid_argument otherwise.
  static BigNat sub(const BigNat& a, const BigNat& b);
  static BigNat mul(const BigNat& a, const BigNat& b);
  /// Schoolbook multiply for any size. Exposed so tests can cross-check
  /// the Karatsuba path against it.
  static BigNat mul_basecase(const BigNat& a, const BigNat& b);

  static BigNat shl(const BigNat& a, std::size_t bits);
  static BigNat shr(const BigNat& a, std::size_t bits);
  /// Value mod 2^bits.
  BigNat low_bits(std::size_t bits) const;

  void add_word(std::uint64_t w);
  void mul_word(std::uint64_t w);
  /// In-place quotient, returns remainder. Divisor must be nonzero.
  std::uint64_t divmod_word(std::uint64_t divisor);

  /// Exact truncated division: returns (q, r) with u = q*v + r, 0 <= r < v.
  /// Newton reciprocal with a final correction pass, so the cost is a few
  /// multiplies instead of limb-by-limb long division.
  static std::pair<BigNat, BigNat> divmod(const BigNat& u, const BigNat& v);

  /// Exact integer square root: returns (s, r) with s = floor(sqrt(n))
  /// and r = n - s^2.
  static std::pair<BigNat, BigNat> sqrt_rem(const BigNat& n);

  static BigNat pow10(std::uint64_t k);

  std::string to_decimal() const;

  /// Schoolbook/Karatsuba crossover, in limbs.
  static constexpr std::size_t kKaratsubaThreshold = 32;

  friend bool operator==(const BigNat& a, const BigNat& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigNat& a, const BigNat& b) { return !(a == b); }
  friend bool operator<(const BigNat& a, const BigNat& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const BigNat& a, const BigNat& b) {
    return compare(a, b) <= 0;
  }
  friend bool operator>(const BigNat& a, const BigNat& b) {
    return compare(a, b) > 0;
  }
  friend bool operator>=(const BigNat& a, const BigNat& b) {
    return compare(a, b) >= 0;
  }

 private:
  std::vector<std::uint64_t> limbs_;

  void trim();
  BigNat low_limbs(std::size_t n) const;
  BigNat high_limbs(std::size_t n) const;
  static BigNat shl_limbs(const BigNat& a, std::size_t n);
  static BigNat karatsuba(const BigNat& a, const BigNat& b);
  /// One-sided Newton reciprocal: X with X <= 2^(bitlen(w)+p)/w and
  /// roughly p-5 correct bits.
  static BigNat recip_approx(const BigNat& w, std::size_t p);
};

}  // namespace agmpi
