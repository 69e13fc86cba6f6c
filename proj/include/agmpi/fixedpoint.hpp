#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "agmpi/bignat.hpp"

namespace agmpi {

/// Default number of extra decimal digits carried internally so that the
/// requested digits survive rounding-error propagation.
inline constexpr std::int64_t kDefaultGuardDigits = 50;

/// Fixed-point format shared by every value in one computation: requested
/// decimal digits, guard digits on top, and the derived binary fraction
/// width F = ceil((requested + guard) * log2(10)), at least 8.
struct PrecisionContext {
  std::int64_t requested_digits = 0;
  std::int64_t guard_digits = 0;
  std::int64_t frac_bits = 0;

  static PrecisionContext make(std::int64_t digits,
                               std::int64_t guard = kDefaultGuardDigits);
  std::int64_t working_digits() const { return requested_digits + guard_digits; }
};

/// Signed fixed-point number: value = sign * mantissa * 2^(-F).
///
/// Values are immutable; operations return new values. Arithmetic between
/// two values requires identical F -- mixed formats throw instead of
/// silently promoting, since silent precision loss is the classic bug in
/// this family of algorithms. Truncation toward zero everywhere; accuracy
/// comes from guard digits, not rounding modes.
class BigFixed {
 public:
  static BigFixed zero(const PrecisionContext& ctx);
  static BigFixed from_int(std::int64_t value, const PrecisionContext& ctx);
  /// Exact conversion of a finite double (binary fraction, so no rounding
  /// beyond the 2^(-F) floor).
  static BigFixed from_double(double value, const PrecisionContext& ctx);
  /// Value sign * mantissa * 2^(-F) from a raw scaled integer.
  static BigFixed from_parts(int sign, BigNat mantissa, const PrecisionContext& ctx);
  /// 2^e, truncated when e < -F.
  static BigFixed pow2(std::int64_t e, const PrecisionContext& ctx);
  /// 10^e; exact for e >= 0, floor(2^F / 10^-e) * 2^-F otherwise.
  static BigFixed pow10(std::int64_t e, const PrecisionContext& ctx);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const BigNat& mantissa() const { return mag_; }
  const PrecisionContext& context() const { return *ctx_; }
  std::int64_t frac_bits() const { return ctx_->frac_bits; }

  BigFixed abs() const;
  BigFixed negate() const;

  /// -1 / 0 / +1 by value; requires matching F.
  static int compare(const BigFixed& a, const BigFixed& b);

  friend bool operator==(const BigFixed& a, const BigFixed& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigFixed& a, const BigFixed& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigFixed& a, const BigFixed& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigFixed& a, const BigFixed& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigFixed& a, const BigFixed& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigFixed& a, const BigFixed& b) { return compare(a, b) >= 0; }

  friend BigFixed add(const BigFixed& x, const BigFixed& y);
  friend BigFixed sub(const BigFixed& x, const BigFixed& y);
  friend BigFixed mul(const BigFixed& x, const BigFixed& y);
  friend BigFixed div(const BigFixed& x, const BigFixed& y);
  friend BigFixed sqrt(const BigFixed& x);
  friend BigFixed shift_pow2(const BigFixed& x, std::int64_t j);
  friend BigFixed from_decimal_string(std::string_view s, const PrecisionContext& ctx);

 private:
  BigFixed(int sign, BigNat mag, const PrecisionContext* ctx);

  int sign_ = 0;
  BigNat mag_;
  const PrecisionContext* ctx_ = nullptr;
};

/// Exact fixed-point sum.
BigFixed add(const BigFixed& x, const BigFixed& y);
/// Exact difference; sign may flip.
BigFixed sub(const BigFixed& x, const BigFixed& y);
/// Product truncated toward zero: |result - exact| < 2^(-F).
BigFixed mul(const BigFixed& x, const BigFixed& y);
/// Truncated quotient via Newton reciprocal plus exact correction:
/// |result - exact| < 2^(-F). Throws on division by zero.
BigFixed div(const BigFixed& x, const BigFixed& y);
/// Floor square root: |r - sqrt(x)| < 2^(-F), r = 0 iff x = 0.
/// Throws on negative input.
BigFixed sqrt(const BigFixed& x);
/// sqrt(sqrt(x)); error within 2^(-F+3).
BigFixed fourth_root(const BigFixed& x);
/// x * 2^j, exact for j >= 0, truncated toward zero for j < 0.
BigFixed shift_pow2(const BigFixed& x, std::int64_t j);

inline BigFixed operator+(const BigFixed& x, const BigFixed& y) { return add(x, y); }
inline BigFixed operator-(const BigFixed& x, const BigFixed& y) { return sub(x, y); }
inline BigFixed operator*(const BigFixed& x, const BigFixed& y) { return mul(x, y); }
inline BigFixed operator/(const BigFixed& x, const BigFixed& y) { return div(x, y); }

/// Decimal expansion truncated (never rounded) to `digits` fractional
/// digits. `digits` may not exceed the context's requested digits.
std::string to_decimal_string(const BigFixed& x, std::int64_t digits);
/// Parses "[-]ddd[.fff]"; no exponent notation. The stored value is within
/// 2^(-F) of the numeral and round-trips through to_decimal_string for up
/// to requested_digits fractional digits.
BigFixed from_decimal_string(std::string_view s, const PrecisionContext& ctx);

/// (m, e) with |x| = m * 2^e and m in [0.5, 1); m carries x's sign.
/// Returns (0, 0) for zero.
std::pair<double, std::int64_t> frexp2(const BigFixed& x);
/// log10 |x|; -infinity for zero.
double log10_abs(const BigFixed& x);
/// Nearest double (may overflow/underflow the double range).
double to_double(const BigFixed& x);
/// Short scientific form like "3.142e-990", for report output.
std::string to_science_string(const BigFixed& x, int significant = 4);

}  // namespace agmpi
