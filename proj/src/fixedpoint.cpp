#include "agmpi/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace agmpi {

namespace {

constexpr int kWordBase10Digits = 19;  // 10^19 fits a 64-bit word

void check_same_format(const BigFixed& a, const BigFixed& b) {
  if (a.frac_bits() != b.frac_bits())
    throw std::invalid_argument("BigFixed: mixed-precision arithmetic");
}

std::uint64_t pow10_u64(int k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= 10;
  return r;
}

}  // namespace

PrecisionContext PrecisionContext::make(std::int64_t digits, std::int64_t guard) {
  if (digits < 1) throw std::invalid_argument("PrecisionContext: digits must be >= 1");
  if (guard < 0) throw std::invalid_argument("PrecisionContext: guard must be >= 0");
  PrecisionContext ctx;
  ctx.requested_digits = digits;
  ctx.guard_digits = guard;
  double bits = std::ceil((double)(digits + guard) * std::log2(10.0));
  ctx.frac_bits = std::max<std::int64_t>(8, (std::int64_t)bits);
  return ctx;
}

BigFixed::BigFixed(int sign, BigNat mag, const PrecisionContext* ctx)
    : sign_(mag.is_zero() ? 0 : sign), mag_(std::move(mag)), ctx_(ctx) {
  if (sign_ != 0 && sign_ != 1 && sign_ != -1)
    throw std::invalid_argument("BigFixed: bad sign");
}

BigFixed BigFixed::zero(const PrecisionContext& ctx) {
  return BigFixed(0, BigNat(), &ctx);
}

BigFixed BigFixed::from_parts(int sign, BigNat mantissa, const PrecisionContext& ctx) {
  return BigFixed(sign, std::move(mantissa), &ctx);
}

BigFixed BigFixed::from_int(std::int64_t value, const PrecisionContext& ctx) {
  int sign = value == 0 ? 0 : (value > 0 ? 1 : -1);
  std::uint64_t mag = value >= 0 ? (std::uint64_t)value : 0 - (std::uint64_t)value;
  return BigFixed(sign, BigNat::shl(BigNat(mag), (std::size_t)ctx.frac_bits), &ctx);
}

BigFixed BigFixed::from_double(double value, const PrecisionContext& ctx) {
  if (!std::isfinite(value))
    throw std::invalid_argument("BigFixed::from_double: not finite");
  if (value == 0.0) return zero(ctx);
  int sign = value > 0 ? 1 : -1;
  int exp = 0;
  double frac = std::frexp(std::fabs(value), &exp);
  auto mant = (std::uint64_t)std::ldexp(frac, 53);  // 53-bit integer mantissa
  std::int64_t shift = ctx.frac_bits + exp - 53;
  BigNat mag(mant);
  if (shift >= 0)
    mag = BigNat::shl(mag, (std::size_t)shift);
  else
    mag = BigNat::shr(mag, (std::size_t)(-shift));
  return BigFixed(sign, std::move(mag), &ctx);
}

BigFixed BigFixed::pow2(std::int64_t e, const PrecisionContext& ctx) {
  std::int64_t shift = ctx.frac_bits + e;
  if (shift < 0) return zero(ctx);
  return BigFixed(1, BigNat::shl(BigNat(1), (std::size_t)shift), &ctx);
}

BigFixed BigFixed::pow10(std::int64_t e, const PrecisionContext& ctx) {
  if (e >= 0) {
    BigNat mag = BigNat::shl(BigNat::pow10((std::uint64_t)e), (std::size_t)ctx.frac_bits);
    return BigFixed(1, std::move(mag), &ctx);
  }
  BigNat num = BigNat::shl(BigNat(1), (std::size_t)ctx.frac_bits);
  BigNat mag = BigNat::divmod(num, BigNat::pow10((std::uint64_t)(-e))).first;
  return BigFixed(1, std::move(mag), &ctx);
}

BigFixed BigFixed::abs() const {
  return BigFixed(sign_ == 0 ? 0 : 1, mag_, ctx_);
}

BigFixed BigFixed::negate() const {
  return BigFixed(-sign_, mag_, ctx_);
}

int BigFixed::compare(const BigFixed& a, const BigFixed& b) {
  check_same_format(a, b);
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = BigNat::compare(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

BigFixed add(const BigFixed& x, const BigFixed& y) {
  check_same_format(x, y);
  if (x.sign_ == 0) return y;
  if (y.sign_ == 0) return x;
  if (x.sign_ == y.sign_)
    return BigFixed(x.sign_, BigNat::add(x.mag_, y.mag_), x.ctx_);
  int c = BigNat::compare(x.mag_, y.mag_);
  if (c == 0) return BigFixed::zero(*x.ctx_);
  if (c > 0) return BigFixed(x.sign_, BigNat::sub(x.mag_, y.mag_), x.ctx_);
  return BigFixed(y.sign_, BigNat::sub(y.mag_, x.mag_), x.ctx_);
}

BigFixed sub(const BigFixed& x, const BigFixed& y) {
  return add(x, y.negate());
}

BigFixed mul(const BigFixed& x, const BigFixed& y) {
  check_same_format(x, y);
  if (x.sign_ == 0 || y.sign_ == 0) return BigFixed::zero(*x.ctx_);
  BigNat mag = BigNat::shr(BigNat::mul(x.mag_, y.mag_), (std::size_t)x.frac_bits());
  return BigFixed(x.sign_ * y.sign_, std::move(mag), x.ctx_);
}

BigFixed div(const BigFixed& x, const BigFixed& y) {
  check_same_format(x, y);
  if (y.sign_ == 0) throw std::domain_error("BigFixed: division by zero");
  if (x.sign_ == 0) return BigFixed::zero(*x.ctx_);
  BigNat num = BigNat::shl(x.mag_, (std::size_t)x.frac_bits());
  BigNat mag = BigNat::divmod(num, y.mag_).first;
  return BigFixed(x.sign_ * y.sign_, std::move(mag), x.ctx_);
}

BigFixed sqrt(const BigFixed& x) {
  if (x.sign_ < 0) throw std::domain_error("BigFixed: sqrt of negative value");
  if (x.sign_ == 0) return x;
  BigNat mag = BigNat::sqrt_rem(BigNat::shl(x.mag_, (std::size_t)x.frac_bits())).first;
  return BigFixed(1, std::move(mag), &x.context());
}

BigFixed fourth_root(const BigFixed& x) {
  if (x.sign() < 0) throw std::domain_error("BigFixed: fourth root of negative value");
  return sqrt(sqrt(x));
}

BigFixed shift_pow2(const BigFixed& x, std::int64_t j) {
  if (x.sign() == 0 || j == 0) return x;
  BigNat mag = j > 0 ? BigNat::shl(x.mantissa(), (std::size_t)j)
                     : BigNat::shr(x.mantissa(), (std::size_t)(-j));
  return BigFixed(x.sign(), std::move(mag), &x.context());
}

std::string to_decimal_string(const BigFixed& x, std::int64_t digits) {
  const PrecisionContext& ctx = x.context();
  if (digits < 0 || digits > ctx.requested_digits)
    throw std::invalid_argument("to_decimal_string: digits exceeds context capacity");
  auto frac_bits = (std::size_t)ctx.frac_bits;
  BigNat integral = BigNat::shr(x.mantissa(), frac_bits);
  BigNat frac = x.mantissa().low_bits(frac_bits);
  std::string out = integral.to_decimal();
  bool any_digit = !integral.is_zero();
  if (digits > 0) {
    out += '.';
    std::int64_t remaining = digits;
    while (remaining > 0) {
      int take = remaining < kWordBase10Digits ? (int)remaining : kWordBase10Digits;
      frac.mul_word(pow10_u64(take));
      std::uint64_t chunk = BigNat::shr(frac, frac_bits).to_u64();
      frac = frac.low_bits(frac_bits);
      std::string part = std::to_string(chunk);
      out += std::string((std::size_t)take - part.size(), '0') + part;
      any_digit = any_digit || chunk != 0;
      remaining -= take;
    }
  }
  if (x.sign() < 0 && any_digit) out.insert(0, 1, '-');
  return out;
}

BigFixed from_decimal_string(std::string_view s, const PrecisionContext& ctx) {
  std::size_t pos = 0;
  int sign = 1;
  if (pos < s.size() && s[pos] == '-') {
    sign = -1;
    ++pos;
  }
  std::size_t int_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == int_begin)
    throw std::invalid_argument("from_decimal_string: missing integer part");
  std::string_view int_digits = s.substr(int_begin, pos - int_begin);
  std::string_view frac_digits;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t frac_begin = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == frac_begin)
      throw std::invalid_argument("from_decimal_string: missing fraction digits");
    frac_digits = s.substr(frac_begin, pos - frac_begin);
  }
  if (pos != s.size())
    throw std::invalid_argument("from_decimal_string: trailing characters");

  auto parse_nat = [](std::string_view d) {
    BigNat v;
    std::size_t i = 0;
    while (i < d.size()) {
      std::size_t take = std::min<std::size_t>(kWordBase10Digits, d.size() - i);
      std::uint64_t chunk = 0;
      for (std::size_t j = 0; j < take; ++j) chunk = chunk * 10 + (std::uint64_t)(d[i + j] - '0');
      v.mul_word(pow10_u64((int)take));
      v.add_word(chunk);
      i += take;
    }
    return v;
  };

  BigNat mag = BigNat::shl(parse_nat(int_digits), (std::size_t)ctx.frac_bits);
  if (!frac_digits.empty()) {
    // Round the fraction up so truncation in to_decimal_string gives the
    // original digits back.
    BigNat num = BigNat::shl(parse_nat(frac_digits), (std::size_t)ctx.frac_bits);
    auto [q, r] = BigNat::divmod(num, BigNat::pow10(frac_digits.size()));
    if (!r.is_zero()) q.add_word(1);
    mag = BigNat::add(mag, q);
  }
  return BigFixed(sign, std::move(mag), &ctx);
}

std::pair<double, std::int64_t> frexp2(const BigFixed& x) {
  if (x.is_zero()) return {0.0, 0};
  const BigNat& m = x.mantissa();
  std::size_t bl = m.bit_length();
  std::uint64_t top;
  if (bl >= 64) {
    top = BigNat::shr(m, bl - 64).to_u64();
  } else {
    top = BigNat::shl(m, 64 - bl).to_u64();
  }
  double frac = (double)top * 0x1p-64;
  if (x.sign() < 0) frac = -frac;
  return {frac, (std::int64_t)bl - x.frac_bits()};
}

double log10_abs(const BigFixed& x) {
  if (x.is_zero()) return -HUGE_VAL;
  auto [m, e] = frexp2(x);
  return std::log10(std::fabs(m)) + (double)e * std::log10(2.0);
}

double to_double(const BigFixed& x) {
  auto [m, e] = frexp2(x);
  if (e > 2000) return m < 0 ? -HUGE_VAL : HUGE_VAL;
  if (e < -2000) return 0.0;
  return std::ldexp(m, (int)e);
}

std::string to_science_string(const BigFixed& x, int significant) {
  if (x.is_zero()) return "0";
  double lg = log10_abs(x);
  double e10 = std::floor(lg);
  double mant = std::pow(10.0, lg - e10);
  // rounding the mantissa can carry it to 10.0; renormalize
  double rounded = mant + 0.5 * std::pow(10.0, 1 - significant);
  if (rounded >= 10.0) {
    mant /= 10.0;
    e10 += 1;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*fe%+.0f", significant - 1, mant, e10);
  std::string out = buf;
  if (x.sign() < 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace agmpi
