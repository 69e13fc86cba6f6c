#include "agmpi/bignat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace agmpi {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kWordBase10 = 10'000'000'000'000'000'000ULL;  // 10^19
constexpr int kWordBase10Digits = 19;

std::uint64_t pow10_u64(int k) {
  std::uint64_t r = 1;
  while (k-- > 0) r *= 10;
  return r;
}

}  // namespace

BigNat::BigNat(std::uint64_t value) {
  if (value != 0) limbs_.push_back(value);
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigNat::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * limbs_.size() - std::countl_zero(limbs_.back());
}

std::uint64_t BigNat::to_u64() const {
  if (limbs_.size() > 1) throw std::overflow_error("BigNat::to_u64: value too large");
  return limbs_.empty() ? 0 : limbs_[0];
}

int BigNat::compare(const BigNat& a, const BigNat& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigNat BigNat::add(const BigNat& a, const BigNat& b) {
  const BigNat& lo = a.limbs_.size() < b.limbs_.size() ? a : b;
  const BigNat& hi = a.limbs_.size() < b.limbs_.size() ? b : a;
  BigNat r;
  r.limbs_.resize(hi.limbs_.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.limbs_.size(); ++i) {
    u128 cur = (u128)hi.limbs_[i] + (i < lo.limbs_.size() ? lo.limbs_[i] : 0) + carry;
    r.limbs_[i] = (std::uint64_t)cur;
    carry = (std::uint64_t)(cur >> 64);
  }
  r.limbs_[hi.limbs_.size()] = carry;
  r.trim();
  return r;
}

BigNat BigNat::sub(const BigNat& a, const BigNat& b) {
  if (compare(a, b) < 0) throw std::invalid_argument("BigNat::sub: underflow");
  BigNat r;
  r.limbs_.resize(a.limbs_.size(), 0);
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t bi = i < b.limbs_.size() ? b.limbs_[i] : 0;
    u128 cur = (u128)a.limbs_[i] - bi - borrow;
    r.limbs_[i] = (std::uint64_t)cur;
    borrow = (std::uint64_t)((cur >> 64) & 1);  // 1 when the subtraction wrapped
  }
  r.trim();
  return r;
}

BigNat BigNat::mul_basecase(const BigNat& a, const BigNat& b) {
  if (a.is_zero() || b.is_zero()) return BigNat();
  BigNat r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a.limbs_[i];
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      u128 cur = (u128)ai * b.limbs_[j] + r.limbs_[i + j] + carry;
      r.limbs_[i + j] = (std::uint64_t)cur;
      carry = (std::uint64_t)(cur >> 64);
    }
    r.limbs_[i + b.limbs_.size()] = carry;
  }
  r.trim();
  return r;
}

BigNat BigNat::low_limbs(std::size_t n) const {
  BigNat r;
  r.limbs_.assign(limbs_.begin(),
                  limbs_.begin() + (std::ptrdiff_t)std::min(n, limbs_.size()));
  r.trim();
  return r;
}

BigNat BigNat::high_limbs(std::size_t n) const {
  BigNat r;
  if (limbs_.size() > n)
    r.limbs_.assign(limbs_.begin() + (std::ptrdiff_t)n, limbs_.end());
  return r;
}

BigNat BigNat::shl_limbs(const BigNat& a, std::size_t n) {
  if (a.is_zero()) return BigNat();
  BigNat r;
  r.limbs_.assign(n, 0);
  r.limbs_.insert(r.limbs_.end(), a.limbs_.begin(), a.limbs_.end());
  return r;
}

BigNat BigNat::karatsuba(const BigNat& a, const BigNat& b) {
  std::size_t m = (std::max(a.limbs_.size(), b.limbs_.size()) + 1) / 2;
  BigNat a0 = a.low_limbs(m), a1 = a.high_limbs(m);
  BigNat b0 = b.low_limbs(m), b1 = b.high_limbs(m);
  BigNat z0 = mul(a0, b0);
  BigNat z2 = mul(a1, b1);
  BigNat z1 = sub(sub(mul(add(a0, a1), add(b0, b1)), z0), z2);
  BigNat r = add(z0, shl_limbs(z1, m));
  return add(r, shl_limbs(z2, 2 * m));
}

BigNat BigNat::mul(const BigNat& a, const BigNat& b) {
  if (std::min(a.limbs_.size(), b.limbs_.size()) < kKaratsubaThreshold)
    return mul_basecase(a, b);
  return karatsuba(a, b);
}

BigNat BigNat::shl(const BigNat& a, std::size_t bits) {
  if (a.is_zero() || bits == 0) return a;
  std::size_t limbs = bits / 64, rem = bits % 64;
  BigNat r;
  r.limbs_.assign(limbs, 0);
  if (rem == 0) {
    r.limbs_.insert(r.limbs_.end(), a.limbs_.begin(), a.limbs_.end());
  } else {
    std::uint64_t carry = 0;
    for (std::uint64_t w : a.limbs_) {
      r.limbs_.push_back((w << rem) | carry);
      carry = w >> (64 - rem);
    }
    if (carry != 0) r.limbs_.push_back(carry);
  }
  return r;
}

BigNat BigNat::shr(const BigNat& a, std::size_t bits) {
  std::size_t limbs = bits / 64, rem = bits % 64;
  if (limbs >= a.limbs_.size()) return BigNat();
  BigNat r;
  r.limbs_.assign(a.limbs_.begin() + (std::ptrdiff_t)limbs, a.limbs_.end());
  if (rem != 0) {
    for (std::size_t i = 0; i + 1 < r.limbs_.size(); ++i)
      r.limbs_[i] = (r.limbs_[i] >> rem) | (r.limbs_[i + 1] << (64 - rem));
    r.limbs_.back() >>= rem;
  }
  r.trim();
  return r;
}

BigNat BigNat::low_bits(std::size_t bits) const {
  std::size_t limbs = bits / 64, rem = bits % 64;
  if (limbs >= limbs_.size()) return *this;
  BigNat r;
  r.limbs_.assign(limbs_.begin(), limbs_.begin() + (std::ptrdiff_t)(limbs + (rem ? 1 : 0)));
  if (rem != 0 && !r.limbs_.empty())
    r.limbs_.back() &= (~0ULL >> (64 - rem));
  r.trim();
  return r;
}

void BigNat::add_word(std::uint64_t w) {
  std::uint64_t carry = w;
  for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
    u128 cur = (u128)limbs_[i] + carry;
    limbs_[i] = (std::uint64_t)cur;
    carry = (std::uint64_t)(cur >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
}

void BigNat::mul_word(std::uint64_t w) {
  if (w == 0) {
    limbs_.clear();
    return;
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 cur = (u128)limbs_[i] * w + carry;
    limbs_[i] = (std::uint64_t)cur;
    carry = (std::uint64_t)(cur >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
}

std::uint64_t BigNat::divmod_word(std::uint64_t divisor) {
  if (divisor == 0) throw std::domain_error("BigNat::divmod_word: division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = ((u128)rem << 64) | limbs_[i];
    limbs_[i] = (std::uint64_t)(cur / divisor);
    rem = (std::uint64_t)(cur % divisor);
  }
  trim();
  return rem;
}

BigNat BigNat::recip_approx(const BigNat& w, std::size_t p) {
  std::size_t wb = w.bit_length();
  if (p <= 48) {
    // Seed from the top (at most 64) bits. The +1 compensates truncation
    // so the result stays on the low side of 2^(wb+p)/w; an untruncated
    // divisor divides exactly and needs no compensation.
    std::size_t t = std::min<std::size_t>(wb, 64);
    u128 top = (u128)shr(w, wb - t).to_u64() + (wb > t ? 1 : 0);
    u128 x = ((u128)1 << (t + p)) / top;
    BigNat r;
    if (x != 0) {
      r.limbs_.push_back((std::uint64_t)x);
      if ((std::uint64_t)(x >> 64) != 0) r.limbs_.push_back((std::uint64_t)(x >> 64));
    }
    return r;
  }
  std::size_t ph = p / 2 + 4;
  BigNat xh = recip_approx(w, ph);
  BigNat x1 = shl(xh, p - ph);
  BigNat e = sub(shl(BigNat(1), wb + p), mul(w, x1));
  return add(x1, shr(mul(x1, e), wb + p));
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& u, const BigNat& v) {
  if (v.is_zero()) throw std::domain_error("BigNat::divmod: division by zero");
  if (compare(u, v) < 0) return {BigNat(), u};
  if (v.limbs_.size() == 1) {
    BigNat q = u;
    std::uint64_t r = q.divmod_word(v.limbs_[0]);
    return {q, BigNat(r)};
  }
  std::size_t ub = u.bit_length(), vb = v.bit_length();
  std::size_t p = ub - vb + 8;
  // Only the top p+16 bits of the divisor matter for the approximate
  // quotient; when truncating, the +1 keeps the estimate one-sided.
  std::size_t dl = vb > p + 16 ? vb - (p + 16) : 0;
  BigNat w = shr(v, dl);
  if (dl > 0) w.add_word(1);
  std::size_t wb = w.bit_length();
  BigNat x = recip_approx(w, p);
  std::size_t du = ub > p + 40 ? ub - (p + 40) : 0;
  BigNat ut = shr(u, du);
  BigNat q = shr(mul(ut, x), wb + p + dl - du);
  BigNat r = sub(u, mul(q, v));
  int guard = 0;
  while (compare(r, v) >= 0) {
    r = sub(r, v);
    q.add_word(1);
    if (++guard > 64)
      throw std::logic_error("BigNat::divmod: correction did not converge");
  }
  return {q, r};
}

std::pair<BigNat, BigNat> BigNat::sqrt_rem(const BigNat& n) {
  std::size_t nb = n.bit_length();
  if (nb == 0) return {BigNat(), BigNat()};
  if (nb <= 126) {
    u128 v = n.limbs_[0];
    if (n.limbs_.size() > 1) v |= (u128)n.limbs_[1] << 64;
    // Double seed on the top bits, then exact integer fixup.
    std::size_t e = nb > 52 ? ((nb - 52 + 1) / 2) * 2 : 0;
    std::uint64_t top = (std::uint64_t)(v >> e);
    u128 s = (u128)(std::uint64_t)std::sqrt((double)top) << (e / 2);
    if (s == 0) s = 1;
    for (int i = 0; i < 4; ++i) s = (s + v / s) / 2;
    while (s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    BigNat sq;
    sq.limbs_.push_back((std::uint64_t)s);
    if ((std::uint64_t)(s >> 64) != 0) sq.limbs_.push_back((std::uint64_t)(s >> 64));
    BigNat rem = sub(n, mul(sq, sq));
    return {sq, rem};
  }
  // Recursive splitting: n = h*4^m + l, sqrt(h) known exactly, then one
  // division refines the low half. The fixup loops repair the at-most-unit
  // overshoot left by the floor division.
  std::size_t m = nb / 4;
  BigNat h = shr(n, 2 * m);
  BigNat l = n.low_bits(2 * m);
  auto [sh, rh] = sqrt_rem(h);
  BigNat a = add(shl(rh, m), shr(l, m));
  auto [q, uu] = divmod(a, shl(sh, 1));
  BigNat s = add(shl(sh, m), q);
  BigNat pos = add(shl(uu, m), l.low_bits(m));
  BigNat neg = mul(q, q);
  BigNat r;
  if (compare(pos, neg) >= 0) {
    r = sub(pos, neg);
  } else {
    BigNat deficit = sub(neg, pos);
    int guard = 0;
    for (;;) {
      // Decrement s: the remainder grows by 2*s_new + 1.
      s = sub(s, BigNat(1));
      BigNat gain = add(shl(s, 1), BigNat(1));
      if (compare(deficit, gain) <= 0) {
        r = sub(gain, deficit);
        break;
      }
      deficit = sub(deficit, gain);
      if (++guard > 1000)
        throw std::logic_error("BigNat::sqrt_rem: fixup did not converge");
    }
  }
  int guard = 0;
  for (;;) {
    BigNat bound = add(shl(s, 1), BigNat(1));
    if (compare(r, bound) < 0) break;
    r = sub(r, bound);
    s.add_word(1);
    if (++guard > 1000)
      throw std::logic_error("BigNat::sqrt_rem: fixup did not converge");
  }
  return {s, r};
}

BigNat BigNat::pow10(std::uint64_t k) {
  BigNat r(1);
  while (k >= (std::uint64_t)kWordBase10Digits) {
    r.mul_word(kWordBase10);
    k -= kWordBase10Digits;
  }
  if (k > 0) r.mul_word(pow10_u64((int)k));
  return r;
}

std::string BigNat::to_decimal() const {
  if (is_zero()) return "0";
  BigNat tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint64_t chunk = tmp.divmod_word(kWordBase10);
    if (tmp.is_zero()) {
      out.insert(0, std::to_string(chunk));
    } else {
      std::string part = std::to_string(chunk);
      out.insert(0, std::string(kWordBase10Digits - part.size(), '0') + part);
    }
  }
  return out;
}

}  // namespace agmpi
