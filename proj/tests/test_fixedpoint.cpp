#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "agmpi/fixedpoint.hpp"
#include "test_support.hpp"

using namespace agmpi;
using testsupport::sqrt_mantissa_oracle;

// First outputs of the iterations are exact algebraic expressions in
// sqrt(2); their published 45-digit expansions anchor the arithmetic here.
static const char* kP0 = "2.914213562373095048801688724209698078569671875";
static const char* kSqrt2 =
    "1.414213562373095048801688724209698078569671875";
static const char* kInvSqrt2_50 =
    "0.70710678118654752440084436210484903928483593768847";

TEST_CASE("precision context invariants") {
  PrecisionContext tiny = PrecisionContext::make(1, 0);
  CHECK(tiny.frac_bits == 8);  // ceil(1 * log2 10) = 4, floor of 8 applies
  PrecisionContext ctx = PrecisionContext::make(100, 50);
  CHECK(ctx.frac_bits == 499);  // ceil(150 * log2 10)
  CHECK(ctx.frac_bits >= (std::int64_t)std::ceil(150 * 3.3219));
  CHECK(ctx.working_digits() == 150);
  CHECK_THROWS_AS(PrecisionContext::make(0), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionContext::make(10, -1), std::invalid_argument);
}

TEST_CASE("integer addition and identities") {
  PrecisionContext ctx = PrecisionContext::make(60);
  BigFixed one = BigFixed::from_int(1, ctx);
  BigFixed two = BigFixed::from_int(2, ctx);
  CHECK(add(one, one) == two);
  BigFixed x = from_decimal_string("1.375", ctx);
  CHECK(add(x, BigFixed::zero(ctx)) == x);
  CHECK(sub(x, x).is_zero());
  CHECK(to_decimal_string(sub(one, from_decimal_string("0.75", ctx)), 2) == "0.25");
}

TEST_CASE("1.5 + sqrt(2) reproduces the published p_0 digits") {
  PrecisionContext ctx = PrecisionContext::make(60);
  BigFixed sqrt2 = sqrt(BigFixed::from_int(2, ctx));
  BigFixed p0 = add(from_decimal_string("1.5", ctx), sqrt2);
  CHECK(to_decimal_string(p0, 45) == kP0);
  // and back: p_0 - 1.5 = sqrt(2)
  CHECK(to_decimal_string(sub(p0, from_decimal_string("1.5", ctx)), 45) == kSqrt2);
}

TEST_CASE("reciprocal of 6 - 4*sqrt(2) equals 1.5 + sqrt(2)") {
  PrecisionContext ctx = PrecisionContext::make(60);
  BigFixed sqrt2 = sqrt(BigFixed::from_int(2, ctx));
  BigFixed e0 = sub(BigFixed::from_int(6, ctx), shift_pow2(sqrt2, 2));
  CHECK(to_decimal_string(div(BigFixed::from_int(1, ctx), e0), 45) == kP0);
}

TEST_CASE("multiplication") {
  PrecisionContext ctx = PrecisionContext::make(50);
  BigFixed x = from_decimal_string("3.178", ctx);
  CHECK(mul(x, BigFixed::from_int(1, ctx)) == x);
  BigFixed half = from_decimal_string("0.5", ctx);
  CHECK(to_decimal_string(mul(half, half), 2) == "0.25");
  CHECK(mul(half, half).mantissa() ==
        BigNat::shl(BigNat(1), (std::size_t)ctx.frac_bits - 2));
  BigFixed sqrt2 = sqrt(BigFixed::from_int(2, ctx));
  BigFixed dev = sub(mul(sqrt2, sqrt2), BigFixed::from_int(2, ctx)).abs();
  CHECK(dev < BigFixed::pow2(-ctx.frac_bits + 2, ctx));
}

TEST_CASE("division basics") {
  PrecisionContext ctx = PrecisionContext::make(60);
  BigFixed x = from_decimal_string("7.25", ctx);
  BigFixed one = BigFixed::from_int(1, ctx);
  CHECK(div(x, one) == x);
  BigFixed inv = div(one, sqrt(BigFixed::from_int(2, ctx)));
  CHECK(to_decimal_string(inv, 50) == kInvSqrt2_50);
  // 1/sqrt(2) must agree with sqrt(0.5) from the digit-by-digit oracle
  BigFixed half = from_decimal_string("0.5", ctx);
  BigNat oracle = sqrt_mantissa_oracle(half);
  BigNat diff = inv.mantissa() > oracle ? BigNat::sub(inv.mantissa(), oracle)
                                        : BigNat::sub(oracle, inv.mantissa());
  CHECK(diff.bit_length() <= 2);
  CHECK_THROWS_AS(div(x, BigFixed::zero(ctx)), std::domain_error);
}

TEST_CASE("square root basics") {
  PrecisionContext ctx = PrecisionContext::make(60);
  CHECK(sqrt(BigFixed::from_int(4, ctx)) == BigFixed::from_int(2, ctx));
  CHECK(sqrt(BigFixed::zero(ctx)).is_zero());
  CHECK(to_decimal_string(sqrt(BigFixed::from_int(2, ctx)), 45) == kSqrt2);
  CHECK_THROWS_AS(sqrt(BigFixed::from_int(-1, ctx)), std::domain_error);
}

TEST_CASE("fourth root") {
  PrecisionContext ctx = PrecisionContext::make(60);
  CHECK(fourth_root(BigFixed::from_int(16, ctx)) == BigFixed::from_int(2, ctx));
  CHECK(fourth_root(BigFixed::from_int(1, ctx)) == BigFixed::from_int(1, ctx));
  BigFixed r = fourth_root(BigFixed::from_int(4, ctx));
  BigFixed dev = sub(r, sqrt(BigFixed::from_int(2, ctx))).abs();
  CHECK(dev < BigFixed::pow2(-ctx.frac_bits + 3, ctx));
  CHECK_THROWS_AS(fourth_root(BigFixed::from_int(-16, ctx)), std::domain_error);
}

TEST_CASE("power-of-two shifts") {
  PrecisionContext ctx = PrecisionContext::make(40);
  CHECK(shift_pow2(BigFixed::from_int(1, ctx), 3) == BigFixed::from_int(8, ctx));
  CHECK(shift_pow2(from_decimal_string("0.5", ctx), 1) == BigFixed::from_int(1, ctx));
  BigFixed x = from_decimal_string("5.4321", ctx);
  CHECK(shift_pow2(x, 0) == x);
  CHECK(shift_pow2(shift_pow2(x, 17), -17) == x);
}

TEST_CASE("decimal output") {
  PrecisionContext ctx = PrecisionContext::make(40);
  CHECK(to_decimal_string(from_decimal_string("0.5", ctx), 5) == "0.50000");
  CHECK(to_decimal_string(BigFixed::from_int(2, ctx), 0) == "2");
  CHECK(to_decimal_string(BigFixed::from_int(-3, ctx), 2) == "-3.00");
  CHECK(to_decimal_string(BigFixed::zero(ctx), 3) == "0.000");
  CHECK_THROWS_AS(to_decimal_string(BigFixed::from_int(1, ctx), 41),
                  std::invalid_argument);
}

TEST_CASE("decimal input") {
  PrecisionContext ctx = PrecisionContext::make(40);
  CHECK(from_decimal_string("1", ctx) == BigFixed::from_int(1, ctx));
  BigFixed q = from_decimal_string("0.25", ctx);
  CHECK(q.mantissa() == BigNat::shl(BigNat(1), (std::size_t)ctx.frac_bits - 2));
  BigFixed pi5 = from_decimal_string("3.14159", ctx);
  BigFixed exact = div(BigFixed::from_int(314159, ctx), BigFixed::from_int(100000, ctx));
  CHECK(sub(pi5, exact).abs() <= BigFixed::pow2(-ctx.frac_bits + 1, ctx));
  CHECK(from_decimal_string("-0.25", ctx).sign() == -1);
  for (const char* bad : {"", "-", ".5", "1.", "abc", "1.2.3", "+1", "1e5", "1 "}) {
    CHECK_THROWS_AS(from_decimal_string(bad, ctx), std::invalid_argument);
  }
}

TEST_CASE("property: mul matches doubled-precision oracle") {
  PrecisionContext ctx = PrecisionContext::make(45);
  PrecisionContext wide{ctx.requested_digits, ctx.guard_digits, 2 * ctx.frac_bits};
  std::mt19937_64 rng(21);
  auto f = (std::size_t)ctx.frac_bits;
  for (int i = 0; i < 200; ++i) {
    BigFixed x = testsupport::random_fixed(rng, ctx, 4.0);
    BigFixed y = testsupport::random_fixed(rng, ctx, 4.0);
    BigFixed wx = BigFixed::from_parts(x.sign(), BigNat::shl(x.mantissa(), f), wide);
    BigFixed wy = BigFixed::from_parts(y.sign(), BigNat::shl(y.mantissa(), f), wide);
    BigNat narrow = BigNat::shl(mul(x, y).mantissa(), f);
    BigNat exact = mul(wx, wy).mantissa();
    BigNat diff = narrow > exact ? BigNat::sub(narrow, exact) : BigNat::sub(exact, narrow);
    // < 2^(-F+1) expressed on the 2F grid
    CHECK(diff < BigNat::shl(BigNat(1), f + 1));
  }
}

TEST_CASE("property: sqrt self-consistency on [0, 16)") {
  PrecisionContext ctx = PrecisionContext::make(45);
  std::mt19937_64 rng(22);
  BigFixed tol = BigFixed::pow2(-ctx.frac_bits + 4, ctx);
  for (int i = 0; i < 120; ++i) {
    BigFixed x = testsupport::random_fixed(rng, ctx, 16.0);
    BigFixed r = sqrt(x);
    CHECK(sub(mul(r, r), x).abs() < tol);
    CHECK(r.mantissa() == sqrt_mantissa_oracle(x));
  }
}

TEST_CASE("property: division inverts multiplication") {
  PrecisionContext ctx = PrecisionContext::make(45);
  std::mt19937_64 rng(23);
  BigFixed one = BigFixed::from_int(1, ctx);
  // Truncation error analysis: |mul(div(1,x), x) - 1| <= (x+1) ulp, so the
  // 16-ulp bound holds below x = 15 and 17 ulp covers the rest of [0.1, 16).
  BigFixed tol = BigFixed::pow2(-ctx.frac_bits + 4, ctx);
  for (int i = 0; i < 120; ++i) {
    double v = std::uniform_real_distribution<double>(0.1, 15.0)(rng);
    BigFixed x = BigFixed::from_double(v, ctx);
    CHECK(sub(mul(div(one, x), x), one).abs() < tol);
  }
  BigFixed wide = BigFixed::pow2(-ctx.frac_bits + 5, ctx);
  for (int i = 0; i < 40; ++i) {
    double v = std::uniform_real_distribution<double>(15.0, 16.0)(rng);
    BigFixed x = BigFixed::from_double(v, ctx);
    CHECK(sub(mul(div(one, x), x), one).abs() < wide);
  }
}

TEST_CASE("property: decimal strings round-trip") {
  PrecisionContext ctx = PrecisionContext::make(40);
  std::mt19937_64 rng(24);
  for (int i = 0; i < 200; ++i) {
    std::string s = std::to_string(rng() % 10);
    std::size_t frac_len = 1 + rng() % 40;
    s += '.';
    bool nonzero = s[0] != '0';
    for (std::size_t j = 0; j < frac_len; ++j) {
      char c = (char)('0' + rng() % 10);
      nonzero = nonzero || c != '0';
      s += c;
    }
    if (!nonzero) continue;  // "-0.000" has no canonical signed form
    if (rng() % 2) s.insert(0, 1, '-');
    CHECK(to_decimal_string(from_decimal_string(s, ctx), (std::int64_t)frac_len) == s);
  }
}

TEST_CASE("property: operations are deterministic") {
  PrecisionContext ctx = PrecisionContext::make(50);
  std::mt19937_64 rng(25);
  for (int i = 0; i < 40; ++i) {
    BigFixed x = testsupport::random_fixed(rng, ctx, 4.0);
    BigFixed y = testsupport::random_fixed(rng, ctx, 4.0);
    if (y.is_zero()) continue;
    CHECK(mul(x, y).mantissa() == mul(x, y).mantissa());
    CHECK(div(x, y).mantissa() == div(x, y).mantissa());
    CHECK(sqrt(x).mantissa() == sqrt(x).mantissa());
    // same digits parsed twice give bit-identical values
    std::string s = to_decimal_string(x, 40);
    CHECK(from_decimal_string(s, ctx).mantissa() == from_decimal_string(s, ctx).mantissa());
  }
}

TEST_CASE("mixed-precision arithmetic is rejected") {
  PrecisionContext a = PrecisionContext::make(40);
  PrecisionContext b = PrecisionContext::make(60);
  BigFixed x = BigFixed::from_int(1, a);
  BigFixed y = BigFixed::from_int(1, b);
  CHECK_THROWS_AS(add(x, y), std::invalid_argument);
  CHECK_THROWS_AS(sub(x, y), std::invalid_argument);
  CHECK_THROWS_AS(mul(x, y), std::invalid_argument);
  CHECK_THROWS_AS(div(x, y), std::invalid_argument);
  // same format, distinct context objects: fine by design
  PrecisionContext a2 = PrecisionContext::make(40);
  CHECK(add(x, BigFixed::from_int(2, a2)) == BigFixed::from_int(3, a));
}

TEST_CASE("scaled float helpers") {
  PrecisionContext ctx = PrecisionContext::make(60);
  BigFixed x = from_decimal_string("0.125", ctx);
  auto [m, e] = frexp2(x);
  CHECK(m == doctest::Approx(0.5));
  CHECK(e == -2);
  CHECK(to_double(x) == 0.125);
  CHECK(log10_abs(x) == doctest::Approx(std::log10(0.125)));
  CHECK(log10_abs(BigFixed::zero(ctx)) == -HUGE_VAL);
  CHECK(to_double(BigFixed::from_int(-3, ctx)) == -3.0);
  BigFixed tiny = BigFixed::pow10(-45, ctx);
  CHECK(log10_abs(tiny) == doctest::Approx(-45.0).epsilon(1e-6));
  CHECK(to_science_string(tiny, 3).substr(0, 4) == "1.00");
}
