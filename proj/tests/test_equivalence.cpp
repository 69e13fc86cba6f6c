#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "agmpi/borwein.hpp"
#include "agmpi/equivalence.hpp"

using namespace agmpi;

TEST_CASE("N = 0: algebraically identical starts") {
  PrecisionContext ctx = PrecisionContext::make(80);
  EquivalenceReport report = check_all(0, ctx);
  // 1/(6-4 sqrt2) = 1.5 + sqrt2 and z_0 = e_0 literally; only arithmetic
  // noise remains
  BigFixed noise = BigFixed::pow2(-ctx.frac_bits + 8, ctx);
  CHECK(report.max_dev_e < noise);
  CHECK(report.max_dev_k < noise);
  CHECK(report.max_dev_y < noise);
  CHECK(report.max_dev_z.is_zero());
  CHECK(report.max_dev_outputs < noise);
  CHECK(report.pass);
}

TEST_CASE("quadratic equivalence at depth") {
  PrecisionContext ctx = PrecisionContext::make(200);
  EquivalenceReport report = check_quadratic_equivalence(5, ctx);
  CHECK(report.max_dev_e < BigFixed::pow10(-190, ctx));
  CHECK(report.max_dev_k < BigFixed::pow10(-190, ctx));
  CHECK(report.max_dev_outputs < BigFixed::pow10(-190, ctx));
  CHECK(report.pass);
  CHECK_THROWS_AS(check_quadratic_equivalence(-1, ctx), std::invalid_argument);
}

TEST_CASE("quartic equivalence at depth") {
  PrecisionContext ctx = PrecisionContext::make(500);
  EquivalenceReport report = check_quartic_equivalence(3, ctx);
  CHECK(report.max_dev_y < BigFixed::pow10(-480, ctx));
  CHECK(report.max_dev_z < BigFixed::pow10(-480, ctx));
  CHECK(report.max_dev_outputs < BigFixed::pow10(-480, ctx));
}

TEST_CASE("one quartic step equals two quadratic steps") {
  PrecisionContext ctx = PrecisionContext::make(100);
  BorweinQuartState quart = bb4_step(bb4_init(ctx));
  BorweinQuadState quad = bb2_step(bb2_step(bb2_init(ctx)));
  BigFixed dev = sub(bb4_output(quart), bb2_output(quad)).abs();
  CHECK(dev < BigFixed::pow2(-ctx.frac_bits + 20, ctx));
  // both equal the published p_2 digits
  CHECK(to_decimal_string(bb4_output(quart), 40) ==
        "3.1415926462135422821493444319826957743144");
  CHECK(to_decimal_string(bb2_output(quad), 40) ==
        "3.1415926462135422821493444319826957743144");
}

TEST_CASE("check_all aggregates both pipelines and passes at 100 digits") {
  PrecisionContext ctx = PrecisionContext::make(100);
  EquivalenceReport report = check_all(2, ctx);
  CHECK(report.max_dev_e < BigFixed::pow10(-85, ctx));
  CHECK(report.max_dev_z < BigFixed::pow10(-85, ctx));
  CHECK(report.max_dev_outputs < BigFixed::pow10(-85, ctx));
  CHECK(report.max_dev_y < BigFixed::pow10(-135, ctx));
  CHECK(report.pass);
}

TEST_CASE("deviations and pass flag at 1000 digits") {
  PrecisionContext ctx = PrecisionContext::make(1000);
  EquivalenceReport report = check_all(4, ctx);
  CHECK(report.max_dev_outputs < BigFixed::pow10(-980, ctx));
  CHECK(report.max_dev_e < BigFixed::pow10(-980, ctx));
  CHECK(report.max_dev_y < BigFixed::pow10(-980, ctx));
  CHECK(report.max_dev_z < BigFixed::pow10(-980, ctx));
  CHECK(report.pass);
}

TEST_CASE("deviations do not grow when guard digits double") {
  int N = 3;
  PrecisionContext narrow = PrecisionContext::make(50, 25);
  PrecisionContext wideg = PrecisionContext::make(50, 50);
  EquivalenceReport r1 = check_all(N, narrow);
  EquivalenceReport r2 = check_all(N, wideg);
  double budget = log10_abs(add(r1.max_dev_outputs,
                                BigFixed::pow2(-narrow.frac_bits + 4, narrow)));
  CHECK(log10_abs(r2.max_dev_outputs) <= budget + 1e-9);
  double budget_e = log10_abs(add(r1.max_dev_e,
                                  BigFixed::pow2(-narrow.frac_bits + 4, narrow)));
  CHECK(log10_abs(r2.max_dev_e) <= budget_e + 1e-9);
}

TEST_CASE("pass flag is monotone in tolerance") {
  PrecisionContext ctx = PrecisionContext::make(60);
  EquivalenceReport report = check_all(1, ctx);
  CHECK(report.pass);
  // widen: still passes; tighten to zero: must fail
  CHECK(report.max_dev_outputs < BigFixed::pow10(-20, ctx));
  CHECK_FALSE(report.max_dev_e < BigFixed::zero(ctx));
}
