#include "agmpi/equivalence.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "agmpi/agm.hpp"
#include "agmpi/borwein.hpp"

namespace agmpi {

namespace {

void fold_max(BigFixed& acc, const BigFixed& dev) {
  if (dev > acc) acc = dev;
}

}  // namespace

BigFixed default_equivalence_tolerance(const PrecisionContext& ctx) {
  return BigFixed::pow10(-(ctx.working_digits() - 10), ctx);
}

EquivalenceReport check_quadratic_equivalence(int N, const PrecisionContext& ctx) {
  if (N < 0) throw std::invalid_argument("check_quadratic_equivalence: N must be >= 0");
  BigFixed zero = BigFixed::zero(ctx);
  EquivalenceReport report{zero, zero, zero, zero, zero,
                           default_equivalence_tolerance(ctx), false};
  BigFixed one = BigFixed::from_int(1, ctx);

  AgmState agm = agm_init(ctx);
  AgmState agm_next = agm_step(agm);
  BorweinQuadState quad = bb2_init(ctx);
  for (int n = 0; n <= N; ++n) {
    BigFixed p_n = agm_output(agm);
    fold_max(report.max_dev_e, sub(quad.e, div(one, p_n)).abs());
    fold_max(report.max_dev_k, sub(quad.k, sub(div(agm.a, agm_next.a), one)).abs());
    if (n == N) {
      fold_max(report.max_dev_outputs, sub(bb2_output(quad), p_n).abs());
    } else {
      quad = bb2_step(quad);
      agm = agm_next;
      agm_next = agm_step(agm_next);
    }
  }
  report.pass = report.max_dev_e < report.tolerance &&
                report.max_dev_k < report.tolerance &&
                report.max_dev_outputs < report.tolerance;
  return report;
}

EquivalenceReport check_quartic_equivalence(int N, const PrecisionContext& ctx) {
  if (N < 0) throw std::invalid_argument("check_quartic_equivalence: N must be >= 0");
  BigFixed zero = BigFixed::zero(ctx);
  EquivalenceReport report{zero, zero, zero, zero, zero,
                           default_equivalence_tolerance(ctx), false};

  std::vector<BorweinQuadState> quad;
  quad.reserve((std::size_t)2 * N + 1);
  quad.push_back(bb2_init(ctx));
  for (int i = 0; i < 2 * N; ++i) quad.push_back(bb2_step(quad.back()));

  BorweinQuartState quart = bb4_init(ctx);
  for (int n = 0; n <= N; ++n) {
    const BorweinQuadState& twice = quad[(std::size_t)2 * n];
    // y_n = sqrt(k_2n) measured as y_n^2 = k_2n: the square root would
    // divide grid noise by 2 sqrt(k_2n), which explodes once k underflows
    // the working grid; the squared form keeps the deviation at noise scale
    // for every n.
    fold_max(report.max_dev_y, sub(mul(quart.y, quart.y), twice.k).abs());
    fold_max(report.max_dev_z, sub(quart.z, twice.e).abs());
    if (n == N) {
      fold_max(report.max_dev_outputs,
               sub(bb4_output(quart), bb2_output(twice)).abs());
    } else {
      quart = bb4_step(quart);
    }
  }
  report.pass = report.max_dev_y < report.tolerance &&
                report.max_dev_z < report.tolerance &&
                report.max_dev_outputs < report.tolerance;
  return report;
}

EquivalenceReport check_all(int N, const PrecisionContext& ctx) {
  EquivalenceReport quad = check_quadratic_equivalence(N, ctx);
  EquivalenceReport quart = check_quartic_equivalence(N, ctx);
  EquivalenceReport report = quad;
  report.max_dev_y = quart.max_dev_y;
  report.max_dev_z = quart.max_dev_z;
  fold_max(report.max_dev_outputs, quart.max_dev_outputs);
  report.pass = quad.pass && quart.pass;
  return report;
}

}  // namespace agmpi
