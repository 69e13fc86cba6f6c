#include "agmpi/agm.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace agmpi {

AgmState agm_init(const PrecisionContext& ctx) {
  BigFixed one = BigFixed::from_int(1, ctx);
  BigFixed b = sqrt(shift_pow2(one, -1));  // sqrt(1/2), one rounding instead of two
  BigFixed c_sq = sub(one, mul(b, b));
  return AgmState{0, one, std::move(b), std::move(c_sq), BigFixed::zero(ctx)};
}

AgmState agm_init_general(const BigFixed& a0, const BigFixed& b0) {
  if (b0.sign() <= 0 || a0.sign() <= 0)
    throw std::invalid_argument("agm_init_general: starting values must be positive");
  if (a0 < b0)
    throw std::invalid_argument("agm_init_general: requires a0 >= b0");
  BigFixed c_sq = sub(mul(a0, a0), mul(b0, b0));
  return AgmState{0, a0, b0, std::move(c_sq), BigFixed::zero(a0.context())};
}

AgmState agm_step(const AgmState& st) {
  BigFixed a_next = shift_pow2(add(st.a, st.b), -1);
  BigFixed b_next = sqrt(mul(st.a, st.b));
  BigFixed half_gap = shift_pow2(sub(st.a, st.b), -1);
  BigFixed c_sq_next = mul(half_gap, half_gap);
  int n_next = st.n + 1;
  BigFixed s_next = add(st.s, shift_pow2(c_sq_next, n_next));
  return AgmState{n_next, std::move(a_next), std::move(b_next),
                  std::move(c_sq_next), std::move(s_next)};
}

BigFixed agm_output(const AgmState& st) {
  const PrecisionContext& ctx = st.a.context();
  BigFixed mean_sum = add(st.a, st.b);
  BigFixed den = sub(BigFixed::from_int(1, ctx), shift_pow2(st.s, 1));
  if (den.sign() <= 0)
    throw std::logic_error("agm_output: denominator not positive");
  return div(mul(mean_sum, mean_sum), den);
}

BigFixed agm_limit(const BigFixed& a0, const BigFixed& b0) {
  AgmState st = agm_init_general(a0, b0);
  const PrecisionContext& ctx = a0.context();
  BigFixed cutoff = BigFixed::pow2(-ctx.frac_bits + 8, ctx);
  int guard = 0;
  while (sub(st.a, st.b) >= cutoff) {
    st = agm_step(st);
    if (++guard > 200)
      throw std::logic_error("agm_limit: did not converge");
  }
  return st.a;
}

BrentSalaminRun run_brent_salamin(std::int64_t digits, std::optional<int> iterations) {
  if (digits < 1) throw std::invalid_argument("run_brent_salamin: digits must be >= 1");
  PrecisionContext ctx = PrecisionContext::make(digits);
  int n_iter = iterations ? *iterations : (int)required_iterations(digits);
  if (n_iter < 0) throw std::invalid_argument("run_brent_salamin: negative iteration count");
  std::vector<BigFixed> outputs;
  outputs.reserve((std::size_t)n_iter + 1);
  AgmState st = agm_init(ctx);
  outputs.push_back(agm_output(st));
  for (int i = 0; i < n_iter; ++i) {
    st = agm_step(st);
    outputs.push_back(agm_output(st));
  }
  std::string text = to_decimal_string(outputs.back(), digits);
  ConvergenceReport report = build_report(outputs, ctx);
  return BrentSalaminRun{std::move(text), std::move(report)};
}

}  // namespace agmpi
