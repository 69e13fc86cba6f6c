#include "agmpi/borwein.hpp"

#include <stdexcept>
#include <utility>

namespace agmpi {

namespace {

void check_unit_interval(const BigFixed& v, const char* what) {
  if (v.sign() < 0 || v >= BigFixed::from_int(1, v.context()))
    throw std::domain_error(std::string(what) + ": iterate left [0,1), precision exhausted");
}

}  // namespace

BorweinQuadState bb2_init(const PrecisionContext& ctx) {
  BigFixed sqrt2 = sqrt(BigFixed::from_int(2, ctx));
  BigFixed k = sub(BigFixed::from_int(3, ctx), shift_pow2(sqrt2, 1));
  BigFixed e = sub(BigFixed::from_int(6, ctx), shift_pow2(sqrt2, 2));
  return BorweinQuadState{0, std::move(k), std::move(e)};
}

BorweinQuadState bb2_step(const BorweinQuadState& st) {
  check_unit_interval(st.k, "bb2_step");
  const PrecisionContext& ctx = st.k.context();
  BigFixed one = BigFixed::from_int(1, ctx);
  BigFixed root = sqrt(mul(sub(one, st.k), add(one, st.k)));
  BigFixed k_next = div(sub(one, root), add(one, root));
  int n_next = st.n + 1;
  BigFixed one_plus = add(one, k_next);
  BigFixed e_next = sub(mul(st.e, mul(one_plus, one_plus)),
                        shift_pow2(k_next, n_next + 1));
  return BorweinQuadState{n_next, std::move(k_next), std::move(e_next)};
}

BigFixed bb2_output(const BorweinQuadState& st) {
  if (st.e.sign() <= 0) throw std::logic_error("bb2_output: e must be positive");
  return div(BigFixed::from_int(1, st.e.context()), st.e);
}

BorweinQuartState bb4_init(const PrecisionContext& ctx) {
  BigFixed sqrt2 = sqrt(BigFixed::from_int(2, ctx));
  BigFixed y = sub(sqrt2, BigFixed::from_int(1, ctx));
  BigFixed z = sub(BigFixed::from_int(6, ctx), shift_pow2(sqrt2, 2));
  return BorweinQuartState{0, std::move(y), std::move(z)};
}

BorweinQuartState bb4_step(const BorweinQuartState& st) {
  check_unit_interval(st.y, "bb4_step");
  const PrecisionContext& ctx = st.y.context();
  BigFixed one = BigFixed::from_int(1, ctx);
  BigFixed y_sq = mul(st.y, st.y);
  BigFixed inner = mul(mul(sub(one, st.y), add(one, st.y)), add(one, y_sq));
  BigFixed root = fourth_root(inner);
  BigFixed y_next = div(sub(one, root), add(one, root));
  int n_next = st.n + 1;
  BigFixed one_plus = add(one, y_next);
  BigFixed one_plus_sq = mul(one_plus, one_plus);
  BigFixed y_next_sq = mul(y_next, y_next);
  BigFixed poly = add(add(one, y_next), y_next_sq);
  BigFixed z_next = sub(mul(st.z, mul(one_plus_sq, one_plus_sq)),
                        shift_pow2(mul(y_next, poly), 2 * n_next + 1));
  return BorweinQuartState{n_next, std::move(y_next), std::move(z_next)};
}

BigFixed bb4_output(const BorweinQuartState& st) {
  if (st.z.sign() <= 0) throw std::logic_error("bb4_output: z must be positive");
  return div(BigFixed::from_int(1, st.z.context()), st.z);
}

}  // namespace agmpi
