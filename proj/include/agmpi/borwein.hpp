#pragma once

#include "agmpi/fixedpoint.hpp"

namespace agmpi {

/// State of the quadratically convergent iteration: index n, modulus-like
/// k_n in [0, 1), and the output accumulator e_n > 0.
struct BorweinQuadState {
  int n = 0;
  BigFixed k, e;
};

/// State of the quartic iteration: index n, y_n in [0, 1), z_n > 0.
struct BorweinQuartState {
  int n = 0;
  BigFixed y, z;
};

/// k_0 = 3 - 2 sqrt(2), e_0 = 6 - 4 sqrt(2).
BorweinQuadState bb2_init(const PrecisionContext& ctx);

/// k' = (1 - sqrt(1-k^2)) / (1 + sqrt(1-k^2)), then
/// e' = e (1+k')^2 - 2^(n'+1) k' with the *new* k' and n' -- the update
/// order is forced by the recurrence and is the classic implementation
/// trap. sqrt(1-k^2) is evaluated as sqrt((1-k)(1+k)).
/// Requires 0 <= k < 1 (k = 0 is the fixed point); anything else signals
/// exhausted precision and throws std::domain_error.
BorweinQuadState bb2_step(const BorweinQuadState& st);

/// 1 / e_n.
BigFixed bb2_output(const BorweinQuadState& st);

/// y_0 = sqrt(2) - 1, z_0 = 6 - 4 sqrt(2).
BorweinQuartState bb4_init(const PrecisionContext& ctx);

/// y' = (1 - (1-y^4)^(1/4)) / (1 + (1-y^4)^(1/4)), then
/// z' = z (1+y')^4 - 2^(2n'+1) y' (1 + y' + y'^2). Same ordering rule and
/// domain contract as bb2_step; 1-y^4 is evaluated as (1-y)(1+y)(1+y^2).
BorweinQuartState bb4_step(const BorweinQuartState& st);

/// 1 / z_n.
BigFixed bb4_output(const BorweinQuartState& st);

}  // namespace agmpi
