#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "agmpi/convergence.hpp"
#include "agmpi/fixedpoint.hpp"

namespace agmpi {

/// One step of the coupled mean iteration: index n, the two means a_n and
/// b_n, the gap c_n^2 = a_n^2 - b_n^2, and the running weighted sum
/// S_n = sum_{j=1..n} 2^j c_j^2. Immutable value; steps produce new states.
struct AgmState {
  int n = 0;
  BigFixed a, b, c_sq, s;
};

/// a_0 = 1, b_0 = 1/sqrt(2), c_0^2 = 1 - b_0^2, S_0 = 0.
AgmState agm_init(const PrecisionContext& ctx);

/// General starting values for agm_limit and the integral oracle.
/// Requires a0 >= b0 > 0.
AgmState agm_init_general(const BigFixed& a0, const BigFixed& b0);

/// a' = (a+b)/2, b' = sqrt(a b), and the gap in its cancellation-free form
/// c'^2 = ((a-b)/2)^2; the naive a'^2 - b'^2 would lose half the working
/// digits. S picks up the exact binary-shifted term 2^(n+1) c'^2.
AgmState agm_step(const AgmState& st);

/// p_n = (a+b)^2 / (1 - 2 S_n).
BigFixed agm_output(const AgmState& st);

/// Iterates until |a - b| < 2^(-F+8) and returns a. The 8 bits of slack sit
/// above the square root's last-bit wobble.
BigFixed agm_limit(const BigFixed& a0, const BigFixed& b0);

struct BrentSalaminRun {
  std::string digits;
  ConvergenceReport report;
};

/// Computes pi to `digits` decimals with the AGM iteration, plus the
/// per-iteration report. Iteration count defaults to
/// required_iterations(digits); values are carried with the default guard
/// digits and truncated for output.
BrentSalaminRun run_brent_salamin(std::int64_t digits,
                                  std::optional<int> iterations = std::nullopt);

}  // namespace agmpi
