#pragma once

#include "agmpi/fixedpoint.hpp"

namespace agmpi {

/// Measured deviations between the three pipelines' matched quantities.
/// pass compares every deviation against the tolerance; deviations are
/// reported as values so callers can apply tighter thresholds without an
/// API change. Fields for checks that did not run stay at zero.
struct EquivalenceReport {
  BigFixed max_dev_e;        // |e_n - 1/p_n|
  BigFixed max_dev_k;        // |k_n - (a_n/a_{n+1} - 1)|
  BigFixed max_dev_y;        // |y_n^2 - k_{2n}|, the squared form of y_n = sqrt(k_2n)
  BigFixed max_dev_z;        // |z_n - e_{2n}|
  BigFixed max_dev_outputs;  // |1/e_N - p_N| and |1/z_N - 1/e_{2N}|
  BigFixed tolerance;
  bool pass = false;
};

/// Default acceptance tolerance 10^-(requested + guard - 10): ten decimal
/// digits of slack absorb the differing rounding-error propagation of the
/// pipelines.
BigFixed default_equivalence_tolerance(const PrecisionContext& ctx);

/// Runs the AGM and quadratic pipelines N steps side by side and measures
/// |e_n - 1/p_n|, |k_n - (a_n/a_{n+1} - 1)| for n = 0..N plus the output
/// deviation |1/e_N - p_N|.
EquivalenceReport check_quadratic_equivalence(int N, const PrecisionContext& ctx);

/// Runs the quadratic pipeline 2N steps against the quartic pipeline N
/// steps: |y_n^2 - k_2n|, |z_n - e_2n| for n = 0..N plus the output
/// deviation |1/z_N - 1/e_2N|. The y identity is measured squared: past a
/// few steps k_2n sits below any practical working grid and the square
/// root would turn grid noise into a meaningless 1/(2 sqrt(k)) blow-up.
EquivalenceReport check_quartic_equivalence(int N, const PrecisionContext& ctx);

/// Union of both checks at the same N; pass aggregates.
EquivalenceReport check_all(int N, const PrecisionContext& ctx);

}  // namespace agmpi
