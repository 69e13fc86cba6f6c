#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agmpi/fixedpoint.hpp"

namespace agmpi {

/// Per-iteration convergence record for the AGM iteration output p_n.
struct ConvergenceEntry {
  int n = 0;
  std::string output_prefix;            // leading digits of p_n
  std::int64_t correct_digits = 0;      // fractional digits agreeing with the reference
  std::optional<double> log10_bound;    // a-priori error bound, n >= 1
  std::optional<double> empirical_ratio;  // |ref-p_n| / |ref-p_{n-1}|^2, when resolvable
};

struct ConvergenceReport {
  std::vector<ConvergenceEntry> entries;
  std::string reference_digits;
  int reference_iterations = 0;
};

/// log10 of the a-priori bound (2^(n+4) pi^2 - 8 pi) * exp(-2^(n+1) pi) on
/// pi - p_n. Evaluated in log space with hardware floats; for n >= 30 the
/// first term switches to (n+4) log10 2 + 2 log10 pi to avoid overflow.
/// Requires n >= 1.
double brent_bound_log10(std::int64_t n);

/// Smallest N whose bound clears the target with ten digits to spare:
/// brent_bound_log10(N) < -(digits + 10).
std::int64_t required_iterations(std::int64_t digits);

/// |pi - p_{n+1}| / |pi - p_n|^2 measured against a self-computed reference
/// at context precision. Requires n >= 1 and requested_digits >= 2^(n+3);
/// throws std::domain_error when the numerator is not resolvable.
double empirical_ratio(int n, const PrecisionContext& ctx);

/// Number of fractional decimal digits on which the two expansions agree,
/// measured as the count of leading zero fraction digits of their exact
/// decimal difference (so "…2646…" vs "…2653…" counts the near-carry digit
/// as agreeing). Both strings must start "3."; capped at the shorter
/// fraction length.
std::int64_t correct_digit_count(std::string_view candidate, std::string_view reference);

/// Runs the AGM iteration for N steps and annotates every output.
/// Reporting only; asserts nothing.
ConvergenceReport build_report(int N, const PrecisionContext& ctx);
/// Same, from precomputed outputs where outputs[n] = p_n.
ConvergenceReport build_report(const std::vector<BigFixed>& outputs,
                               const PrecisionContext& ctx);

}  // namespace agmpi
