#include "agmpi/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agmpi/agm.hpp"

namespace agmpi {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct DecimalParts {
  std::string int_part;
  std::string frac_part;
};

DecimalParts split_decimal(std::string_view s) {
  DecimalParts parts;
  std::size_t dot = s.find('.');
  std::string_view ip = dot == std::string_view::npos ? s : s.substr(0, dot);
  std::string_view fp = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (ip.empty()) throw std::invalid_argument("correct_digit_count: malformed input");
  for (char c : ip)
    if (c < '0' || c > '9') throw std::invalid_argument("correct_digit_count: malformed input");
  for (char c : fp)
    if (c < '0' || c > '9') throw std::invalid_argument("correct_digit_count: malformed input");
  parts.int_part.assign(ip);
  parts.frac_part.assign(fp);
  return parts;
}

/// Leading zero fraction digits of the exact decimal difference |a - b|,
/// capped at the shorter fraction length.
std::int64_t agreement_digits(const DecimalParts& a, const DecimalParts& b) {
  std::int64_t cap = (std::int64_t)std::min(a.frac_part.size(), b.frac_part.size());
  std::size_t ilen = std::max(a.int_part.size(), b.int_part.size());
  std::size_t flen = std::max(a.frac_part.size(), b.frac_part.size());
  auto digits_of = [&](const DecimalParts& p) {
    std::string d(ilen - p.int_part.size(), '0');
    d += p.int_part;
    d += p.frac_part;
    d.append(flen - p.frac_part.size(), '0');
    return d;
  };
  std::string da = digits_of(a), db = digits_of(b);
  if (da == db) return cap;
  if (da < db) da.swap(db);
  // exact digit subtraction da - db
  int borrow = 0;
  for (std::size_t i = da.size(); i-- > 0;) {
    int v = (da[i] - '0') - (db[i] - '0') - borrow;
    borrow = v < 0;
    da[i] = (char)('0' + v + (borrow ? 10 : 0));
  }
  for (std::size_t i = 0; i < ilen; ++i)
    if (da[i] != '0') return 0;
  std::int64_t zeros = 0;
  for (std::size_t i = ilen; i < da.size() && da[i] == '0'; ++i) ++zeros;
  return std::min(zeros, cap);
}

std::vector<BigFixed> run_agm_outputs(int last, const PrecisionContext& ctx) {
  std::vector<BigFixed> outputs;
  outputs.reserve((std::size_t)last + 1);
  AgmState st = agm_init(ctx);
  outputs.push_back(agm_output(st));
  for (int i = 0; i < last; ++i) {
    st = agm_step(st);
    outputs.push_back(agm_output(st));
  }
  return outputs;
}

std::optional<double> scaled_ratio(const BigFixed& num, const BigFixed& den,
                                   const PrecisionContext& ctx) {
  BigFixed floor_val = BigFixed::pow2(-ctx.frac_bits + 24, ctx);
  if (num < floor_val || den < floor_val) return std::nullopt;
  auto [fn, en] = frexp2(num);
  auto [fd, ed] = frexp2(den);
  return std::ldexp(fn / (fd * fd), (int)(en - 2 * ed));
}

}  // namespace

double brent_bound_log10(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("brent_bound_log10: requires n >= 1");
  double exponent_term = n + 1 <= 1023 ? std::ldexp(kPi, (int)(n + 1)) : HUGE_VAL;
  double log_first;
  if (n < 30) {
    log_first = std::log10(std::ldexp(kPi * kPi, (int)(n + 4)) - 8 * kPi);
  } else {
    // difference from the -8 pi term is negligible and the product would
    // eventually overflow
    log_first = (double)(n + 4) * std::log10(2.0) + 2 * std::log10(kPi);
  }
  return log_first - exponent_term / std::log(10.0);
}

std::int64_t required_iterations(std::int64_t digits) {
  if (digits < 1) throw std::invalid_argument("required_iterations: digits must be >= 1");
  std::int64_t n = 1;
  while (brent_bound_log10(n) >= -(double)(digits + 10)) {
    ++n;
    if (n > 128) throw std::logic_error("required_iterations: bound never cleared");
  }
  return n;
}

double empirical_ratio(int n, const PrecisionContext& ctx) {
  if (n < 1) throw std::invalid_argument("empirical_ratio: requires n >= 1");
  if (n > 56 || ctx.requested_digits < (std::int64_t)1 << (n + 3))
    throw std::domain_error("empirical_ratio: context precision insufficient");
  int n_ref = (int)required_iterations(ctx.working_digits()) + 1;
  int last = std::max(n + 1, n_ref);
  std::vector<BigFixed> outputs = run_agm_outputs(last, ctx);
  const BigFixed& ref = outputs[(std::size_t)n_ref];
  BigFixed num = sub(ref, outputs[(std::size_t)n + 1]).abs();
  BigFixed den = sub(ref, outputs[(std::size_t)n]).abs();
  std::optional<double> ratio = scaled_ratio(num, den, ctx);
  if (!ratio)
    throw std::domain_error("empirical_ratio: numerator below arithmetic noise");
  return *ratio;
}

std::int64_t correct_digit_count(std::string_view candidate, std::string_view reference) {
  if (candidate.substr(0, 2) != "3." || reference.substr(0, 2) != "3.")
    throw std::invalid_argument("correct_digit_count: inputs must begin with \"3.\"");
  return agreement_digits(split_decimal(candidate), split_decimal(reference));
}

ConvergenceReport build_report(int N, const PrecisionContext& ctx) {
  if (N < 1) throw std::invalid_argument("build_report: requires N >= 1");
  return build_report(run_agm_outputs(N, ctx), ctx);
}

ConvergenceReport build_report(const std::vector<BigFixed>& outputs,
                               const PrecisionContext& ctx) {
  if (outputs.empty()) throw std::invalid_argument("build_report: no outputs");
  ConvergenceReport report;
  report.reference_iterations = (int)required_iterations(ctx.working_digits()) + 1;
  BigFixed ref = run_agm_outputs(report.reference_iterations, ctx).back();
  report.reference_digits = to_decimal_string(ref, ctx.requested_digits);
  DecimalParts ref_parts = split_decimal(report.reference_digits);
  report.entries.reserve(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    ConvergenceEntry entry;
    entry.n = (int)i;
    std::string digits = to_decimal_string(outputs[i], ctx.requested_digits);
    entry.output_prefix = digits.substr(0, 50);
    entry.correct_digits = digits.rfind("3.", 0) == 0
                               ? agreement_digits(split_decimal(digits), ref_parts)
                               : 0;
    if (i >= 1) {
      entry.log10_bound = brent_bound_log10((std::int64_t)i);
      BigFixed num = sub(ref, outputs[i]).abs();
      BigFixed den = sub(ref, outputs[i - 1]).abs();
      entry.empirical_ratio = scaled_ratio(num, den, ctx);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace agmpi
