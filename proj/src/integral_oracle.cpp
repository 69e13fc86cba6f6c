#include "agmpi/integral_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "agmpi/agm.hpp"
#include "agmpi/fixedpoint.hpp"

namespace agmpi {

namespace {

constexpr double kPi = 3.14159265358979323846;

template <class F>
double composite_simpson(F&& f, double a, double b, int panels) {
  double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

template <class F>
double simpson_refine(F&& f, double a, double b, const QuadratureSettings& qs) {
  int panels = 8;
  double prev = composite_simpson(f, a, b, panels);
  for (int r = 0; r < qs.max_refinements; ++r) {
    panels *= 2;
    double cur = composite_simpson(f, a, b, panels);
    if (std::abs(cur - prev) < qs.target_tol / 2) return cur;
    prev = cur;
  }
  throw std::runtime_error("quadrature did not converge within max_refinements");
}

void require_positive(double v, const char* what) {
  if (!(v > 0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

IdentityCheck make_check(std::string name, double lhs, double rhs, double tol) {
  IdentityCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.abs_dev = std::abs(lhs - rhs);
  c.tol = tol;
  c.pass = c.abs_dev < tol;
  return c;
}

struct MeanPair {
  double a, b;
};

MeanPair mean_step(MeanPair p) {
  return {(p.a + p.b) / 2, std::sqrt(p.a * p.b)};
}

/// Sum of 2^j c_j^2 for j = 1..terms with the gap in its cancellation-free
/// form c_j^2 = ((a_{j-1} - b_{j-1})/2)^2.
double weighted_gap_sum(double a, double b, int terms) {
  MeanPair p{a, b};
  double sum = 0;
  double weight = 2;
  for (int j = 1; j <= terms; ++j) {
    double half_gap = (p.a - p.b) / 2;
    sum += weight * half_gap * half_gap;
    p = mean_step(p);
    weight *= 2;
  }
  return sum;
}

/// AGM through the production fixed-point pipeline, read back as double.
double agm_via_bigfixed(double a, double b) {
  PrecisionContext ctx = PrecisionContext::make(30);
  BigFixed fa = BigFixed::from_double(a, ctx);
  BigFixed fb = BigFixed::from_double(b, ctx);
  if (fb > fa) std::swap(fa, fb);
  return to_double(agm_limit(fa, fb));
}

/// Power substitution exponent for integrating t^(u-1) * smooth near zero:
/// with t = s^p the integrand becomes p s^(pu-1) * smooth. Small rational u
/// gets an exact integer pu (fully smooth); otherwise pu - 1 >= 3.5 keeps
/// Simpson at full order.
int substitution_power(double u) {
  for (int den = 1; den <= 16; ++den) {
    double m = u * den;
    if (std::abs(m - std::round(m)) < 1e-9 && std::round(m) >= 1) return den;
  }
  return (int)std::ceil(4.5 / u);
}

}  // namespace

double integral_I(double a, double b, const QuadratureSettings& qs) {
  require_positive(a, "integral_I: a");
  require_positive(b, "integral_I: b");
  auto f = [=](double phi) {
    double c = std::cos(phi), s = std::sin(phi);
    return 1.0 / std::sqrt(a * a * c * c + b * b * s * s);
  };
  return simpson_refine(f, 0.0, kPi / 2, qs);
}

double integral_L(double a, double b, const QuadratureSettings& qs) {
  require_positive(a, "integral_L: a");
  require_positive(b, "integral_L: b");
  auto f = [=](double phi) {
    double c = std::cos(phi), s = std::sin(phi);
    return c * c / std::sqrt(a * a * c * c + b * b * s * s);
  };
  return simpson_refine(f, 0.0, kPi / 2, qs);
}

std::vector<IdentityCheck> check_agm_invariance(double a, double b, int steps,
                                                const QuadratureSettings& qs,
                                                double tol) {
  if (!(a >= b)) throw std::invalid_argument("check_agm_invariance: requires a >= b");
  double base = integral_I(a, b, qs);
  std::vector<IdentityCheck> checks;
  MeanPair p{a, b};
  for (int k = 1; k <= steps; ++k) {
    p = mean_step(p);
    checks.push_back(make_check(
        "I(a_" + std::to_string(k) + ",b_" + std::to_string(k) + ") = I(a_0,b_0)",
        integral_I(p.a, p.b, qs), base, tol));
  }
  return checks;
}

IdentityCheck check_agm_value(double a, double b, const QuadratureSettings& qs,
                              double tol) {
  double lhs = integral_I(a, b, qs);
  double rhs = kPi / (2 * agm_via_bigfixed(a, b));
  return make_check("I(a,b) = pi/(2 AGM(a,b))", lhs, rhs, tol);
}

IdentityCheck check_L_sum(double a, double b, const QuadratureSettings& qs,
                          double tol) {
  double lhs = integral_L(b, a, qs) + integral_L(a, b, qs);
  double rhs = integral_I(a, b, qs);
  return make_check("L(b,a) + L(a,b) = I(a,b)", lhs, rhs, tol);
}

IdentityCheck check_L_difference(double a, double b, const QuadratureSettings& qs,
                                 double tol) {
  if (!(a >= b)) throw std::invalid_argument("check_L_difference: requires a >= b");
  double lhs = integral_L(b, a, qs) - integral_L(a, b, qs);
  MeanPair next = mean_step({a, b});
  double rhs = a == b ? 0.0
                      : (a - b) / (a + b) * integral_L(next.b, next.a, qs);
  return make_check("L(b,a) - L(a,b) = (a-b)/(a+b) L(b1,a1)", lhs, rhs, tol);
}

IdentityCheck check_sum_identity(double a, double b, int terms,
                                 const QuadratureSettings& qs, double tol) {
  if (!(a >= b)) throw std::invalid_argument("check_sum_identity: requires a >= b");
  double c0_sq = a * a - b * b;
  double lhs = 2 * c0_sq * integral_L(a, b, qs);
  double rhs = (c0_sq - weighted_gap_sum(a, b, terms)) * integral_I(a, b, qs);
  return make_check("2 c0^2 L(a,b) = (c0^2 - S) I(a,b)", lhs, rhs, tol);
}

IdentityCheck check_scaling(double a, double b, double lambda,
                            const QuadratureSettings& qs, double tol) {
  require_positive(lambda, "check_scaling: lambda");
  double lhs = integral_I(lambda * a, lambda * b, qs);
  double rhs = integral_I(a, b, qs) / lambda;
  return make_check("I(la, lb) = I(a,b)/l", lhs, rhs, tol);
}

IdentityCheck check_gauss_formula(const QuadratureSettings&, int terms,
                                  double tol) {
  // no quadrature here: the right side is the mean iteration plus the
  // truncated sum, compared against the hardware constant
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double m = agm_via_bigfixed(1.0, inv_sqrt2);
  double value = 4 * m * m / (1 - 2 * weighted_gap_sum(1.0, inv_sqrt2, terms));
  return make_check("pi = 4 AGM(1,1/sqrt2)^2 / (1 - 2 S)", value, kPi, tol);
}

IdentityCheck check_legendre_point(const QuadratureSettings& qs, double tol) {
  double sqrt2 = std::sqrt(2.0);
  double lhs = integral_L(sqrt2, 1.0, qs) * integral_I(sqrt2, 1.0, qs);
  return make_check("L(sqrt2,1) I(sqrt2,1) = pi/4", lhs, kPi / 4, tol);
}

double gamma_value(double u, const QuadratureSettings& qs) {
  require_positive(u, "gamma_value: u");
  int p = substitution_power(u);
  double head;
  if (p == 1) {
    auto f = [=](double t) { return std::pow(t, u - 1) * std::exp(-t); };
    head = simpson_refine(f, 0.0, 1.0, qs);
  } else {
    double exponent = p * u - 1;
    auto f = [=](double s) {
      return p * std::pow(s, exponent) * std::exp(-std::pow(s, p));
    };
    head = simpson_refine(f, 0.0, 1.0, qs);
  }
  double cutoff = 35;
  while (std::pow(cutoff, u - 1) * std::exp(-cutoff) >= qs.tail_cutoff) cutoff += 5;
  auto tail = [=](double t) { return std::pow(t, u - 1) * std::exp(-t); };
  return head + simpson_refine(tail, 1.0, cutoff, qs);
}

IdentityCheck check_gamma_half(const QuadratureSettings& qs, double tol) {
  return make_check("Gamma(1/2) = sqrt(pi)", gamma_value(0.5, qs),
                    std::sqrt(kPi), tol);
}

namespace {

/// Integral of t^(u-1) (1-t)^(v-1) over [0, 1/2], singular end at 0 removed
/// by the power substitution. The full Beta integral is this plus the same
/// expression with u and v swapped.
double beta_half(double u, double v, const QuadratureSettings& qs) {
  int p = substitution_power(u);
  double upper = std::pow(0.5, 1.0 / p);
  double exponent = p * u - 1;
  auto f = [=](double s) {
    double t = std::pow(s, p);
    return p * std::pow(s, exponent) * std::pow(1 - t, v - 1);
  };
  return simpson_refine(f, 0.0, upper, qs);
}

}  // namespace

IdentityCheck check_beta_relation(double u, double v, const QuadratureSettings& qs,
                                  double tol) {
  require_positive(u, "check_beta_relation: u");
  require_positive(v, "check_beta_relation: v");
  double beta = beta_half(u, v, qs) + beta_half(v, u, qs);
  double rhs = gamma_value(u, qs) * gamma_value(v, qs) / gamma_value(u + v, qs);
  return make_check("B(u,v) = G(u)G(v)/G(u+v)", beta, rhs, tol);
}

IdentityCheck check_beta_legendre(const QuadratureSettings& qs, double tol) {
  double b1 = beta_half(0.75, 0.5, qs) + beta_half(0.5, 0.75, qs);
  double b2 = beta_half(0.25, 0.5, qs) + beta_half(0.5, 0.25, qs);
  return make_check("(1/16) B(3/4,1/2) B(1/4,1/2) = pi/4", b1 * b2 / 16,
                    kPi / 4, tol);
}

std::vector<IdentityCheck> run_standard_checks(const QuadratureSettings& qs) {
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double sqrt2 = std::sqrt(2.0);
  std::vector<IdentityCheck> checks;
  for (IdentityCheck& c : check_agm_invariance(1.0, inv_sqrt2, 4, qs))
    checks.push_back(std::move(c));
  for (IdentityCheck& c : check_agm_invariance(2.0, 1.0, 3, qs))
    checks.push_back(std::move(c));
  checks.push_back(check_agm_value(1.0, 1.0, qs));
  checks.push_back(check_agm_value(1.0, inv_sqrt2, qs));
  checks.push_back(check_agm_value(3.0, 2.0, qs));
  checks.push_back(check_L_sum(1.0, inv_sqrt2, qs));
  checks.push_back(check_L_difference(1.0, inv_sqrt2, qs));
  checks.push_back(check_L_difference(2.0, 1.0, qs));
  checks.push_back(check_sum_identity(1.0, inv_sqrt2, 30, qs));
  checks.push_back(check_sum_identity(sqrt2, 1.0, 30, qs));
  checks.push_back(check_scaling(sqrt2, 1.0, inv_sqrt2, qs));
  checks.push_back(check_scaling(1.0, 0.5, 3.0, qs));
  checks.push_back(check_gauss_formula(qs));
  checks.push_back(check_legendre_point(qs));
  checks.push_back(check_gamma_half(qs));
  checks.push_back(check_beta_relation(0.75, 0.5, qs));
  checks.push_back(check_beta_relation(0.25, 0.5, qs));
  checks.push_back(check_beta_relation(2.0, 3.0, qs));
  checks.push_back(check_beta_legendre(qs));
  return checks;
}

}  // namespace agmpi
