#pragma once

#include <string>
#include <vector>

namespace agmpi {

/// Quadrature controls. The oracle runs entirely at hardware double
/// precision: its job is independent validation of the integral identities
/// behind the AGM machinery, not high-precision evaluation.
struct QuadratureSettings {
  double target_tol = 1e-11;  // absolute tolerance per integral
  int max_refinements = 24;   // panel-doubling limit
  double tail_cutoff = 1e-20; // truncation rule for infinite-range integrands
};

struct IdentityCheck {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double abs_dev = 0;
  double tol = 0;
  bool pass = false;
};

inline constexpr double kIdentityTol = 1e-9;
inline constexpr double kGammaBetaTol = 1e-7;

/// I(a,b) = integral over [0, pi/2] of 1/sqrt(a^2 cos^2 + b^2 sin^2).
/// Composite Simpson with panel doubling until successive refinements
/// agree within target_tol/2; throws std::runtime_error past the limit.
double integral_I(double a, double b, const QuadratureSettings& qs);

/// L(a,b) = same integrand weighted by cos^2.
double integral_L(double a, double b, const QuadratureSettings& qs);

/// I(a_k, b_k) = I(a_0, b_0) for every mean-iteration step k = 1..steps.
std::vector<IdentityCheck> check_agm_invariance(double a, double b, int steps,
                                                const QuadratureSettings& qs,
                                                double tol = kIdentityTol);

/// I(a,b) = pi / (2 AGM(a,b)); the AGM comes from the fixed-point module,
/// so this pits quadrature against the production iteration.
IdentityCheck check_agm_value(double a, double b, const QuadratureSettings& qs,
                              double tol = kIdentityTol);

/// L(b,a) + L(a,b) = I(a,b).
IdentityCheck check_L_sum(double a, double b, const QuadratureSettings& qs,
                          double tol = kIdentityTol);

/// L(b,a) - L(a,b) = (a-b)/(a+b) * L(b_1, a_1) with one mean step taken.
IdentityCheck check_L_difference(double a, double b, const QuadratureSettings& qs,
                                 double tol = kIdentityTol);

/// 2 c_0^2 L(a,b) = (c_0^2 - S) I(a,b), S truncated after `terms` terms.
IdentityCheck check_sum_identity(double a, double b, int terms,
                                 const QuadratureSettings& qs,
                                 double tol = kIdentityTol);

/// I(lambda a, lambda b) = I(a,b) / lambda.
IdentityCheck check_scaling(double a, double b, double lambda,
                            const QuadratureSettings& qs,
                            double tol = kIdentityTol);

/// pi = 4 AGM(1, 1/sqrt2)^2 / (1 - 2 S) against the hardware constant.
IdentityCheck check_gauss_formula(const QuadratureSettings& qs,
                                  int terms = 30, double tol = kIdentityTol);

/// L(sqrt2, 1) * I(sqrt2, 1) = pi/4.
IdentityCheck check_legendre_point(const QuadratureSettings& qs,
                                   double tol = kIdentityTol);

/// Gamma(u) by quadrature over (0, T]; the endpoint singularity for u < 1
/// is removed by a power substitution before Simpson sees it.
double gamma_value(double u, const QuadratureSettings& qs);

/// Gamma(1/2) = sqrt(pi).
IdentityCheck check_gamma_half(const QuadratureSettings& qs,
                               double tol = kGammaBetaTol);

/// B(u,v) = Gamma(u) Gamma(v) / Gamma(u+v).
IdentityCheck check_beta_relation(double u, double v, const QuadratureSettings& qs,
                                  double tol = kGammaBetaTol);

/// (1/16) B(3/4,1/2) B(1/4,1/2) = pi/4, the Beta-function route to the
/// Legendre point value.
IdentityCheck check_beta_legendre(const QuadratureSettings& qs,
                                  double tol = kGammaBetaTol);

/// The full battery at its standard sample points; what the CLI oracle
/// command prints.
std::vector<IdentityCheck> run_standard_checks(const QuadratureSettings& qs);

}  // namespace agmpi
